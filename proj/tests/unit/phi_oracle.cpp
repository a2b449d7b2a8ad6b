#include "phi_oracle.hpp"

#include <stdexcept>

namespace hecke_test {

namespace {

const MpFloat kPi("3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798");

// erf(t) = (2/sqrt(pi)) * sum_k (-1)^k t^(2k+1) / (k! (2k+1)),  |t| small
MpFloat erf_series(const MpFloat& t) {
  MpFloat term = t;  // k = 0 term before the 2/sqrt(pi) factor
  MpFloat sum = t;
  const MpFloat t2 = t * t;
  for (int k = 1; k < 500; ++k) {
    term *= -t2 / k;
    const MpFloat contrib = term / (2 * k + 1);
    sum += contrib;
    if (abs(contrib) < abs(sum) * MpFloat("1e-70")) break;
  }
  return sum * 2 / sqrt(kPi);
}

// erfc(t) * sqrt(pi) * exp(t^2) = 1 / (t + (1/2)/(t + 1/(t + (3/2)/(t + ...))))
// evaluated bottom-up with a fixed depth; solid for t >= 2.
MpFloat erfc_cf(const MpFloat& t) {
  const int depth = 400;
  MpFloat f = 0;
  for (int k = depth; k >= 1; --k) f = (MpFloat(k) / 2) / (t + f);
  return exp(-t * t) / ((t + f) * sqrt(kPi));
}

MpFloat erfc_oracle(const MpFloat& t) {
  if (t < 0) return 2 - erfc_oracle(-t);
  if (t < 2) return 1 - erf_series(t);
  return erfc_cf(t);
}

}  // namespace

MpFloat phi_oracle(const MpFloat& z) { return erfc_oracle(-z / sqrt(MpFloat(2))) / 2; }

MpFloat log_phi_oracle(const MpFloat& z) {
  const MpFloat v = phi_oracle(z);
  if (v <= 0) throw std::domain_error("log_phi_oracle: vanished");
  if (z > 4) {
    // avoid cancellation in log(1 - tiny)
    const MpFloat q = phi_oracle(-z);
    return log1p(-q);
  }
  return log(v);
}

}  // namespace hecke_test
