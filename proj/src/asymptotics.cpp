#include "hecke/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hecke/enumerate.hpp"
#include "hecke/errors.hpp"

namespace hecke {

namespace {
constexpr double kLn2Pi = 1.8378770664093454835606594728112353;  // ln(2 pi)
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
}  // namespace

double phi_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double log_phi_cdf(double z) {
  if (z >= 0) return std::log1p(-0.5 * std::erfc(z * kInvSqrt2));
  if (z >= -8.0) return std::log(0.5 * std::erfc(-z * kInvSqrt2));
  // Mills ratio: Phi(z) = phi(z)/(-z) * (1 - 1/z^2 + 3/z^4 - 15/z^6 + ...),
  // truncated at the smallest term of the asymptotic series.
  const double zz = z * z;
  double term = 1.0, series = 1.0, prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -(2.0 * k - 1.0) / zz;
    if (std::abs(term) >= prev) break;
    series += term;
    prev = std::abs(term);
  }
  return -0.5 * zz - std::log(-z) - 0.5 * kLn2Pi + std::log(series);
}

long long CltParams::n_full_max(long long x) const {
  switch (setting) {
    case Setting::Thm1:
    case Setting::Thm2: return x / (2LL * (r + 1));
    case Setting::Lemma42:
    case Setting::Lemma43: return x / r;
  }
  return 0;
}

long long CltParams::n_tail_max(long long x) const {
  switch (setting) {
    case Setting::Thm1:
    case Setting::Thm2: return x / 4;
    case Setting::Lemma42:
    case Setting::Lemma43: return x;
  }
  return 0;
}

CltParams clt_params(const HeckeParams& params, Setting setting) {
  const long long r = params.r;
  CltParams out;
  out.setting = setting;
  out.r = params.r;
  switch (setting) {
    case Setting::Thm1:
      if (params.even()) throw ParityMismatchError("thm1 parameters require odd p");
      out.mu = Rational(r + 3);
      out.sigma2 = Rational(r * r - 1, 3);
      out.base = 2 * r;
      out.half = true;
      break;
    case Setting::Thm2:
      if (!params.even()) throw ParityMismatchError("thm2 parameters require even p");
      out.mu = Rational(2 * r * r + 4 * r - 2, 2 * r - 1);
      out.sigma2 = Rational(16 * r * r * r + 36 * r * r + 32 * r - 12, 6 * (2 * r - 1));
      out.base = 2 * r - 1;
      out.half = true;
      break;
    case Setting::Lemma42:
      out.mu = Rational(r * r, 2 * r - 1);
      out.sigma2 = Rational(r * r * r * r - 2 * r * r * r + 2 * r * r - r,
                            3 * (2 * r - 1) * (2 * r - 1));
      out.base = 2 * r - 1;
      out.half = false;
      break;
    case Setting::Lemma43:
      // the lemma's proof value (r^2 - 1)/12, not the statement's r^2/12
      out.mu = Rational(r + 1, 2);
      out.sigma2 = Rational(r * r - 1, 12);
      out.base = 2 * r;
      out.half = false;
      break;
  }
  return out;
}

double log10_big(const BigInt& v) {
  if (v <= 0) throw std::invalid_argument("log10_big: positive value required");
  const std::string s = v.str();
  const std::size_t head = std::min<std::size_t>(s.size(), 24);
  long double mant = 0;
  for (std::size_t i = 0; i < head; ++i) mant = mant * 10 + (s[i] - '0');
  return static_cast<double>(std::log10(mant) + static_cast<long double>(s.size() - head));
}

namespace {

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

std::string scientific_from_log10(double log10_value) {
  const double e = std::floor(log10_value);
  double mant = std::pow(10.0, log10_value - e);
  // guard against mantissa rounding to 10
  double exp10 = e;
  if (mant >= 10.0) {
    mant /= 10.0;
    exp10 += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9fe%+d", mant, static_cast<int>(exp10));
  return buf;
}

}  // namespace

EstimateValue estimate_count(const HeckeParams& params, Setting setting, long long x) {
  const CltParams cp = clt_params(params, setting);
  const long long n_full = std::max<long long>(0, cp.n_full_max(x));
  const long long n_tail = cp.n_tail_max(x);

  const double half_ln = cp.half ? std::log(2.0) : 0.0;
  BigInt full_sum = 0;
  BigInt power = 1;
  EstimateValue out;
  for (long long n = 1; n <= n_full; ++n) {
    power *= cp.base;
    full_sum += power;
    out.term_breakdown.emplace_back(
        n, static_cast<double>(n) * std::log(double(cp.base)) - half_ln);
  }

  const double mu = static_cast<double>(boost::multiprecision::numerator(cp.mu)) /
                    static_cast<double>(boost::multiprecision::denominator(cp.mu));
  const double sigma2 = static_cast<double>(boost::multiprecision::numerator(cp.sigma2)) /
                        static_cast<double>(boost::multiprecision::denominator(cp.sigma2));
  const double sigma = std::sqrt(sigma2);
  const double ln_base = std::log(static_cast<double>(cp.base));

  double tail_log = -std::numeric_limits<double>::infinity();
  double prev_z = std::numeric_limits<double>::infinity();
  for (long long n = n_full + 1; n <= n_tail; ++n) {
    if (sigma == 0)
      throw std::logic_error("estimate_count: Phi tail requested with zero variance");
    const double z = (static_cast<double>(x) - static_cast<double>(n) * mu) /
                     (std::sqrt(static_cast<double>(n)) * sigma);
    if (z >= prev_z)
      throw std::logic_error("estimate_count: z_n is not strictly decreasing");
    prev_z = z;
    const double term = static_cast<double>(n) * ln_base + log_phi_cdf(z);
    out.term_breakdown.emplace_back(n, term - half_ln);
    tail_log = log_add_exp(tail_log, term);
  }

  const bool tail_empty = n_tail <= n_full;
  if (tail_empty) {
    BigInt value = full_sum;
    bool exact = true;
    if (cp.half) {
      if (value % 2 == 0)
        value /= 2;
      else
        exact = false;
    }
    if (exact) {
      out.exact = true;
      out.exact_value = value;
      out.decimal_string = value.str();
      out.log10_value = value > 0 ? log10_big(value) : -std::numeric_limits<double>::infinity();
      return out;
    }
  }

  double total_log = tail_log;
  if (full_sum > 0) total_log = log_add_exp(total_log, log10_big(full_sum) * std::log(10.0));
  if (cp.half) total_log -= std::log(2.0);
  out.log10_value = total_log / std::log(10.0);
  out.decimal_string = scientific_from_log10(out.log10_value);
  return out;
}

double ratio_exact_over_estimate(const BigInt& exact, const EstimateValue& est) {
  return std::pow(10.0, log10_big(exact) - est.log10_value);
}

namespace {

BigInt count_with_length_at_most(const std::vector<ReciprocalClassRecord>& classes, long long x) {
  BigInt n = 0;
  for (const auto& r : classes)
    if (r.length <= x) ++n;
  return n;
}

}  // namespace

Lemma71Report check_lemma71(const HeckeParams& params, long long x) {
  const auto classes = enumerate_reciprocal_classes(params, x);
  Lemma71Report rep;
  for (const auto& r : classes)
    if (!r.primitive) ++rep.nonprimitive;
  rep.w_half = count_with_length_at_most(classes, x / 2);
  rep.rhs_proof = BigInt(x) * (x + 1) / 2 * rep.w_half;
  rep.rhs_statement = BigInt(2) * x * (x + 1) * rep.w_half;
  rep.holds_proof = rep.nonprimitive <= rep.rhs_proof;
  rep.holds_statement = rep.nonprimitive <= rep.rhs_statement;
  return rep;
}

Lemma72Report check_lemma72(const HeckeParams& params, long long x) {
  const auto classes = enumerate_reciprocal_classes(params, x);
  Lemma72Report rep;
  rep.w_x = count_with_length_at_most(classes, x);
  rep.w_half = count_with_length_at_most(classes, x / 2);
  if (rep.w_x == 0) throw EmptyCountError("check_lemma72: no classes up to x");
  rep.min_c = std::sqrt(2.0 * static_cast<double>(rep.w_half) * static_cast<double>(rep.w_half) /
                        static_cast<double>(rep.w_x));
  return rep;
}

std::vector<PrimitiveRatioPoint> primitive_ratio_series(const HeckeParams& params,
                                                        const std::vector<long long>& grid) {
  long long x_max = 0;
  for (long long x : grid) x_max = std::max(x_max, x);
  const auto classes = enumerate_reciprocal_classes(params, x_max);
  std::vector<PrimitiveRatioPoint> out;
  out.reserve(grid.size());
  for (long long x : grid) {
    PrimitiveRatioPoint pt;
    pt.x = x;
    for (const auto& r : classes) {
      if (r.length > x) continue;
      ++pt.total;
      if (r.primitive) ++pt.primitive;
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace hecke
