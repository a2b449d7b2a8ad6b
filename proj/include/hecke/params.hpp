#pragma once

#include <stdexcept>
#include <vector>

namespace hecke {

enum class Parity { Odd, Even };

/// Group parameter of the Hecke group Z_2 * Z_p, p >= 3.
///
/// Exponents of the order-p generator are kept in the half-open window
/// (-p/2, p/2]: {-r,...,-1,1,...,r} for odd p and {-r+1,...,-1,1,...,r}
/// for even p = 2r, where the ambiguous -r is always stored as +r.
struct HeckeParams {
  int p;
  int r;
  Parity parity;

  explicit HeckeParams(int p_)
      : p(p_), r(p_ / 2), parity(p_ % 2 == 0 ? Parity::Even : Parity::Odd) {
    if (p_ < 3) throw std::invalid_argument("HeckeParams: p must be >= 3");
  }

  bool even() const { return parity == Parity::Even; }
  int min_exponent() const { return even() ? -r + 1 : -r; }
  int max_exponent() const { return r; }

  /// The normalized nonzero exponent alphabet, ascending.
  std::vector<int> exponent_alphabet() const {
    std::vector<int> out;
    for (int k = min_exponent(); k <= max_exponent(); ++k)
      if (k != 0) out.push_back(k);
    return out;
  }
};

}  // namespace hecke
