#include "hecke/normal_forms.hpp"

#include <algorithm>
#include <set>

#include "hecke/errors.hpp"

namespace hecke {

std::string to_string(ReciprocalType t) {
  switch (t) {
    case ReciprocalType::Symmetric: return "symmetric";
    case ReciprocalType::PReciprocal: return "p-reciprocal";
    case ReciprocalType::MixedNoPower: return "symmetric-p-reciprocal";
    case ReciprocalType::PowerOfIotaGammaTilde: return "power-of-iota-gamma-tilde";
  }
  return "?";
}

namespace {

void require_even(const HeckeParams& params, const char* what) {
  if (!params.even()) throw ParityMismatchError(std::string(what) + ": requires even p");
}

void append_syllable(std::vector<Letter>& out, long long k) {
  out.push_back(Letter::iota());
  out.push_back(Letter::gamma(static_cast<int>(k)));
}

Word word_from_syllable_stream(const std::vector<long long>& exponents,
                               const HeckeParams& params) {
  std::vector<Letter> letters;
  letters.reserve(2 * exponents.size());
  for (long long k : exponents) {
    auto nk = normalize_exponent(k, params);
    if (!nk) throw std::invalid_argument("normal form: tuple exponent is 0 mod p");
    append_syllable(letters, *nk);
  }
  return Word::from_letters(letters, params);
}

}  // namespace

Word symmetric_normal_form(std::span<const int> tuple, const HeckeParams& params) {
  if (tuple.empty()) throw std::invalid_argument("symmetric_normal_form: empty tuple");
  std::vector<long long> syl;
  for (int k : tuple) syl.push_back(k);
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) syl.push_back(-static_cast<long long>(*it));
  return word_from_syllable_stream(syl, params);
}

Word p_reciprocal_normal_form(std::span<const int> tuple, const HeckeParams& params) {
  require_even(params, "p_reciprocal_normal_form");
  if (tuple.empty()) throw std::invalid_argument("p_reciprocal_normal_form: empty tuple");
  std::vector<long long> syl;
  syl.push_back(params.r);
  for (int k : tuple) syl.push_back(k);
  syl.push_back(params.r);
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) syl.push_back(-static_cast<long long>(*it));
  return word_from_syllable_stream(syl, params);
}

Word mixed_normal_form(std::span<const int> tuple, MixedSide side, const HeckeParams& params) {
  require_even(params, "mixed_normal_form");
  if (tuple.empty()) throw std::invalid_argument("mixed_normal_form: empty tuple");
  std::vector<long long> syl;
  if (side == MixedSide::Left) syl.push_back(params.r);
  for (int k : tuple) syl.push_back(k);
  if (side == MixedSide::Right) syl.push_back(params.r);
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) syl.push_back(-static_cast<long long>(*it));
  return word_from_syllable_stream(syl, params);
}

Word power_normal_form(int k, const HeckeParams& params) {
  require_even(params, "power_normal_form");
  if (k == 0) throw std::invalid_argument("power_normal_form: k must be nonzero");
  std::vector<Letter> letters;
  if (k > 0) {
    for (int i = 0; i < k; ++i) append_syllable(letters, params.r);
  } else {
    for (int i = 0; i < -k; ++i) {
      letters.push_back(Letter::gamma(params.r));
      letters.push_back(Letter::iota());
    }
  }
  return Word::from_letters(letters, params);
}

GenResult gen_normal_form(const GenRequest& req, const HeckeParams& params) {
  if (!params.even() && req.rtype != ReciprocalType::Symmetric)
    throw ParityMismatchError("gen_normal_form: odd p admits only the symmetric form");
  Word w;
  switch (req.rtype) {
    case ReciprocalType::Symmetric: w = symmetric_normal_form(req.tuple, params); break;
    case ReciprocalType::PReciprocal: w = p_reciprocal_normal_form(req.tuple, params); break;
    case ReciprocalType::MixedNoPower: w = mixed_normal_form(req.tuple, req.side, params); break;
    case ReciprocalType::PowerOfIotaGammaTilde: w = power_normal_form(req.power_k, params); break;
  }
  bool collapses = false;
  if (params.even() && req.rtype != ReciprocalType::PowerOfIotaGammaTilde) {
    collapses = true;
    for (const Letter& l : w.letters())
      if (!l.is_iota() && l.k != params.r) collapses = false;
  }
  return GenResult{std::move(w), collapses};
}

namespace {

bool sums_to_zero_mod_p(int a, int b, const HeckeParams& params) {
  return (a + b) % params.p == 0;
}

// rot[i] = syl[(shift + i) % s]
std::vector<int> shifted(const std::vector<int>& syl, std::size_t shift) {
  std::vector<int> out(syl.size());
  for (std::size_t i = 0; i < syl.size(); ++i) out[i] = syl[(shift + i) % syl.size()];
  return out;
}

// case 1: (k_1..k_n, -k_n..-k_1); pairs (i, s-1-i) cancel mod p
bool is_symmetric_shape(const std::vector<int>& m, const HeckeParams& params) {
  const std::size_t s = m.size();
  if (s < 2 || s % 2 != 0) return false;
  for (std::size_t i = 0; i < s / 2; ++i)
    if (!sums_to_zero_mod_p(m[i], m[s - 1 - i], params)) return false;
  return true;
}

// case 2: (r, k_1..k_n, r, -k_n..-k_1)
bool is_p_reciprocal_shape(const std::vector<int>& m, const HeckeParams& params) {
  const std::size_t s = m.size();
  if (!params.even() || s < 4 || s % 2 != 0) return false;
  if (m[0] != params.r || m[s / 2] != params.r) return false;
  for (std::size_t i = 1; i < s / 2; ++i)
    if (!sums_to_zero_mod_p(m[i], m[s - i], params)) return false;
  return true;
}

// case 3 without power: (r, k_1..k_n, -k_n..-k_1), odd syllable count
bool is_mixed_shape(const std::vector<int>& m, const HeckeParams& params) {
  const std::size_t s = m.size();
  if (!params.even() || s < 3 || s % 2 == 0) return false;
  if (m[0] != params.r) return false;
  for (std::size_t i = 1; i <= (s - 1) / 2; ++i)
    if (!sums_to_zero_mod_p(m[i], m[s - i], params)) return false;
  return true;
}

bool is_power_shape(const std::vector<int>& m, const HeckeParams& params) {
  if (!params.even() || m.empty()) return false;
  return std::all_of(m.begin(), m.end(), [&](int k) { return k == params.r; });
}

enum class RotationShape { None, Symmetric, PReciprocal, Mixed, Power };

// Shape of one specific rotation under the fixed precedence.
RotationShape rotation_shape(const std::vector<int>& m, const HeckeParams& params) {
  if (is_power_shape(m, params)) return RotationShape::Power;
  if (is_p_reciprocal_shape(m, params)) return RotationShape::PReciprocal;
  if (is_mixed_shape(m, params)) return RotationShape::Mixed;
  if (is_symmetric_shape(m, params)) return RotationShape::Symmetric;
  return RotationShape::None;
}

}  // namespace

ShapeFlags match_shapes(const CyclicWord& c, const HeckeParams& params) {
  ShapeFlags flags;
  if (!is_hyperbolic_shape(c)) return flags;
  const std::vector<int> syl = syllable_exponents(c);
  flags.power = is_power_shape(syl, params);
  for (std::size_t shift = 0; shift < syl.size(); ++shift) {
    const std::vector<int> m = shifted(syl, shift);
    flags.symmetric = flags.symmetric || is_symmetric_shape(m, params);
    flags.p_reciprocal = flags.p_reciprocal || is_p_reciprocal_shape(m, params);
    flags.mixed = flags.mixed || is_mixed_shape(m, params);
  }
  return flags;
}

CyclicWord cyclic_from_key(const ClassKey& key, const HeckeParams& params) {
  const Word w = parse_word(key, params);
  if (w.is_identity()) throw IdentityInputError("cyclic_from_key: identity key");
  return CyclicWord::from_letters(w.letters());
}

ReciprocalType classify_class(const ClassKey& key, const HeckeParams& params) {
  const CyclicWord c = cyclic_from_key(key, params);
  if (!is_hyperbolic_shape(c))
    throw TorsionInputError("classify_class: torsion-shape key");
  if (!is_reciprocal(c.as_word(params), params))
    throw NotReciprocalError("classify_class: " + key);
  const ShapeFlags f = match_shapes(c, params);
  if (f.power) return ReciprocalType::PowerOfIotaGammaTilde;
  if (f.p_reciprocal) return ReciprocalType::PReciprocal;
  if (f.mixed) return ReciprocalType::MixedNoPower;
  if (f.symmetric) return ReciprocalType::Symmetric;
  throw NotReciprocalError("classify_class: reciprocal class matches no normal-form shape: " + key);
}

StructureReport structure_check(const ClassKey& key, const HeckeParams& params) {
  const CyclicWord c = cyclic_from_key(key, params);
  if (!is_hyperbolic_shape(c))
    throw TorsionInputError("structure_check: torsion-shape key");
  if (!is_reciprocal(c.as_word(params), params))
    throw NotReciprocalError("structure_check: " + key);

  StructureReport rep;
  const auto census = [&](const std::vector<int>& syl, int& sym, int& prec, int& mix, int& pow) {
    std::set<std::vector<int>> seen;
    int rotations = 0;
    for (std::size_t shift = 0; shift < syl.size(); ++shift) {
      std::vector<int> m = shifted(syl, shift);
      if (!seen.insert(m).second) continue;
      ++rotations;
      switch (rotation_shape(m, params)) {
        case RotationShape::Symmetric: ++sym; break;
        case RotationShape::PReciprocal: ++prec; break;
        case RotationShape::Mixed: ++mix; break;
        case RotationShape::Power: ++pow; break;
        case RotationShape::None: break;
      }
    }
    return rotations;
  };

  const std::vector<int> syl = syllable_exponents(c);
  rep.rotations = census(syl, rep.symmetric_w, rep.p_reciprocal_w, rep.mixed_w, rep.power_w);

  const Word winv = inverse(c.as_word(params), params);
  const CyclicWord cinv = cyclic_reduce(winv, params).core;
  census(syllable_exponents(cinv), rep.symmetric_winv, rep.p_reciprocal_winv, rep.mixed_winv,
         rep.power_winv);
  return rep;
}

}  // namespace hecke
