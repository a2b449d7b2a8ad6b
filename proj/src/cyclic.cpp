#include "hecke/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

bool lex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (letter_less(a[i], b[i])) return true;
    if (letter_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

std::vector<Letter> rotated(const std::vector<Letter>& l, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out.push_back(l[(start + i) % l.size()]);
  return out;
}

}  // namespace

CyclicWord CyclicWord::from_letters(std::vector<Letter> letters) {
  if (letters.empty()) throw IdentityInputError("CyclicWord: empty letter sequence");
  const std::size_t n = letters.size();
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (letters[i].is_iota() == letters[(i + 1) % n].is_iota())
        throw std::invalid_argument("CyclicWord: not cyclically reduced");
    }
  }
  return CyclicWord(std::move(letters));
}

long long CyclicWord::length() const {
  long long total = 0;
  for (const Letter& l : letters_) total += letter_weight(l);
  return total;
}

Word CyclicWord::as_word(const HeckeParams& params) const {
  return Word::from_letters(letters_, params);
}

CyclicReduction cyclic_reduce(const Word& w, const HeckeParams& params) {
  if (w.is_identity()) throw IdentityInputError("cyclic_reduce: identity input");
  std::vector<Letter> cur = w.letters();
  Word u;  // accumulated conjugator, w = u * core * u^-1
  while (cur.size() > 1 && cur.front().is_iota() == cur.back().is_iota()) {
    if (cur.front().is_iota()) {
      // i m i  ~  m
      const Letter l = cur.front();
      u = multiply(u, Word::from_letters({&l, 1}, params), params);
      cur.erase(cur.begin());
      cur.pop_back();
    } else {
      // g^a m g^b  ~  m g^(a+b)
      const Letter front = cur.front();
      u = multiply(u, Word::from_letters({&front, 1}, params), params);
      cur.erase(cur.begin());
      const long long merged = static_cast<long long>(cur.back().k) + front.k;
      cur.pop_back();
      if (auto mk = normalize_exponent(merged, params)) cur.push_back(Letter::gamma(*mk));
    }
    if (cur.empty())
      throw std::logic_error("cyclic_reduce: non-identity word reduced to nothing");
  }
  return CyclicReduction{CyclicWord::from_letters(std::move(cur)), std::move(u)};
}

std::vector<Letter> canonical_rotation(const CyclicWord& c) {
  const std::vector<Letter>& l = c.letters();
  std::vector<Letter> best = l;
  for (std::size_t s = 1; s < l.size(); ++s) {
    std::vector<Letter> cand = rotated(l, s);
    if (lex_less(cand, best)) best = std::move(cand);
  }
  return best;
}

ClassKey canonical_form(const CyclicWord& c) { return format_letters(canonical_rotation(c)); }

bool are_conjugate(const Word& a, const Word& b, const HeckeParams& params) {
  if (a.is_identity() || b.is_identity()) return a.is_identity() && b.is_identity();
  // Conjugate iff the cyclically reduced cores agree up to rotation; length-1
  // cores fall back to factor-group conjugacy, which for the abelian factors
  // is plain equality of the (normalized) letter -- the same comparison.
  return canonical_form(cyclic_reduce(a, params).core) ==
         canonical_form(cyclic_reduce(b, params).core);
}

bool is_reciprocal(const Word& w, const HeckeParams& params) {
  if (w.is_identity()) throw IdentityInputError("is_reciprocal: identity input");
  return are_conjugate(w, inverse(w, params), params);
}

bool is_hyperbolic_shape(const CyclicWord& c) {
  return c.size() >= 2 && c.size() % 2 == 0;
}

std::vector<int> syllable_exponents(const CyclicWord& c) {
  if (!is_hyperbolic_shape(c))
    throw TorsionInputError("syllable_exponents: hyperbolic-shape word required");
  const std::vector<Letter>& l = c.letters();
  const std::size_t start = l.front().is_iota() ? 0 : l.size() - 1;  // rotate to iota-led
  std::vector<int> out;
  out.reserve(l.size() / 2);
  for (std::size_t i = 1; i < l.size(); i += 2) out.push_back(l[(start + i) % l.size()].k);
  return out;
}

CyclicWord cyclic_from_syllables(const std::vector<int>& exponents, const HeckeParams& params) {
  std::vector<Letter> letters;
  letters.reserve(2 * exponents.size());
  for (int k : exponents) {
    auto nk = normalize_exponent(k, params);
    if (!nk) throw std::invalid_argument("cyclic_from_syllables: zero exponent");
    letters.push_back(Letter::iota());
    letters.push_back(Letter::gamma(*nk));
  }
  return CyclicWord::from_letters(std::move(letters));
}

PrimitiveRoot primitive_root(const CyclicWord& c, const HeckeParams& params) {
  if (!is_hyperbolic_shape(c))
    throw TorsionInputError("primitive_root: torsion-shape input");
  const std::vector<int> syl = syllable_exponents(c);
  const std::size_t s = syl.size();
  for (std::size_t d = 1; d <= s; ++d) {
    if (s % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < s && periodic; ++i) periodic = (syl[i] == syl[i - d]);
    if (periodic) {
      std::vector<int> root(syl.begin(), syl.begin() + static_cast<long>(d));
      return PrimitiveRoot{cyclic_from_syllables(root, params), static_cast<int>(s / d)};
    }
  }
  throw std::logic_error("primitive_root: unreachable");
}

}  // namespace hecke
