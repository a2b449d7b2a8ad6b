#pragma once

#include <string>
#include <vector>

#include "hecke/word.hpp"

namespace hecke {

/// Cyclically reduced word, read cyclically. Never empty.
///
/// Hyperbolic-shape instances alternate Iota / GammaPow letters around the
/// cycle (even letter count); the 1-letter instances are torsion shaped.
class CyclicWord {
 public:
  /// Validates cyclic reducedness (adjacent letters, including last-to-first,
  /// of different kinds unless the word has a single letter).
  static CyclicWord from_letters(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  long long length() const;

  /// The underlying element as a linear reduced word.
  Word as_word(const HeckeParams& params) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

/// Serialized canonical rotation; equality of keys is conjugacy for
/// hyperbolic-shape words and factor-group conjugacy for torsion shapes.
using ClassKey = std::string;

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

/// Throws IdentityInputError for the identity.
CyclicReduction cyclic_reduce(const Word& w, const HeckeParams& params);

/// Lexicographically minimal rotation under letter_less, as letters.
std::vector<Letter> canonical_rotation(const CyclicWord& c);
ClassKey canonical_form(const CyclicWord& c);

bool are_conjugate(const Word& a, const Word& b, const HeckeParams& params);

/// Conjugacy of w and w^-1. Throws IdentityInputError for the identity.
bool is_reciprocal(const Word& w, const HeckeParams& params);

bool is_hyperbolic_shape(const CyclicWord& c);

struct PrimitiveRoot {
  CyclicWord root;
  int exponent;  // c = root^exponent as a cyclic sequence; 1 means primitive
};

/// Smallest-period cyclic root of a hyperbolic-shape cyclic word.
/// Throws TorsionInputError for torsion shapes.
PrimitiveRoot primitive_root(const CyclicWord& c, const HeckeParams& params);

/// Exponent sequence (k_1..k_s) of the iota-led rotation of a
/// hyperbolic-shape cyclic word  i g^{k_1} i g^{k_2} ... i g^{k_s}.
std::vector<int> syllable_exponents(const CyclicWord& c);
CyclicWord cyclic_from_syllables(const std::vector<int>& exponents, const HeckeParams& params);

}  // namespace hecke
