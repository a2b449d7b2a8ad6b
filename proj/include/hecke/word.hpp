#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/params.hpp"

namespace hecke {

/// One letter of a reduced word: the involution iota or a nonzero power of gamma.
struct Letter {
  enum class Kind { Iota, GammaPow };
  Kind kind = Kind::Iota;
  int k = 0;  // exponent, meaningful for GammaPow only; always normalized and nonzero

  static Letter iota() { return Letter{Kind::Iota, 0}; }
  static Letter gamma(int k) { return Letter{Kind::GammaPow, k}; }
  bool is_iota() const { return kind == Kind::Iota; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Fixed total order used for canonical rotations:
/// Iota < GammaPow, gamma powers by |k| ascending, positive before negative.
bool letter_less(const Letter& a, const Letter& b);

/// Representative of k mod p in (-p/2, p/2]; nullopt when k = 0 mod p.
std::optional<int> normalize_exponent(long long k, const HeckeParams& params);

/// Reduced word in the free product; the empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Builds a word from an arbitrary letter stream, normalizing exponents
  /// and cancelling until reduced.
  static Word from_letters(std::span<const Letter> letters, const HeckeParams& params);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word multiply(const Word&, const Word&, const HeckeParams&);
  friend Word inverse(const Word&, const HeckeParams&);
  explicit Word(std::vector<Letter> raw) : letters_(std::move(raw)) {}

  std::vector<Letter> letters_;
};

Word multiply(const Word& a, const Word& b, const HeckeParams& params);
Word inverse(const Word& w, const HeckeParams& params);

/// Number of generators in the reduced spelling: one per iota plus |k| per gamma power.
long long word_length(const Word& w);
long long letter_weight(const Letter& l);

/// Grammar (whitespace-separated): word := term (SP term)* | "e"; term := "i" | "g^" INT.
/// Parsing normalizes exponents and reduces; throws ParseError on malformed input.
Word parse_word(std::string_view text, const HeckeParams& params);

/// Canonical rendering; the identity prints "e".
std::string format_word(const Word& w);
std::string format_letters(std::span<const Letter> letters);

}  // namespace hecke
