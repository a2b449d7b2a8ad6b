#include <random>

#include "doctest.h"
#include "hecke/cyclic.hpp"
#include "hecke/errors.hpp"
#include "hecke/word.hpp"

using namespace hecke;

namespace {

Word W(const char* text, const HeckeParams& params) { return parse_word(text, params); }

// Random raw letter stream, intentionally unreduced.
std::vector<Letter> random_letters(std::mt19937& rng, const HeckeParams& params,
                                   std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> expo(-params.p, params.p);
  std::vector<Letter> out;
  const std::size_t n = len_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (kind(rng) == 0)
      out.push_back(Letter::iota());
    else
      out.push_back(Letter::gamma(expo(rng)));
  }
  return out;
}

Word random_word(std::mt19937& rng, const HeckeParams& params, std::size_t max_len) {
  return Word::from_letters(random_letters(rng, params, max_len), params);
}

}  // namespace

TEST_CASE("normalize_exponent window") {
  HeckeParams p5(5), p4(4);
  CHECK(normalize_exponent(3, p5) == -2);
  CHECK(normalize_exponent(-2, p4) == 2);
  CHECK_FALSE(normalize_exponent(5, p5).has_value());
  CHECK(normalize_exponent(2, p4) == 2);   // +r kept for even p
  CHECK(normalize_exponent(-6, p4) == 2);  // -6 = 2 mod 4
  CHECK_FALSE(normalize_exponent(0, p4).has_value());
  CHECK(normalize_exponent(7, p5) == 2);
}

TEST_CASE("multiply reduces") {
  HeckeParams p5(5);
  CHECK(multiply(W("g^2", p5), W("g^3", p5), p5).is_identity());
  CHECK(multiply(W("i", p5), W("i", p5), p5).is_identity());
  CHECK(format_word(multiply(W("i g^2 i", p5), W("i g^1", p5), p5)) == "i g^-2");
}

TEST_CASE("inverse") {
  HeckeParams p5(5), p4(4), p3(3);
  CHECK(format_word(inverse(W("i g^1 i g^-1", p5), p5)) == "g^1 i g^-1 i");
  CHECK(format_word(inverse(W("i", p3), p3)) == "i");
  CHECK(format_word(inverse(W("g^2", p4), p4)) == "g^2");
}

TEST_CASE("word_length") {
  HeckeParams p5(5), p3(3);
  CHECK(word_length(W("i g^2 i g^-1", p5)) == 5);
  CHECK(word_length(W("i", p5)) == 1);
  CHECK(word_length(W("i g^1 i g^1 i g^-1 i g^-1", p3)) == 8);
  CHECK(word_length(Word{}) == 0);
}

TEST_CASE("cyclic_reduce") {
  HeckeParams p5(5), p3(3);
  {
    auto [core, u] = cyclic_reduce(W("g^-1 i g^1 i g^2", p5), p5);
    CHECK(canonical_form(core) == canonical_form(CyclicWord::from_letters(W("i g^1 i g^1", p5).letters())));
    CHECK(format_word(u) == "g^-1");
  }
  {
    auto [core, u] = cyclic_reduce(W("i g^1 i g^-1", p3), p3);
    CHECK(format_letters(core.letters()) == "i g^1 i g^-1");
    CHECK(u.is_identity());
  }
  {
    auto [core, u] = cyclic_reduce(W("i g^2 i", p5), p5);
    CHECK(format_letters(core.letters()) == "g^2");
    CHECK(format_word(u) == "i");
  }
  CHECK_THROWS_AS(cyclic_reduce(Word{}, p5), IdentityInputError);
}

TEST_CASE("cyclic_reduce conjugator identity w = u c u^-1") {
  std::mt19937 rng(20240517);
  for (int p : {3, 4, 5, 6}) {
    HeckeParams params(p);
    for (int it = 0; it < 200; ++it) {
      Word w = random_word(rng, params, 12);
      if (w.is_identity()) continue;
      auto [core, u] = cyclic_reduce(w, params);
      Word rebuilt =
          multiply(multiply(u, core.as_word(params), params), inverse(u, params), params);
      CHECK(rebuilt == w);
    }
  }
}

TEST_CASE("canonical_form picks the minimal rotation") {
  HeckeParams p3(3), p5(5);
  CHECK(canonical_form(CyclicWord::from_letters(W("i g^-1 i g^1", p3).letters())) ==
        "i g^1 i g^-1");
  CHECK(canonical_form(CyclicWord::from_letters(W("g^2", p5).letters())) == "g^2");
  CHECK(canonical_form(CyclicWord::from_letters(W("i g^1 i g^1", p3).letters())) == "i g^1 i g^1");
}

TEST_CASE("are_conjugate") {
  HeckeParams p3(3), p5(5);
  CHECK(are_conjugate(W("i g^1 i g^-1", p3), W("i g^-1 i g^1", p3), p3));
  CHECK_FALSE(are_conjugate(W("i g^1", p3), W("i g^-1", p3), p3));
  CHECK_FALSE(are_conjugate(W("g^1", p5), W("g^2", p5), p5));
  CHECK(are_conjugate(Word{}, Word{}, p3));
  CHECK_FALSE(are_conjugate(Word{}, W("i", p3), p3));
}

TEST_CASE("is_reciprocal") {
  HeckeParams p3(3), p4(4);
  CHECK(is_reciprocal(W("i g^1 i g^-1", p3), p3));
  CHECK_FALSE(is_reciprocal(W("i g^1 i g^1", p3), p3));
  CHECK(is_reciprocal(W("g^2", p4), p4));
  CHECK_THROWS_AS(is_reciprocal(Word{}, p3), IdentityInputError);
}

TEST_CASE("primitive_root") {
  HeckeParams p3(3);
  {
    auto c = CyclicWord::from_letters(W("i g^1 i g^-1 i g^1 i g^-1", p3).letters());
    auto [root, k] = primitive_root(c, p3);
    CHECK(k == 2);
    CHECK(canonical_form(root) == "i g^1 i g^-1");
  }
  {
    auto c = CyclicWord::from_letters(W("i g^1 i g^-1", p3).letters());
    CHECK(primitive_root(c, p3).exponent == 1);
  }
  {
    auto c = CyclicWord::from_letters(W("i g^1 i g^1 i g^-1 i g^-1", p3).letters());
    CHECK(primitive_root(c, p3).exponent == 1);
  }
  CHECK_THROWS_AS(primitive_root(CyclicWord::from_letters(W("g^1", p3).letters()), p3),
                  TorsionInputError);
}

TEST_CASE("parse and format") {
  HeckeParams p5(5), p3(3);
  CHECK(format_word(W("i g^3 i", p5)) == "i g^-2 i");
  CHECK(W("i i", p5).is_identity());
  CHECK(format_word(W("g^1 g^1", p3)) == "g^-1");
  CHECK(format_word(W("e", p3)) == "e");
  CHECK(format_word(W("g^0", p3)) == "e");
  CHECK_THROWS_AS(W("i q", p3), ParseError);
  CHECK_THROWS_AS(W("g^x", p3), ParseError);
  CHECK_THROWS_AS(W("e i", p3), ParseError);
  try {
    W("i g^1 zz", p3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("parse/format round trip on random words") {
  std::mt19937 rng(7);
  for (int p : {3, 4, 7}) {
    HeckeParams params(p);
    for (int it = 0; it < 200; ++it) {
      Word w = random_word(rng, params, 14);
      CHECK(parse_word(format_word(w), params) == w);
    }
  }
}

TEST_CASE("reduction confluence: left and right folds agree") {
  std::mt19937 rng(99);
  for (int p : {3, 4, 5, 6, 7}) {
    HeckeParams params(p);
    for (int it = 0; it < 300; ++it) {
      const std::vector<Letter> raw = random_letters(rng, params, 16);
      const Word left = Word::from_letters(raw, params);
      // right-to-left: fold each letter as a one-letter word multiplied in front
      Word right;
      for (auto it2 = raw.rbegin(); it2 != raw.rend(); ++it2) {
        const Letter l = *it2;
        right = multiply(Word::from_letters({&l, 1}, params), right, params);
      }
      CHECK(left == right);
    }
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937 rng(1234);
  for (int p : {3, 4, 5}) {
    HeckeParams params(p);
    for (int it = 0; it < 150; ++it) {
      Word a = random_word(rng, params, 10);
      Word b = random_word(rng, params, 10);
      Word c = random_word(rng, params, 10);
      CHECK(multiply(multiply(a, b, params), c, params) ==
            multiply(a, multiply(b, c, params), params));
      CHECK(multiply(a, inverse(a, params), params).is_identity());
      CHECK(word_length(a) == word_length(inverse(a, params)));
    }
  }
}

TEST_CASE("conjugation invariance of the class key") {
  std::mt19937 rng(4321);
  for (int p : {3, 4, 5, 6}) {
    HeckeParams params(p);
    int done = 0;
    while (done < 100) {
      Word w = random_word(rng, params, 10);
      Word u = random_word(rng, params, 8);
      if (w.is_identity()) continue;
      Word conj = multiply(multiply(u, w, params), inverse(u, params), params);
      if (conj.is_identity()) continue;
      CHECK(canonical_form(cyclic_reduce(conj, params).core) ==
            canonical_form(cyclic_reduce(w, params).core));
      // reciprocity is a class function and stable under inversion
      CHECK(is_reciprocal(w, params) == is_reciprocal(conj, params));
      CHECK(is_reciprocal(w, params) == is_reciprocal(inverse(w, params), params));
      ++done;
    }
  }
}

TEST_CASE("primitive_root idempotence") {
  std::mt19937 rng(555);
  for (int p : {3, 4, 5}) {
    HeckeParams params(p);
    int done = 0;
    while (done < 100) {
      Word w = random_word(rng, params, 12);
      if (w.is_identity()) continue;
      auto core = cyclic_reduce(w, params).core;
      if (!is_hyperbolic_shape(core)) continue;
      auto [root, k] = primitive_root(core, params);
      CHECK(primitive_root(root, params).exponent == 1);
      CHECK(static_cast<long long>(k) * root.length() == core.length());
      ++done;
    }
  }
}
