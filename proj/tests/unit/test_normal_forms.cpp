#include <random>

#include "doctest.h"
#include "hecke/enumerate.hpp"
#include "hecke/errors.hpp"
#include "hecke/normal_forms.hpp"

using namespace hecke;

TEST_CASE("gen_normal_form shapes and lengths") {
  HeckeParams p5(5), p4(4);
  {
    const std::vector<int> t{2, -1};
    GenResult g = gen_normal_form({ReciprocalType::Symmetric, t, 0, MixedSide::Left}, p5);
    CHECK(format_word(g.word) == "i g^2 i g^-1 i g^1 i g^-2");
    CHECK(word_length(g.word) == 10);
    CHECK_FALSE(g.collapses_to_power);
  }
  {
    const std::vector<int> t{1};
    GenResult g = gen_normal_form({ReciprocalType::PReciprocal, t, 0, MixedSide::Left}, p4);
    CHECK(format_word(g.word) == "i g^2 i g^1 i g^2 i g^-1");
    CHECK(word_length(g.word) == 10);
  }
  {
    GenResult g = gen_normal_form({ReciprocalType::PowerOfIotaGammaTilde, {}, 2, MixedSide::Left}, p4);
    CHECK(format_word(g.word) == "i g^2 i g^2");
    CHECK(word_length(g.word) == 6);
  }
}

TEST_CASE("gen_normal_form parity errors and power collapse") {
  HeckeParams p5(5), p4(4);
  CHECK_THROWS_AS(gen_normal_form({ReciprocalType::PReciprocal, {1}, 0, MixedSide::Left}, p5),
                  ParityMismatchError);
  CHECK_THROWS_AS(gen_normal_form({ReciprocalType::PowerOfIotaGammaTilde, {}, 2, MixedSide::Left}, p5),
                  ParityMismatchError);
  // symmetric tuple (r) with even p collapses to (i g^r)^2
  GenResult g = gen_normal_form({ReciprocalType::Symmetric, {2}, 0, MixedSide::Left}, p4);
  CHECK(g.collapses_to_power);
  CHECK(format_word(g.word) == "i g^2 i g^2");
}

TEST_CASE("mixed sides are conjugate up to tuple reversal-negation") {
  HeckeParams p4(4);
  Word left = mixed_normal_form(std::vector<int>{1}, MixedSide::Left, p4);
  Word right = mixed_normal_form(std::vector<int>{1}, MixedSide::Right, p4);
  CHECK(format_word(left) == "i g^2 i g^1 i g^-1");
  CHECK(format_word(right) == "i g^1 i g^2 i g^-1");
  CHECK(word_length(left) == 7);
  // left(t) is a rotation of right(-t_n..-t_1), not of right(t)
  Word right_paired = mixed_normal_form(std::vector<int>{-1}, MixedSide::Right, p4);
  CHECK(are_conjugate(left, right_paired, p4));
  CHECK_FALSE(are_conjugate(left, right, p4));
}

TEST_CASE("generator soundness: normal forms are reciprocal") {
  std::mt19937 rng(2468);
  for (int p : {3, 4, 5, 6, 7}) {
    HeckeParams params(p);
    const auto alphabet = params.exponent_alphabet();
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> nlen(1, 4);
    for (int it = 0; it < 100; ++it) {
      std::vector<int> t;
      for (int i = nlen(rng); i > 0; --i) t.push_back(alphabet[pick(rng)]);
      CHECK(is_reciprocal(symmetric_normal_form(t, params), params));
      if (params.even()) {
        CHECK(is_reciprocal(p_reciprocal_normal_form(t, params), params));
        CHECK(is_reciprocal(mixed_normal_form(t, MixedSide::Left, params), params));
        CHECK(is_reciprocal(mixed_normal_form(t, MixedSide::Right, params), params));
        CHECK(is_reciprocal(power_normal_form(2 + it % 3, params), params));
      }
    }
  }
}

TEST_CASE("classify_class") {
  HeckeParams p3(3), p4(4);
  CHECK(classify_class("i g^1 i g^-1", p3) == ReciprocalType::Symmetric);
  CHECK(classify_class("i g^2 i g^1 i g^2 i g^-1", p4) == ReciprocalType::PReciprocal);
  CHECK(classify_class("i g^2 i g^2", p4) == ReciprocalType::PowerOfIotaGammaTilde);
  CHECK(classify_class("i g^2 i g^1 i g^-1", p4) == ReciprocalType::MixedNoPower);
  CHECK_THROWS_AS(classify_class("i g^1 i g^1", p3), NotReciprocalError);
  CHECK_THROWS_AS(classify_class("g^1", p3), TorsionInputError);
}

TEST_CASE("structure_check rotation census") {
  HeckeParams p3(3), p4(4);
  {
    StructureReport r = structure_check("i g^1 i g^-1", p3);
    CHECK(r.symmetric_w == 2);
    CHECK(r.symmetric_winv == 2);
    CHECK(r.symmetric_w + r.symmetric_winv == 4);
  }
  {
    StructureReport r = structure_check("i g^2 i g^2", p4);
    CHECK(r.power_w == 1);
    CHECK(r.symmetric_w == 0);
  }
  {
    // class of the symmetric tuple (1,1) at p=3
    Word w = symmetric_normal_form(std::vector<int>{1, 1}, p3);
    StructureReport r = structure_check(canonical_form(cyclic_reduce(w, p3).core), p3);
    CHECK(r.symmetric_w == 2);
    CHECK(r.symmetric_winv == 2);
  }
}

TEST_CASE("shape flags can overlap: square of a mixed word") {
  HeckeParams p4(4);
  Word m = mixed_normal_form(std::vector<int>{1}, MixedSide::Left, p4);
  Word sq = multiply(m, m, p4);
  const CyclicWord c = cyclic_reduce(sq, p4).core;
  const ShapeFlags f = match_shapes(c, p4);
  CHECK(f.symmetric);
  CHECK(f.p_reciprocal);
  CHECK_FALSE(f.power);
  CHECK(classify_class(canonical_form(c), p4) == ReciprocalType::PReciprocal);
}
