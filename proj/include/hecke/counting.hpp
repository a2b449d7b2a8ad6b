#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "hecke/params.hpp"

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;

/// Which of the paper's counting problems the alphabet/parameters describe.
enum class Setting { Thm1, Thm2, Lemma42, Lemma43 };

std::string to_string(Setting s);
Setting setting_from_string(const std::string& name);

struct WeightAlphabet {
  struct Entry {
    int weight;
    int multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // weights strictly increasing
  int min_weight() const { return entries.empty() ? 0 : entries.front().weight; }
};

/// Syllable-weight alphabets:
///   thm1    (odd p):  weight 2(j+1), j = 1..r, multiplicity 2
///   thm2    (even p): weight 2(j+1), j = 1..r-1, multiplicity 2; weight 2(r+1) once
///   lemma42:          weight j, j = 1..r-1, multiplicity 2; weight r once
///   lemma43:          weight j, j = 1..r, multiplicity 2
/// Throws ParityMismatchError when the theorem settings disagree with p.
WeightAlphabet syllable_alphabet(const HeckeParams& params, Setting setting);

/// Exact composition counts by total weight; T(0) = 1 is the empty tuple.
/// by_tuple_len[n][s] resolves T by the number of tuple entries.
struct WeightCountTable {
  std::vector<BigInt> total;                       // T(s), s = 0..x
  std::vector<std::vector<BigInt>> by_tuple_len;   // [n][s], n = 0..max feasible
  BigInt cumulative(long long x) const;            // sum of T(1..x)
};

WeightCountTable dp_weight_counts(const WeightAlphabet& alphabet, long long x);

/// Number of nonempty tuples of total weight <= x.
BigInt count_solutions(const WeightAlphabet& alphabet, long long x);

/// Exact count of classes matching the symmetric (case 1) normal-form shape,
/// word length <= x. Odd p: tuple count / 2. Even p: (tuple count + S)/2 where
/// S counts the classes owning a single symmetric-form rotation: even powers
/// of odd-syllable-period pivot words, including every (i g^r)^{2m}.
BigInt symmetric_class_count_exact(const HeckeParams& params, long long x);

/// The even-p singleton correction S(x) described above (0 for odd p).
BigInt symmetric_singleton_correction(const HeckeParams& params, long long x);

/// Classes of the shape (i g^r)^{2m} with length <= x: floor(x / (2(r+1))).
/// This is the offset between the symmetric-shape count and the count of
/// classes classified Symmetric under the power-first precedence.
long long power_form_offset(const HeckeParams& params, long long x);

}  // namespace hecke
