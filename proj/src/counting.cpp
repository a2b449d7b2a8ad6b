#include "hecke/counting.hpp"

#include <stdexcept>

#include "hecke/errors.hpp"

namespace hecke {

std::string to_string(Setting s) {
  switch (s) {
    case Setting::Thm1: return "thm1";
    case Setting::Thm2: return "thm2";
    case Setting::Lemma42: return "lemma42";
    case Setting::Lemma43: return "lemma43";
  }
  return "?";
}

Setting setting_from_string(const std::string& name) {
  if (name == "thm1") return Setting::Thm1;
  if (name == "thm2") return Setting::Thm2;
  if (name == "lemma42") return Setting::Lemma42;
  if (name == "lemma43") return Setting::Lemma43;
  throw std::invalid_argument("unknown setting: " + name);
}

WeightAlphabet syllable_alphabet(const HeckeParams& params, Setting setting) {
  WeightAlphabet a;
  const int r = params.r;
  switch (setting) {
    case Setting::Thm1:
      if (params.even()) throw ParityMismatchError("thm1 alphabet requires odd p");
      for (int j = 1; j <= r; ++j) a.entries.push_back({2 * (j + 1), 2});
      break;
    case Setting::Thm2:
      if (!params.even()) throw ParityMismatchError("thm2 alphabet requires even p");
      for (int j = 1; j <= r - 1; ++j) a.entries.push_back({2 * (j + 1), 2});
      a.entries.push_back({2 * (r + 1), 1});
      break;
    case Setting::Lemma42:
      for (int j = 1; j <= r - 1; ++j) a.entries.push_back({j, 2});
      a.entries.push_back({r, 1});
      break;
    case Setting::Lemma43:
      for (int j = 1; j <= r; ++j) a.entries.push_back({j, 2});
      break;
  }
  return a;
}

BigInt WeightCountTable::cumulative(long long x) const {
  BigInt sum = 0;
  for (long long s = 1; s <= x && s < static_cast<long long>(total.size()); ++s) sum += total[s];
  return sum;
}

WeightCountTable dp_weight_counts(const WeightAlphabet& alphabet, long long x) {
  if (x < 0) throw std::invalid_argument("dp_weight_counts: negative bound");
  WeightCountTable table;
  const std::size_t size = static_cast<std::size_t>(x) + 1;
  table.total.assign(size, 0);
  table.total[0] = 1;
  for (std::size_t s = 1; s < size; ++s) {
    for (const auto& e : alphabet.entries) {
      if (static_cast<std::size_t>(e.weight) <= s)
        table.total[s] += e.multiplicity * table.total[s - static_cast<std::size_t>(e.weight)];
    }
  }

  const int w_min = alphabet.min_weight();
  const long long n_max = w_min > 0 ? x / w_min : 0;
  table.by_tuple_len.assign(static_cast<std::size_t>(n_max) + 1, std::vector<BigInt>(size, 0));
  table.by_tuple_len[0][0] = 1;
  for (long long n = 1; n <= n_max; ++n) {
    auto& cur = table.by_tuple_len[static_cast<std::size_t>(n)];
    const auto& prev = table.by_tuple_len[static_cast<std::size_t>(n - 1)];
    for (std::size_t s = 1; s < size; ++s) {
      for (const auto& e : alphabet.entries) {
        if (static_cast<std::size_t>(e.weight) <= s)
          cur[s] += e.multiplicity * prev[s - static_cast<std::size_t>(e.weight)];
      }
    }
  }
  return table;
}

BigInt count_solutions(const WeightAlphabet& alphabet, long long x) {
  if (x < 0) return 0;
  return dp_weight_counts(alphabet, x).cumulative(x);
}

long long power_form_offset(const HeckeParams& params, long long x) {
  if (!params.even() || x < 0) return 0;
  return x / (2LL * (params.r + 1));
}

namespace {

std::vector<int> mobius_upto(long long n) {
  std::vector<int> mu(static_cast<std::size_t>(n) + 1, 1);
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  std::vector<long long> primes;
  for (long long i = 2; i <= n; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<std::size_t>(i)] = -1;
    }
    for (long long p : primes) {
      if (i * p > n) break;
      composite[static_cast<std::size_t>(i * p)] = true;
      if (i % p == 0) {
        mu[static_cast<std::size_t>(i * p)] = 0;
        break;
      }
      mu[static_cast<std::size_t>(i * p)] = -mu[static_cast<std::size_t>(i)];
    }
  }
  return mu;
}

}  // namespace

BigInt symmetric_singleton_correction(const HeckeParams& params, long long x) {
  if (!params.even() || x < 0) return 0;
  const long long pivot = params.r + 1;  // length of the 1-syllable pivot word i g^r
  if (2 * pivot > x) return 0;

  // Mt(y): pivot-form cyclic words (odd syllable count, one forced gamma^r) of
  // length <= y; in bijection with tuples of thm2 weight <= y - (r+1),
  // the empty tuple standing for i g^r itself.
  const WeightCountTable table = dp_weight_counts(syllable_alphabet(params, Setting::Thm2), x);
  const auto mixed_words = [&](long long y) -> BigInt {
    if (y < pivot) return 0;
    return 1 + table.cumulative(y - pivot);
  };
  const std::vector<int> mu = mobius_upto(x / pivot + 1);
  // Pm(y): pivot-form words that are not proper (odd) powers.
  const auto primitive_mixed = [&](long long y) -> BigInt {
    BigInt total = 0;
    for (long long u = 1; u * pivot <= y; u += 2)
      if (mu[static_cast<std::size_t>(u)] != 0)
        total += mu[static_cast<std::size_t>(u)] * mixed_words(y / u);
    return total;
  };

  // A symmetric-shape class has a single symmetric-form rotation exactly when
  // its minimal syllable period is odd, i.e. it is P^t for a primitive
  // pivot-form word P and even t >= 2.
  BigInt total = 0;
  for (long long t = 2; t * pivot <= x; t += 2) total += primitive_mixed(x / t);
  return total;
}

BigInt symmetric_class_count_exact(const HeckeParams& params, long long x) {
  if (x < 4) return 0;
  if (!params.even()) {
    const BigInt tuples = count_solutions(syllable_alphabet(params, Setting::Thm1), x);
    if (tuples % 2 != 0)
      throw std::logic_error("symmetric_class_count_exact: odd tuple count for odd p");
    return tuples / 2;
  }
  const BigInt tuples = count_solutions(syllable_alphabet(params, Setting::Thm2), x);
  const BigInt singletons = symmetric_singleton_correction(params, x);
  if ((tuples + singletons) % 2 != 0)
    throw std::logic_error("symmetric_class_count_exact: tuple/singleton parity mismatch");
  return (tuples + singletons) / 2;
}

}  // namespace hecke
