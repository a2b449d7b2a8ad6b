#include "hecke/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::vector<int> shifted(const std::vector<int>& syl, std::size_t shift) {
  std::vector<int> out(syl.size());
  for (std::size_t i = 0; i < syl.size(); ++i) out[i] = syl[(shift + i) % syl.size()];
  return out;
}

bool cancels(int a, int b, const HeckeParams& params) { return (a + b) % params.p == 0; }

bool symmetric_at(const std::vector<int>& m, const HeckeParams& params) {
  const std::size_t s = m.size();
  if (s < 2 || s % 2 != 0) return false;
  for (std::size_t i = 0; i < s / 2; ++i)
    if (!cancels(m[i], m[s - 1 - i], params)) return false;
  return true;
}

bool p_reciprocal_at(const std::vector<int>& m, const HeckeParams& params) {
  const std::size_t s = m.size();
  if (!params.even() || s < 4 || s % 2 != 0) return false;
  if (m[0] != params.r || m[s / 2] != params.r) return false;
  for (std::size_t i = 1; i < s / 2; ++i)
    if (!cancels(m[i], m[s - i], params)) return false;
  return true;
}

bool mixed_at(const std::vector<int>& m, const HeckeParams& params) {
  const std::size_t s = m.size();
  if (!params.even() || s < 3 || s % 2 == 0) return false;
  if (m[0] != params.r) return false;
  for (std::size_t i = 1; i <= (s - 1) / 2; ++i)
    if (!cancels(m[i], m[s - i], params)) return false;
  return true;
}

// Recovers the defining tuple from the canonical rotation, so the record does
// not depend on which generator produced the class.
std::optional<std::vector<int>> derive_tuple(const std::vector<int>& syl, ReciprocalType rtype,
                                             const HeckeParams& params) {
  const std::size_t s = syl.size();
  for (std::size_t shift = 0; shift < s; ++shift) {
    const std::vector<int> m = shifted(syl, shift);
    switch (rtype) {
      case ReciprocalType::Symmetric:
        if (symmetric_at(m, params))
          return std::vector<int>(m.begin(), m.begin() + static_cast<long>(s / 2));
        break;
      case ReciprocalType::PReciprocal:
        if (p_reciprocal_at(m, params))
          return std::vector<int>(m.begin() + 1, m.begin() + static_cast<long>(s / 2));
        break;
      case ReciprocalType::MixedNoPower:
        if (mixed_at(m, params))
          return std::vector<int>(m.begin() + 1, m.begin() + static_cast<long>((s + 1) / 2));
        break;
      case ReciprocalType::PowerOfIotaGammaTilde:
        return std::nullopt;
    }
  }
  return std::nullopt;
}

ReciprocalType type_from_shapes(const ShapeFlags& f, const ClassKey& key) {
  if (f.power) return ReciprocalType::PowerOfIotaGammaTilde;
  if (f.p_reciprocal) return ReciprocalType::PReciprocal;
  if (f.mixed) return ReciprocalType::MixedNoPower;
  if (f.symmetric) return ReciprocalType::Symmetric;
  throw NotReciprocalError("class matches no normal-form shape: " + key);
}

}  // namespace

ReciprocalClassRecord make_class_record(const CyclicWord& c, const HeckeParams& params) {
  ReciprocalClassRecord rec;
  rec.key = canonical_form(c);
  rec.length = c.length();
  rec.shapes = match_shapes(c, params);
  rec.rtype = type_from_shapes(rec.shapes, rec.key);
  rec.primitive = primitive_root(c, params).exponent == 1;
  const CyclicWord canon = cyclic_from_key(rec.key, params);
  rec.tuple = derive_tuple(syllable_exponents(canon), rec.rtype, params);
  return rec;
}

namespace {

using ClassMap = std::map<ClassKey, ReciprocalClassRecord>;

void insert_class(ClassMap& out, const CyclicWord& c, const HeckeParams& params) {
  ClassKey key = canonical_form(c);
  if (out.find(key) != out.end()) return;
  out.emplace(std::move(key), make_class_record(c, params));
}

// All nonempty exponent tuples with total weight sum 2(|k|+1) <= budget and a
// fixed first entry; visits tuples in lexicographic order of the alphabet.
void visit_tuples_with_first(int first, long long budget, const std::vector<int>& alphabet,
                             const std::function<void(const std::vector<int>&)>& cb) {
  const auto weight = [](int k) { return 2LL * ((k < 0 ? -k : k) + 1); };
  if (weight(first) > budget) return;
  std::vector<int> cur{first};
  std::function<void(long long)> rec = [&](long long remaining) {
    cb(cur);
    for (int k : alphabet) {
      const long long w = weight(k);
      if (w > remaining) continue;
      cur.push_back(k);
      rec(remaining - w);
      cur.pop_back();
    }
  };
  rec(budget - weight(first));
}

struct WorkItem {
  enum class Kind { Symmetric, PReciprocal, MixedLeft, MixedRight, Powers } kind;
  int first = 0;  // first tuple exponent, unused for Powers
};

void run_item(const WorkItem& item, const HeckeParams& params, long long x, ClassMap& out) {
  const std::vector<int> alphabet = params.exponent_alphabet();
  const long long pivot = params.r + 1;
  const auto emit = [&](const Word& w) {
    insert_class(out, CyclicWord::from_letters(w.letters()), params);
  };
  switch (item.kind) {
    case WorkItem::Kind::Symmetric:
      visit_tuples_with_first(item.first, x, alphabet, [&](const std::vector<int>& t) {
        emit(symmetric_normal_form(t, params));
      });
      break;
    case WorkItem::Kind::PReciprocal:
      visit_tuples_with_first(item.first, x - 2 * pivot, alphabet, [&](const std::vector<int>& t) {
        emit(p_reciprocal_normal_form(t, params));
      });
      break;
    case WorkItem::Kind::MixedLeft:
      visit_tuples_with_first(item.first, x - pivot, alphabet, [&](const std::vector<int>& t) {
        emit(mixed_normal_form(t, MixedSide::Left, params));
      });
      break;
    case WorkItem::Kind::MixedRight:
      visit_tuples_with_first(item.first, x - pivot, alphabet, [&](const std::vector<int>& t) {
        emit(mixed_normal_form(t, MixedSide::Right, params));
      });
      break;
    case WorkItem::Kind::Powers:
      for (int k = 2; static_cast<long long>(k) * pivot <= x; ++k)
        emit(power_normal_form(k, params));
      break;
  }
}

}  // namespace

std::vector<ReciprocalClassRecord> enumerate_reciprocal_classes(const HeckeParams& params,
                                                                long long x, int parallelism) {
  std::vector<ReciprocalClassRecord> result;
  if (x < 4) return result;

  std::vector<WorkItem> items;
  for (int k : params.exponent_alphabet()) items.push_back({WorkItem::Kind::Symmetric, k});
  if (params.even()) {
    for (int k : params.exponent_alphabet()) {
      items.push_back({WorkItem::Kind::PReciprocal, k});
      items.push_back({WorkItem::Kind::MixedLeft, k});
      items.push_back({WorkItem::Kind::MixedRight, k});
    }
    items.push_back({WorkItem::Kind::Powers, 0});
  }

  const int shards = std::max(1, parallelism);
  std::vector<ClassMap> partial(static_cast<std::size_t>(shards));
  if (shards == 1) {
    for (const WorkItem& item : items) run_item(item, params, x, partial[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s) {
      pool.emplace_back([&, s]() {
        for (std::size_t i = static_cast<std::size_t>(s); i < items.size();
             i += static_cast<std::size_t>(shards))
          run_item(items[i], params, x, partial[static_cast<std::size_t>(s)]);
      });
    }
    for (auto& t : pool) t.join();
  }

  ClassMap merged;
  for (ClassMap& m : partial)
    for (auto& [key, rec] : m) merged.emplace(key, std::move(rec));

  result.reserve(merged.size());
  for (auto& [key, rec] : merged) result.push_back(std::move(rec));
  std::sort(result.begin(), result.end(),
            [](const ReciprocalClassRecord& a, const ReciprocalClassRecord& b) {
              return a.length != b.length ? a.length < b.length : a.key < b.key;
            });
  return result;
}

std::vector<ReciprocalClassRecord> oracle_enumerate_reciprocal(const HeckeParams& params,
                                                               long long x) {
  ClassMap found;
  std::set<ClassKey> seen;
  const std::vector<int> alphabet = params.exponent_alphabet();

  std::vector<int> cur;
  std::function<void(long long)> rec = [&](long long remaining) {
    if (!cur.empty()) {
      // skip the length r+1 word i g^r: it is the k = 1 power of i gamma~,
      // excluded from class tables alongside the k >= 2 convention
      const bool excluded_k1 =
          params.even() && cur.size() == 1 && cur[0] == params.r;
      if (!excluded_k1) {
        const CyclicWord c = cyclic_from_syllables(cur, params);
        ClassKey key = canonical_form(c);
        if (seen.insert(key).second) {
          if (is_reciprocal(c.as_word(params), params))
            found.emplace(std::move(key), make_class_record(c, params));
        }
      }
    }
    for (int k : alphabet) {
      const long long w = 1 + (k < 0 ? -k : k);
      if (w > remaining) continue;
      cur.push_back(k);
      rec(remaining - w);
      cur.pop_back();
    }
  };
  rec(x);

  std::vector<ReciprocalClassRecord> result;
  result.reserve(found.size());
  for (auto& [key, recd] : found) result.push_back(std::move(recd));
  std::sort(result.begin(), result.end(),
            [](const ReciprocalClassRecord& a, const ReciprocalClassRecord& b) {
              return a.length != b.length ? a.length < b.length : a.key < b.key;
            });
  return result;
}

std::pair<std::size_t, std::size_t> split_primitive_counts(
    const std::vector<ReciprocalClassRecord>& classes) {
  std::size_t prim = 0;
  for (const ReciprocalClassRecord& r : classes) prim += r.primitive ? 1 : 0;
  return {prim, classes.size() - prim};
}

}  // namespace hecke
