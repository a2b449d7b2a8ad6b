#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/normal_forms.hpp"

namespace hecke {

struct ReciprocalClassRecord {
  ClassKey key;
  long long length = 0;        // class word length (rotation invariant)
  ReciprocalType rtype = ReciprocalType::Symmetric;
  bool primitive = true;
  ShapeFlags shapes;           // every normal-form shape the class matches
  std::optional<std::vector<int>> tuple;  // defining exponent tuple, when shaped
};

/// Builds a record for a hyperbolic reciprocal cyclic word. The tuple is
/// recovered from the canonical rotation, so records are independent of how
/// the class was produced.
ReciprocalClassRecord make_class_record(const CyclicWord& c, const HeckeParams& params);

/// All reciprocal classes of word length <= x, generated from the normal
/// forms and deduplicated by ClassKey; sorted by (length, key). Powers
/// (i g^r)^k enter for k >= 2 only. `parallelism` shards the generation;
/// the result is identical for every shard count.
std::vector<ReciprocalClassRecord> enumerate_reciprocal_classes(const HeckeParams& params,
                                                                long long x,
                                                                int parallelism = 1);

/// Independent brute-force oracle: enumerates every cyclically reduced
/// alternating cyclic word of length <= x and filters by is_reciprocal.
/// Intended for small x (roughly <= 16).
std::vector<ReciprocalClassRecord> oracle_enumerate_reciprocal(const HeckeParams& params,
                                                               long long x);

/// (primitive count, non-primitive count)
std::pair<std::size_t, std::size_t> split_primitive_counts(
    const std::vector<ReciprocalClassRecord>& classes);

}  // namespace hecke
