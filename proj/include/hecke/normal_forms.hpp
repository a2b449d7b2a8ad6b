#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/cyclic.hpp"
#include "hecke/params.hpp"
#include "hecke/word.hpp"

namespace hecke {

/// Class labels for reciprocal conjugacy classes. Odd p only ever produces
/// Symmetric; the other labels require the extra involution gamma^r of even p.
enum class ReciprocalType { Symmetric, PReciprocal, MixedNoPower, PowerOfIotaGammaTilde };

std::string to_string(ReciprocalType t);

enum class MixedSide { Left, Right };

/// i g^{k1} i g^{k2} ... i g^{kn} i g^{-kn} ... i g^{-k1}
Word symmetric_normal_form(std::span<const int> tuple, const HeckeParams& params);

/// i g^r i g^{k1} ... i g^{kn} i g^r i g^{-kn} ... i g^{-k1}   (even p)
Word p_reciprocal_normal_form(std::span<const int> tuple, const HeckeParams& params);

/// One gamma^r pivot on the chosen side of the anti-palindrome (even p):
/// Left:  i g^r i g^{k1} ... i g^{kn} i g^{-kn} ... i g^{-k1}
/// Right: i g^{k1} ... i g^{kn} i g^r i g^{-kn} ... i g^{-k1}
Word mixed_normal_form(std::span<const int> tuple, MixedSide side, const HeckeParams& params);

/// (i g^r)^k, k != 0 (even p)
Word power_normal_form(int k, const HeckeParams& params);

struct GenRequest {
  ReciprocalType rtype = ReciprocalType::Symmetric;
  std::vector<int> tuple;            // exponent tuple for the first three forms
  int power_k = 0;                   // for PowerOfIotaGammaTilde
  MixedSide side = MixedSide::Left;  // for MixedNoPower
};

struct GenResult {
  Word word;
  bool collapses_to_power = false;  // even p: every syllable normalized to gamma^r
};

/// Builds the Lemma-shape representative for the requested type.
/// Throws ParityMismatchError for non-Symmetric requests with odd p.
GenResult gen_normal_form(const GenRequest& req, const HeckeParams& params);

/// Raw shape matches of a hyperbolic cyclic word against the normal forms,
/// scanning all rotations. Independent flags; one class may match several.
struct ShapeFlags {
  bool symmetric = false;     // case 1 anti-palindrome, even syllable count
  bool p_reciprocal = false;  // case 2, two antipodal gamma^r pivots
  bool mixed = false;         // case 3 without power, single pivot, odd syllable count
  bool power = false;         // (i g^r)^k, k >= 2
};

ShapeFlags match_shapes(const CyclicWord& c, const HeckeParams& params);

/// Single label via the fixed precedence Power > PReciprocal > Mixed > Symmetric.
/// Throws NotReciprocalError if the key is not a reciprocal class and
/// TorsionInputError for torsion-shape keys.
ReciprocalType classify_class(const ClassKey& key, const HeckeParams& params);

/// Rotation-level census: every distinct rotation of the class word (and of
/// its inverse) is assigned its precedence shape; counts per shape.
struct StructureReport {
  int symmetric_w = 0, symmetric_winv = 0;
  int p_reciprocal_w = 0, p_reciprocal_winv = 0;
  int mixed_w = 0, mixed_winv = 0;
  int power_w = 0, power_winv = 0;
  int rotations = 0;  // distinct rotations per orientation
};

StructureReport structure_check(const ClassKey& key, const HeckeParams& params);

/// Parses a ClassKey back into its cyclic word.
CyclicWord cyclic_from_key(const ClassKey& key, const HeckeParams& params);

}  // namespace hecke
