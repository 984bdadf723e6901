#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tubealg/charges.hpp"
#include "tubealg/fusion.hpp"
#include "tubealg/groupoid.hpp"
#include "tubealg/isometry.hpp"
#include "tubealg/tube.hpp"

namespace tubealg {

struct BuiltinCategory {
  std::string id;
  std::optional<FusionCategoryData> fusion;
  TubeCategory tube;
  std::vector<GeneralisedCharge> charges;
  // Explicit channel bases shipped with the category (golden data).
  std::vector<ChannelBasis> reference_bases;
  std::optional<TubePresentation> reference_tables;
  std::optional<ActionGroupoid> groupoid;
};

// Ids:
//   fib, yang-lee, rep-s3, 2rep-z2z2-z2
//   pointed:<group>:<cocycle>   group z<n> | z2xz2 | s3; cocycle 0 | p (z<n>) | ijk (z2xz2)
//   ty:<group>:<chi>:<sign>     group z<n> with chi = k coprime to n, or z2xz2 with chi = hyp | diag
//   2group:v4-z2-mixed | 2group:z4-v4-swap
std::vector<std::string> builtin_ids();

// Throws UnknownCategory.
BuiltinCategory load_builtin(const std::string& id, std::uint64_t seed = 42);
std::vector<GeneralisedCharge> builtin_charges(const std::string& id);

// Transcribed composition and dagger tables for fib, yang-lee and rep-s3,
// and the reconstructed tables for 2rep-z2z2-z2. For rep-s3 the one entry
// that contradicts the charges is replaced by its consistent value; see
// rep_s3_tables_as_printed() for the original.
TubePresentation reference_tables(const std::string& id);
TubePresentation rep_s3_tables_as_printed();

// Basis, identities and dagger of the 2rep-z2z2-z2 tube category, no
// compositions.
TubePresentation two_rep_skeleton();
// The five charges of 2rep-z2z2-z2. The printed table gives tub[gamma>gamma;V]
// the value -1 in all three charges supported on gamma, which leaves End(gamma)
// without a faithful representation; the shipped version uses +1 in U_1gamma.
std::vector<GeneralisedCharge> two_rep_charges(const TubeCategory& t, bool as_printed = false);

// Structure constants fitted so that every charge is a representation.
// basis/identities/dagger are taken from skeleton; compose is overwritten.
// Throws NonSemisimple if the stacked charges are not injective on some block.
TubePresentation reconstruct_from_charges(const TubePresentation& skeleton,
                                          const std::vector<GeneralisedCharge>& charges,
                                          const TubeCategory& skeleton_tube);

}  // namespace tubealg
