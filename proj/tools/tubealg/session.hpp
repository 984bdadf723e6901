#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <tubealg/builtins.hpp>

namespace tubealg::cli {

// Everything the commands need about one category, whether it came from a
// builtin id or a JSON file.
struct Session {
  std::string id;
  std::optional<FusionCategoryData> fusion;
  TubeCategory tube;
  std::vector<GeneralisedCharge> charges;
  std::vector<ChannelBasis> reference_bases;
  std::optional<TubePresentation> tables;
  bool from_file = false;
};

Session open_session(const std::string& category, std::uint64_t seed, const Tolerance& tol);

// Directory holding the bundled reference tables; TUBEALG_DATA wins.
std::string data_directory();

enum class BasisMethod { Auto, Reference, Canonical, Solve };
BasisMethod parse_method(const std::string& name);

// Auto prefers a shipped reference basis, then the canonical construction
// (derived unitary tubes), then the Gram solver. Non-unitary tubes are
// solved against the charges.
SolveResult channel_basis(const Session& s, const std::string& defect, int source, BasisMethod method,
                          const Tolerance& tol);

const GeneralisedCharge& find_charge(const Session& s, const std::string& name);

}  // namespace tubealg::cli
