#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <tubealg/builtins.hpp>

namespace draws {

// A builtin together with the channel bases used by the tests: shipped
// reference bases where they exist, otherwise canonical (derived, unitary)
// or solved ones.
struct Prepared {
  tubealg::BuiltinCategory cat;
  std::map<std::pair<std::string, int>, tubealg::ChannelBasis> bases;
};

const Prepared& prepared(const std::string& id);
std::vector<std::string> unitary_ids();

struct PropertyStats {
  int draws = 0;
  double total_deviation = 0.0;     // |sum p - 1|
  double gauge_deviation = 0.0;     // marginals before/after a unitary rotation
  double trace_deviation = 0.0;     // |tr channel(rho) - tr rho|
  double direct_deviation = 0.0;    // library probabilities vs direct evaluation
  std::vector<std::string> labels;  // one per draw
};

PropertyStats run_property_draws(int count, std::uint64_t seed);

tubealg::ComplexMatrix random_unitary(int n, std::uint64_t seed);

}  // namespace draws
