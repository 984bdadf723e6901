#pragma once

#include <optional>
#include <string>

#include "tubealg/charges.hpp"
#include "tubealg/fusion.hpp"
#include "tubealg/isometry.hpp"
#include "tubealg/tube.hpp"

namespace tubealg {

// Re-emits JSON text with sorted keys, two-space indentation and doubles
// printed with 17 significant digits. Integers stay integers.
std::string canonical_json(const std::string& json_text);

std::string category_to_json(const FusionCategoryData& cat);
FusionCategoryData category_from_json(const std::string& text);  // SchemaError

std::string presentation_to_json(const TubePresentation& p);
TubePresentation presentation_from_json(const std::string& text);  // SchemaError

std::string charge_to_json(const TubeCategory& t, const GeneralisedCharge& u);
GeneralisedCharge charge_from_json(const TubeCategory& t, const std::string& text);

std::string basis_to_json(const TubeCategory& t, const ChannelBasis& basis);
std::string report_to_json(const TubeCategory& t, const ProbabilityReport& report);
std::string certificate_to_json(const TubeCategory& t, const InfeasibilityCertificate& cert);

// A category file holds either fusion data (with f_symbols) or a
// tube_presentation. Throws FileNotFound, SchemaError.
struct CategoryFile {
  std::optional<FusionCategoryData> fusion;
  std::optional<TubePresentation> presentation;
};
CategoryFile load_category_file(const std::string& path);

std::string read_text_file(const std::string& path);  // FileNotFound

}  // namespace tubealg
