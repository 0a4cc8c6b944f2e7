// JSON (de)serialization for the file formats the CLI reads and writes.
#pragma once

#include <string>

#include "json.hpp"

#include "gibbslab/interaction.hpp"
#include "gibbslab/markers.hpp"
#include "gibbslab/norms.hpp"
#include "gibbslab/sft.hpp"

namespace gibbslab {

using Json = nlohmann::ordered_json;

// Symbol names in canonical site order ("0110" or comma-joined).
std::string pattern_string(const Pattern& p, const SftSpace& sft);

Json site_to_json(Site s, int dimension);
Site site_from_json(const Json& j);
Json shape_to_json(const Shape& shape, int dimension);
Shape shape_from_json(const Json& j);

Json sft_to_json(const SftSpace& sft);
SftSpace sft_from_json(const Json& j);

Json config_to_json(const Configuration& x, const SftSpace& sft);
Configuration config_from_json(const Json& j, const SftSpace& sft);

Json interaction_to_json(const Interaction& phi, const SftSpace& sft);
Interaction interaction_from_json(const Json& j, const SftSpace& sft);

Json norm_report_to_json(const NormReport& report, const SftSpace* sft);

Json marker_to_json(const MarkerData& data);
MarkerData marker_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace gibbslab
