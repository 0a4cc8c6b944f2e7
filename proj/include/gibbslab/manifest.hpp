// Run manifests: every report embeds the command line, seeds, budgets and
// input digests so equal manifests mean byte-identical reruns. Wall-clock is
// reported on stderr, never inside report files.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace gibbslab {

inline constexpr const char* kVersion = "gibbslab 0.1.0";

struct RunManifest {
  std::string command;
  std::uint64_t seed = 0;
  int workers = 1;
  nlohmann::ordered_json budgets;
  std::map<std::string, std::string> inputs;  // path -> fnv1a64 digest

  nlohmann::ordered_json to_json() const;
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string file_digest(const std::string& path);

RunManifest make_manifest(int argc, char** argv, std::uint64_t seed,
                          int workers);

}  // namespace gibbslab
