#include "gibbslab/manifest.hpp"

#include <fstream>
#include <sstream>

#include "gibbslab/errors.hpp"

namespace gibbslab {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "' for digest");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(buffer.str())));
  return hex;
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["seed"] = seed;
  j["workers"] = workers;
  j["budgets"] = budgets;
  nlohmann::ordered_json inputs_json;
  for (const auto& [path, digest] : inputs) inputs_json[path] = digest;
  j["inputs"] = inputs_json;
  j["version"] = kVersion;
  return j;
}

RunManifest make_manifest(int argc, char** argv, std::uint64_t seed,
                          int workers) {
  RunManifest m;
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += " ";
    cmd += argv[i];
  }
  m.command = cmd;
  m.seed = seed;
  m.workers = workers;
  m.budgets = nlohmann::ordered_json::object();
  return m;
}

}  // namespace gibbslab
