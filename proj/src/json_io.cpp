#include "gibbslab/json_io.hpp"

#include <fstream>

namespace gibbslab {

namespace {

std::string site_key(Site s, int dimension) { return to_string(s, dimension); }
}  // namespace

std::string pattern_string(const Pattern& p, const SftSpace& sft) {
  bool single = true;
  for (const auto& name : sft.alphabet())
    if (name.size() != 1) single = false;
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i && !single) out += ",";
    out += sft.alphabet()[p.symbols()[i]];
  }
  return out;
}

namespace {

Site site_from_key(const std::string& key) {
  Site s{0, 0};
  if (std::sscanf(key.c_str(), "(%d,%d)", &s.x, &s.y) == 2) return s;
  if (std::sscanf(key.c_str(), "(%d)", &s.x) == 1) return s;
  throw InputError("cannot parse site key '" + key + "'");
}

std::vector<Symbol> split_symbols(const std::string& text, std::size_t count,
                                  const SftSpace& sft) {
  std::vector<Symbol> symbols;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      std::string tok = text.substr(
          pos, next == std::string::npos ? std::string::npos : next - pos);
      symbols.push_back(sft.symbol_index(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) symbols.push_back(sft.symbol_index(std::string(1, c)));
  }
  if (symbols.size() != count)
    throw InputError("pattern string '" + text + "' has wrong length");
  return symbols;
}

}  // namespace

Json site_to_json(Site s, int dimension) {
  return dimension == 1 ? Json::array({s.x}) : Json::array({s.x, s.y});
}

Site site_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2)
    throw InputError("site must be an array of 1 or 2 integers");
  Site s{j[0].get<int>(), 0};
  if (j.size() == 2) s.y = j[1].get<int>();
  return s;
}

Json shape_to_json(const Shape& shape, int dimension) {
  Json arr = Json::array();
  for (Site s : shape.sites()) arr.push_back(site_to_json(s, dimension));
  return arr;
}

Shape shape_from_json(const Json& j) {
  std::vector<Site> sites;
  for (const auto& item : j) sites.push_back(site_from_json(item));
  return Shape(std::move(sites));
}

Json sft_to_json(const SftSpace& sft) {
  Json j;
  j["dimension"] = sft.dimension();
  j["alphabet"] = sft.alphabet();
  Json forb = Json::array();
  for (const Pattern& f : sft.forbidden()) {
    Json entry;
    entry["shape"] = shape_to_json(f.shape(), sft.dimension());
    Json symbols = Json::array();
    for (Symbol a : f.symbols()) symbols.push_back(sft.alphabet()[a]);
    entry["symbols"] = symbols;
    forb.push_back(entry);
  }
  j["forbidden"] = forb;
  Json asserted;
  asserted["ssf"] = sft.asserted().ssf;
  asserted["safe_symbol"] =
      sft.asserted().safe_symbol
          ? Json(sft.alphabet()[*sft.asserted().safe_symbol])
          : Json(nullptr);
  asserted["pivot"] = sft.asserted().pivot;
  j["asserted"] = asserted;
  if (sft.family() == Family::SunnySideUp) j["family"] = "sunny";
  return j;
}

SftSpace sft_from_json(const Json& j) {
  int dimension = j.at("dimension").get<int>();
  std::vector<std::string> alphabet =
      j.at("alphabet").get<std::vector<std::string>>();
  SftSpace probe(dimension, alphabet, {});
  std::vector<Pattern> forbidden;
  for (const auto& entry : j.value("forbidden", Json::array())) {
    Shape shape = shape_from_json(entry.at("shape"));
    std::vector<Symbol> symbols;
    for (const auto& name : entry.at("symbols"))
      symbols.push_back(probe.symbol_index(name.get<std::string>()));
    forbidden.push_back(Pattern(shape, std::move(symbols)));
  }
  Asserted asserted;
  if (j.contains("asserted")) {
    const Json& a = j.at("asserted");
    asserted.ssf = a.value("ssf", false);
    asserted.pivot = a.value("pivot", false);
    if (a.contains("safe_symbol") && !a.at("safe_symbol").is_null())
      asserted.safe_symbol =
          probe.symbol_index(a.at("safe_symbol").get<std::string>());
  }
  Family family = j.value("family", "") == "sunny" ? Family::SunnySideUp
                                                   : Family::Generic;
  return SftSpace(dimension, std::move(alphabet), std::move(forbidden),
                  asserted, family);
}

Json config_to_json(const Configuration& x, const SftSpace& sft) {
  Json j;
  Json background;
  Json period = Json::array();
  if (sft.dimension() == 1) {
    period.push_back(Json::array({x.background().period.x}));
  } else {
    period.push_back(Json::array({x.background().period.x, 0}));
    period.push_back(Json::array({0, x.background().period.y}));
  }
  background["period"] = period;
  Json cell;
  for (Site s : x.background().cell.shape().sites())
    cell[site_key(s, sft.dimension())] =
        sft.alphabet()[x.background().cell.at(s)];
  background["cell"] = cell;
  j["background"] = background;
  Json patch;
  for (const auto& [s, a] : x.patch())
    patch[site_key(s, sft.dimension())] = sft.alphabet()[a];
  j["patch"] = patch;
  return j;
}

Configuration config_from_json(const Json& j, const SftSpace& sft) {
  const Json& bg = j.at("background");
  Site period{1, 1};
  const Json& pj = bg.at("period");
  if (sft.dimension() == 1) {
    if (pj.size() != 1 || pj[0].size() != 1)
      throw InputError("1D background period must be [[p]]");
    period.x = pj[0][0].get<int>();
  } else {
    if (pj.size() != 2)
      throw InputError("2D background period must be [[px,0],[0,py]]");
    period.x = pj[0][0].get<int>();
    period.y = pj[1][1].get<int>();
    if (pj[0][1].get<int>() != 0 || pj[1][0].get<int>() != 0)
      throw InputError("only axis-aligned background periods are supported");
  }
  if (period.x <= 0 || period.y <= 0)
    throw InputError("background periods must be positive");

  Shape cell_box = sft.dimension() == 1
                       ? Shape::interval(0, period.x - 1)
                       : Shape::box({0, 0}, {period.x - 1, period.y - 1});
  std::vector<Symbol> cell(cell_box.size(), 0);
  const Json& cj = bg.at("cell");
  if (cj.size() != cell_box.size())
    throw InputError("background cell does not match the period box");
  for (auto it = cj.begin(); it != cj.end(); ++it) {
    Site s = site_from_key(it.key());
    if (!cell_box.contains(s))
      throw InputError("background cell site outside the period box");
    cell[cell_box.index_of(s)] = sft.symbol_index(it.value());
  }
  Background background;
  background.period = period;
  background.cell = Pattern(cell_box, std::move(cell));
  Configuration x((background));
  Json patch = j.value("patch", Json::object());
  for (auto it = patch.begin(); it != patch.end(); ++it)
    x = x.with(site_from_key(it.key()), sft.symbol_index(it.value()));
  return x;
}

Json interaction_to_json(const Interaction& phi, const SftSpace& sft) {
  Json j;
  j["mode"] = phi.mode() == InteractionMode::ShiftInvariant ? "shift_invariant"
                                                            : "site_indexed";
  Json entries = Json::array();
  for (const auto& [shape, table] : phi.entries()) {
    Json entry;
    entry["shape"] = shape_to_json(shape, sft.dimension());
    Json tj;
    for (const auto& [key, value] : table) {
      std::vector<Symbol> symbols(key.begin(), key.end());
      tj[pattern_string(Pattern(shape, symbols), sft)] = value;
    }
    entry["table"] = tj;
    entries.push_back(entry);
  }
  j["entries"] = entries;
  return j;
}

Interaction interaction_from_json(const Json& j, const SftSpace& sft) {
  std::string mode = j.at("mode").get<std::string>();
  Interaction phi(mode == "site_indexed" ? InteractionMode::SiteIndexed
                                         : InteractionMode::ShiftInvariant);
  for (const auto& entry : j.at("entries")) {
    Shape shape = shape_from_json(entry.at("shape"));
    const Json& table = entry.at("table");
    for (auto it = table.begin(); it != table.end(); ++it) {
      std::vector<Symbol> symbols = split_symbols(it.key(), shape.size(), sft);
      phi.set(Pattern(shape, std::move(symbols)), it.value().get<double>());
    }
  }
  return phi;
}

Json norm_report_to_json(const NormReport& report, const SftSpace* sft) {
  Json j;
  j["value"] = report.value;
  j["mode"] = to_string(report.mode);
  if (report.witness && sft) {
    Json w;
    w["shape"] = shape_to_json(report.witness->shape(), sft->dimension());
    w["pattern"] = pattern_string(*report.witness, *sft);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (!report.note.empty()) j["note"] = report.note;
  Json budget;
  budget["enumerated"] = report.enumerated;
  budget["samples"] = report.samples;
  j["budget"] = budget;
  return j;
}

Json marker_to_json(const MarkerData& data) {
  Json j;
  Json params;
  params["k"] = data.params.k;
  params["n"] = data.params.n;
  params["delta"] = data.params.delta;
  params["epsilon"] = data.params.epsilon;
  params["K"] = data.params.K_const;
  params["seed"] = data.params.seed;
  j["params"] = params;
  j["u"] = data.u.str();
  j["v"] = data.v.str();
  Json certified;
  certified["condition_a"] = data.certified.condition_a;
  certified["condition_b"] = data.certified.condition_b;
  certified["full"] = data.certified.full;
  certified["shapes_checked"] = data.certified.shapes_checked;
  certified["failure"] = data.certified.failure;
  j["certified"] = certified;
  return j;
}

MarkerData marker_from_json(const Json& j) {
  MarkerData data;
  const Json& p = j.at("params");
  data.params.k = p.at("k").get<int>();
  data.params.n = p.at("n").get<int>();
  data.params.delta = p.at("delta").get<double>();
  data.params.epsilon = p.at("epsilon").get<double>();
  data.params.K_const = p.value("K", 16);
  data.params.seed = p.value("seed", 0ULL);
  data.u = BitWord::parse(j.at("u").get<std::string>());
  data.v = BitWord::parse(j.at("v").get<std::string>());
  if (j.contains("certified")) {
    const Json& c = j.at("certified");
    data.certified.condition_a = c.value("condition_a", false);
    data.certified.condition_b = c.value("condition_b", false);
    data.certified.full = c.value("full", false);
    data.certified.shapes_checked = c.value("shapes_checked", 0LL);
    data.certified.failure = c.value("failure", "");
  }
  return data;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace gibbslab
