// Command-line workbench. Subcommands mirror the library modules; every
// report embeds its manifest and all randomness is seed-driven.
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "gibbslab/checkers.hpp"
#include "gibbslab/fill.hpp"
#include "gibbslab/json_io.hpp"
#include "gibbslab/kozlov.hpp"
#include "gibbslab/manifest.hpp"
#include "gibbslab/markers.hpp"
#include "gibbslab/norms.hpp"
#include "gibbslab/parallel.hpp"
#include "gibbslab/speckernel.hpp"
#include "gibbslab/sullivan.hpp"
#include "gibbslab/zoo.hpp"

namespace gl = gibbslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = default
  long long budget_patterns = 1LL << 22;
  std::string out;
  std::string format = "json";

  int resolved_workers() const {
    return workers > 0 ? workers : gl::default_workers();
  }
  gl::EnumBudget budget() const { return {budget_patterns}; }
};

void add_common(CLI::App* app, Common& common) {
  app->add_option("--seed", common.seed, "root seed");
  app->add_option("--workers", common.workers,
                  "worker pool size (default: available parallelism)");
  app->add_option("--budget-patterns", common.budget_patterns,
                  "pattern enumeration cap");
  app->add_option("--out", common.out, "output file");
  app->add_option("--format", common.format, "json|csv");
}

gl::SftSpace load_space(const std::string& arg, gl::RunManifest& manifest) {
  if (arg.find('(') != std::string::npos) return gl::builtin_space(arg);
  manifest.inputs[arg] = gl::file_digest(arg);
  return gl::sft_from_json(gl::load_json_file(arg));
}

// "a..b" (optionally brace-wrapped) -> interval/box; "{s1;s2;...}" -> site
// list with sites as "i" or "i,j".
gl::Shape parse_shape(std::string text, int dimension) {
  auto parse_site = [dimension](const std::string& tok) {
    gl::Site s{0, 0};
    if (dimension == 1) {
      s.x = std::stoi(tok);
    } else {
      auto comma = tok.find(',');
      if (comma == std::string::npos)
        throw gl::InputError("2D site needs 'i,j': '" + tok + "'");
      s.x = std::stoi(tok.substr(0, comma));
      s.y = std::stoi(tok.substr(comma + 1));
    }
    return s;
  };
  bool braced = text.size() >= 2 && text.front() == '{' && text.back() == '}';
  if (braced) text = text.substr(1, text.size() - 2);
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (dimension == 1) return gl::Shape::interval(lo, hi);
    return gl::Shape::box({lo, lo}, {hi, hi});
  }
  if (braced) {
    std::vector<gl::Site> sites;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
      auto semi = text.find(';', pos);
      std::string tok = text.substr(
          pos, semi == std::string::npos ? std::string::npos : semi - pos);
      if (!tok.empty()) sites.push_back(parse_site(tok));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    return gl::Shape(std::move(sites));
  }
  throw gl::InputError("cannot parse shape '" + text + "'");
}

std::vector<gl::Shape> parse_chain(const std::string& text, int dimension) {
  std::vector<gl::Shape> chain;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = pos;
    if (text[pos] == '{') {
      next = text.find('}', pos);
      if (next == std::string::npos)
        throw gl::InputError("unbalanced '{' in chain");
      chain.push_back(parse_shape(text.substr(pos, next - pos + 1), dimension));
      next += 1;
    } else {
      next = text.find(';', pos);
      if (next == std::string::npos) next = text.size();
      chain.push_back(parse_shape(text.substr(pos, next - pos), dimension));
    }
    pos = next;
    if (pos < text.size() && text[pos] == ';') ++pos;
  }
  if (chain.empty()) throw gl::InputError("empty chain");
  return chain;
}

void emit(const Common& common, const gl::Json& report) {
  if (common.out.empty())
    std::cout << report.dump(2) << "\n";
  else
    gl::save_json_file(common.out, report);
}

void emit_text(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(common.out);
    if (!out) throw gl::InputError("cannot write '" + common.out + "'");
    out << text;
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"gibbslab: cocycles, interactions and Gibbs kernels on shifts"};
  app.require_subcommand(1);
  Common common;

  // ---------------------------------------------------------------- space
  auto* space = app.add_subcommand("space", "structural checkers");
  space->require_subcommand(1);
  std::string space_arg, shape_a = "{0}", shape_b, window_arg = "-5..5";
  int derive_window = 2;

  auto* check_tmp = space->add_subcommand("check-tmp", "memory-set falsifier");
  check_tmp->add_option("sft", space_arg, "builtin name or sft.json")
      ->required();
  check_tmp->add_option("--a", shape_a, "target region");
  check_tmp->add_option("--b", shape_b, "candidate memory set (default A+F-F)");
  check_tmp->add_option("--window", window_arg, "window shape");
  add_common(check_tmp, common);

  auto* check_pivot = space->add_subcommand("check-pivot", "pivot-path search");
  std::string pair_left, pair_right;
  check_pivot->add_option("sft", space_arg)->required();
  check_pivot->add_option("--left", pair_left, "configuration json")
      ->required();
  check_pivot->add_option("--right", pair_right, "configuration json")
      ->required();
  check_pivot->add_option("--window", window_arg, "search box");
  add_common(check_pivot, common);

  auto* derive = space->add_subcommand("derive-sft",
                                       "forbidden set from a TMP window");
  derive->add_option("sft", space_arg)->required();
  derive->add_option("--window-radius", derive_window, "check radius");
  add_common(derive, common);

  // --------------------------------------------------------------- markers
  auto* markers = app.add_subcommand("markers", "marker-word machinery");
  markers->require_subcommand(1);
  gl::MarkerParams params;
  params.k = 2;
  params.n = 400;
  params.epsilon = 0.2;
  long long attempts = 100000;
  std::string marker_file;

  auto* msearch = markers->add_subcommand("search", "randomized marker search");
  msearch->add_option("--k", params.k, "max shape size");
  msearch->add_option("--n", params.n, "word length");
  msearch->add_option("--epsilon", params.epsilon, "count slack factor");
  msearch->add_option("--delta", params.delta, "Hamming slack factor");
  msearch->add_option("--attempts", attempts, "candidate budget");
  add_common(msearch, common);

  auto* mverify = markers->add_subcommand("verify", "re-verify a marker file");
  mverify->add_option("marker", marker_file, "marker.json")->required();
  add_common(mverify, common);

  auto* mreport = markers->add_subcommand(
      "report", "non-surjectivity trend rows for a list of k");
  std::string k_list = "2";
  int report_n = 400;
  long long sull_samples = 100000, safe_samples = 10000;
  mreport->add_option("--k", k_list, "comma-separated k values");
  mreport->add_option("--n", report_n, "word length per k");
  mreport->add_option("--epsilon", params.epsilon,
                      "count slack (0 = schedule 1/(k^2 2^k))");
  mreport->add_option("--attempts", attempts, "candidate budget");
  mreport->add_option("--sull-samples", sull_samples, "ψ_k sample count");
  mreport->add_option("--safe-samples", safe_samples, "safe-interval samples");
  add_common(mreport, common);

  // ---------------------------------------------------------------- kozlov
  auto* kozlov = app.add_subcommand("kozlov", "partial-extension builder");
  std::string cocycle_file, chain_arg = "{0}", anchor_file;
  std::string window_range = "-8..8";
  kozlov->add_option("--sft", space_arg)->required();
  kozlov->add_option("--cocycle", cocycle_file, "interaction json defining ψ")
      ->required();
  kozlov->add_option("--window", window_range, "window, e.g. -8..8");
  kozlov->add_option("--chain", chain_arg, "increasing shapes, ';'-separated");
  add_common(kozlov, common);

  // -------------------------------------------------------------- sullivan
  auto* sullivan = app.add_subcommand("sullivan", "window-splice builder");
  int sull_n = 8, sull_n_min = 0;
  std::string report_file;
  sullivan->add_option("--sft", space_arg)->required();
  sullivan->add_option("--cocycle", cocycle_file)->required();
  sullivan->add_option("--n", sull_n, "window radius (sweep upper end)");
  sullivan->add_option("--n-min", sull_n_min, "sweep lower end (default n)");
  sullivan->add_option("--anchor", anchor_file, "anchor configuration json");
  sullivan->add_option("--report", report_file, "sweep report output");
  add_common(sullivan, common);

  // -------------------------------------------------------------- dualnorm
  auto* dualnorm = app.add_subcommand(
      "dualnorm", "word-count dual-norm lower bound for a pair");
  std::string left_file, right_file;
  gl::DualNormBudget dual_budget;
  dualnorm->add_option("--sft", space_arg)->required();
  dualnorm->add_option("--left", left_file)->required();
  dualnorm->add_option("--right", right_file)->required();
  dualnorm->add_option("--max-size", dual_budget.max_size);
  dualnorm->add_option("--max-diameter", dual_budget.max_diameter);
  dualnorm->add_option("--intervals-up-to", dual_budget.intervals_up_to);
  add_common(dualnorm, common);

  // ------------------------------------------------------------------- zoo
  auto* zoo = app.add_subcommand("zoo", "canned spaces and examples");
  zoo->require_subcommand(1);
  int i_max = 15, rigid_q = 4;
  auto* heights = zoo->add_subcommand("heights", "height-cocycle growth table");
  heights->add_option("--i-max", i_max, "largest diamond radius");
  add_common(heights, common);
  auto* rigid = zoo->add_subcommand("rigid", "frozen q-coloring witness");
  rigid->add_option("--q", rigid_q, "4 or 5");
  add_common(rigid, common);

  // ----------------------------------------------------------------- norms
  auto* norms = app.add_subcommand("norms", "interaction norms");
  int norm_halo = 1;
  norms->add_option("--sft", space_arg)->required();
  norms->add_option("--interaction", cocycle_file)->required();
  norms->add_option("--halo", norm_halo, "language halo");
  add_common(norms, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  gl::RunManifest manifest =
      gl::make_manifest(argc, argv, common.seed, common.resolved_workers());
  manifest.budgets["patterns"] = common.budget_patterns;
  auto started = std::chrono::steady_clock::now();
  int exit_code = kExitOk;

  auto finish = [&](gl::Json report, bool falsified = false) {
    report["manifest"] = manifest.to_json();
    emit(common, report);
    if (falsified) exit_code = kExitFalsified;
  };

  if (check_tmp->parsed()) {
    gl::SftSpace sft = load_space(space_arg, manifest);
    gl::Shape a = parse_shape(shape_a, sft.dimension());
    gl::Shape b = shape_b.empty() ? gl::memory_set(sft, a)
                                  : parse_shape(shape_b, sft.dimension());
    gl::Shape window = parse_shape(window_arg, sft.dimension());
    window = gl::shape_union(window, b);
    gl::TmpReport tmp = gl::check_tmp_window(sft, a, b, window, common.budget());
    gl::Json j;
    j["holds"] = tmp.holds;
    j["a"] = gl::shape_to_json(tmp.a, sft.dimension());
    j["b"] = gl::shape_to_json(tmp.b, sft.dimension());
    j["window"] = gl::shape_to_json(tmp.window, sft.dimension());
    j["pairs_checked"] = tmp.pairs_checked;
    if (tmp.counterexample) {
      gl::Json w;
      w["x"] = gl::pattern_string(tmp.counterexample->x, sft);
      w["y"] = gl::pattern_string(tmp.counterexample->y, sft);
      w["glued"] = gl::pattern_string(tmp.counterexample->glued, sft);
      j["witness"] = w;
    }
    finish(j, !tmp.holds);
  } else if (check_pivot->parsed()) {
    gl::SftSpace sft = load_space(space_arg, manifest);
    manifest.inputs[pair_left] = gl::file_digest(pair_left);
    manifest.inputs[pair_right] = gl::file_digest(pair_right);
    gl::Configuration left =
        gl::config_from_json(gl::load_json_file(pair_left), sft);
    gl::Configuration right =
        gl::config_from_json(gl::load_json_file(pair_right), sft);
    gl::AsymptoticPair pair = gl::AsymptoticPair::make(left, right);
    gl::Shape box = gl::shape_union(parse_shape(window_arg, sft.dimension()),
                                    pair.disagreement);
    gl::Json j;
    try {
      auto moves = gl::pivot_path(sft, pair, box, common.budget());
      j["path_found"] = true;
      j["length"] = moves.size();
      gl::Json list = gl::Json::array();
      for (const auto& m : moves) {
        gl::Json mv;
        mv["site"] = gl::site_to_json(m.site, sft.dimension());
        mv["symbol"] = sft.alphabet()[m.symbol];
        list.push_back(mv);
      }
      j["moves"] = list;
      j["replay_ok"] = gl::replay_pivot_path(sft, pair, moves);
      finish(j);
    } catch (const gl::NoPathError& e) {
      j["path_found"] = false;
      j["window"] = gl::shape_to_json(box, sft.dimension());
      j["note"] = e.what();
      finish(j, true);
    }
  } else if (derive->parsed()) {
    gl::SftSpace sft = load_space(space_arg, manifest);
    gl::SftSpace derived =
        gl::derive_sft_from_tmp_safe(sft, derive_window, common.budget());
    gl::Json j;
    j["sft"] = gl::sft_to_json(derived);
    finish(j);
  } else if (msearch->parsed()) {
    params.seed = common.seed;
    if (params.epsilon <= 0)
      params.epsilon = gl::MarkerParams::epsilon_schedule(params.k);
    manifest.budgets["attempts"] = attempts;
    gl::MarkerSearchReport report =
        gl::search_markers(params, attempts, common.resolved_workers());
    gl::Json j;
    j["found"] = report.found;
    j["attempts"] = report.attempts;
    if (report.found) {
      gl::Json mj = gl::marker_to_json(report.data);
      for (auto it = mj.begin(); it != mj.end(); ++it) j[it.key()] = it.value();
    }
    finish(j, !report.found);
  } else if (mverify->parsed()) {
    manifest.inputs[marker_file] = gl::file_digest(marker_file);
    gl::MarkerData data = gl::marker_from_json(gl::load_json_file(marker_file));
    gl::MarkerVerifyReport check = gl::verify_markers(
        data.params, data.u, data.v, common.resolved_workers());
    gl::Json j;
    j["condition_a"] = check.condition_a;
    j["condition_b"] = check.condition_b;
    j["full"] = check.full;
    j["shapes_checked"] = check.shapes_checked;
    j["passed"] = check.passed();
    if (!check.failure.empty()) j["witness"] = check.failure;
    finish(j, !check.passed());
  } else if (mreport->parsed()) {
    manifest.budgets["attempts"] = attempts;
    manifest.budgets["sull_samples"] = sull_samples;
    manifest.budgets["safe_samples"] = safe_samples;
    std::vector<gl::MarkerParams> per_k;
    std::size_t pos = 0;
    while (pos <= k_list.size()) {
      auto comma = k_list.find(',', pos);
      std::string tok = k_list.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!tok.empty()) {
        gl::MarkerParams kp = params;
        kp.k = std::stoi(tok);
        kp.n = report_n;
        kp.seed = common.seed;
        if (params.epsilon <= 0)
          kp.epsilon = gl::MarkerParams::epsilon_schedule(kp.k);
        per_k.push_back(kp);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    gl::NonsurjectivityBudgets budgets;
    budgets.attempts = attempts;
    budgets.sull_samples = sull_samples;
    budgets.safe_samples = safe_samples;
    budgets.workers = common.resolved_workers();
    auto rows = gl::nonsurjectivity_report(per_k, budgets);
    gl::Json out_rows = gl::Json::array();
    bool all_ok = !rows.empty();
    for (const auto& row : rows) {
      gl::Json r;
      r["k"] = row.k;
      r["n"] = row.n;
      r["epsilon"] = row.epsilon;
      r["found"] = row.found;
      r["attempts"] = row.attempts;
      if (row.found) {
        r["psi_on_marker_pair"] = row.psi_value;
        r["psi_expected"] = -2LL * row.n;
        r["dual_norm_lower"] = row.dual_lower;
        r["dual_norm_budget_witness"] = row.dual_witness;
        r["dual_norm_structural_bound"] = row.dual_bound;
        r["sullivan_sample_max"] = row.sull_sample_max;
        r["sullivan_analytic_bound"] = row.sull_bound;
        r["safe_interval_ok"] = row.safe_ok;
        r["ok"] = row.ok;
      }
      all_ok = all_ok && row.ok;
      out_rows.push_back(r);
    }
    gl::Json j;
    j["rows"] = out_rows;
    finish(j, !all_ok);
  } else if (kozlov->parsed()) {
    gl::SftSpace sft = load_space(space_arg, manifest);
    manifest.inputs[cocycle_file] = gl::file_digest(cocycle_file);
    gl::Interaction phi_in =
        gl::interaction_from_json(gl::load_json_file(cocycle_file), sft);
    gl::Cocycle psi = gl::Cocycle::from_interaction(sft, phi_in);
    gl::WindowedSpace ws;
    ws.sft = &sft;
    ws.window = parse_shape(window_range, sft.dimension());
    ws.boundary = gl::Configuration(
        gl::Background::uniform(sft.asserted().safe_symbol.value_or(0)));
    ws.budget = common.budget();
    std::vector<gl::Shape> chain = parse_chain(chain_arg, sft.dimension());
    gl::KozlovChainResult result = gl::kozlov_chain(ws, psi, chain);
    gl::Json j;
    j["interaction"] = gl::interaction_to_json(result.phi, sft);
    gl::Json cert;
    cert["exact_on"] =
        gl::shape_to_json(result.certificate.exact_on, sft.dimension());
    cert["max_error"] = result.certificate.max_error;
    cert["pairs_checked"] = result.certificate.pairs_checked;
    cert["window"] = gl::shape_to_json(ws.window, sft.dimension());
    cert["mode"] = "exact";
    j["certificate"] = cert;
    j["support_disjoint"] = result.support_disjoint;
    finish(j, result.certificate.max_error > 1e-10);
  } else if (sullivan->parsed()) {
    gl::SftSpace sft = load_space(space_arg, manifest);
    manifest.inputs[cocycle_file] = gl::file_digest(cocycle_file);
    gl::Interaction phi_in =
        gl::interaction_from_json(gl::load_json_file(cocycle_file), sft);
    gl::Cocycle psi = gl::Cocycle::from_interaction(sft, phi_in);
    gl::Configuration anchor(
        gl::Background::uniform(sft.asserted().safe_symbol.value_or(0)));
    if (!anchor_file.empty()) {
      manifest.inputs[anchor_file] = gl::file_digest(anchor_file);
      anchor = gl::config_from_json(gl::load_json_file(anchor_file), sft);
    }
    gl::FillContext ctx = gl::make_fill_context(sft, anchor);
    int n_lo = sull_n_min > 0 ? sull_n_min : sull_n;
    auto rows = gl::sullivan_sweep(ctx, psi, n_lo, sull_n,
                                   common.resolved_workers(), common.budget());
    gl::Interaction phi_out =
        gl::sullivan_interaction(ctx, psi, sull_n, 0, common.budget());
    gl::Json j;
    j["interaction"] = gl::interaction_to_json(phi_out, sft);
    gl::Json sweep = gl::Json::array();
    for (const auto& row : rows) {
      gl::Json r;
      r["n"] = row.n;
      r["vs_phi"] = row.vs_phi;
      r["sull_psi"] = row.sull_psi;
      r["sull_diff"] = row.sull_diff;
      sweep.push_back(r);
    }
    j["sweep"] = sweep;
    const auto& last = rows.back();
    bool ok = last.vs_phi <= 3.0 * last.sull_psi;
    j["vs_le_3_sull"] = ok;
    gl::Json cert;
    cert["n"] = last.n;
    cert["vs_phi"] = last.vs_phi;
    cert["sull_psi"] = last.sull_psi;
    cert["max_error"] = last.sull_diff;  // ‖ψ_Φ − ψ‖ at the final n
    cert["mode"] = "exact";
    j["certificate"] = cert;
    finish(j, !ok);
    if (!report_file.empty()) {
      gl::Json rj;
      rj["sweep"] = sweep;
      rj["manifest"] = manifest.to_json();
      gl::save_json_file(report_file, rj);
    }
  } else if (dualnorm->parsed()) {
    gl::SftSpace sft = load_space(space_arg, manifest);
    manifest.inputs[left_file] = gl::file_digest(left_file);
    manifest.inputs[right_file] = gl::file_digest(right_file);
    gl::Configuration left =
        gl::config_from_json(gl::load_json_file(left_file), sft);
    gl::Configuration right =
        gl::config_from_json(gl::load_json_file(right_file), sft);
    gl::AsymptoticPair pair = gl::AsymptoticPair::make(left, right);
    if (dual_budget.intervals_up_to == 0)
      dual_budget.intervals_up_to =
          3 * (pair.disagreement.empty() ? 1 : pair.disagreement.diameter() + 1);
    if (dual_budget.max_diameter == 0)
      dual_budget.max_diameter = dual_budget.intervals_up_to;
    dual_budget.workers = common.resolved_workers();
    manifest.budgets["max_size"] = dual_budget.max_size;
    manifest.budgets["max_diameter"] = dual_budget.max_diameter;
    manifest.budgets["intervals_up_to"] = dual_budget.intervals_up_to;
    gl::NormReport report = gl::dual_ns_norm(pair, sft, dual_budget);
    finish(gl::norm_report_to_json(report, &sft));
  } else if (heights->parsed()) {
    gl::SftSpace sft = gl::coloring_shift(3, 2);
    std::string csv = "i,psi,b2,ratio\n";
    gl::Json rows = gl::Json::array();
    for (int i = 1; i <= i_max; ++i) {
      gl::DiamondPair dp = gl::diamond_pair(sft, i);
      long long psi = gl::height_cocycle(sft, dp.pair);
      long long b2 = static_cast<long long>(gl::Shape::ball1(i, 2).size());
      double ratio = static_cast<double>(psi) / static_cast<double>(b2);
      csv += std::to_string(i) + "," + std::to_string(psi) + "," +
             std::to_string(b2) + "," + std::to_string(ratio) + "\n";
      gl::Json row;
      row["i"] = i;
      row["psi"] = psi;
      row["b2"] = b2;
      row["ratio"] = ratio;
      rows.push_back(row);
    }
    if (common.format == "csv") {
      emit_text(common, csv);
    } else {
      gl::Json j;
      j["rows"] = rows;
      finish(j);
    }
  } else if (rigid->parsed()) {
    gl::RigidColoringReport report = gl::rigid_coloring_witness(rigid_q);
    gl::Json j;
    j["q"] = report.q;
    j["admissible"] = report.admissible;
    j["single_site_pivots"] = report.single_site_pivots;
    j["two_site_exchange_admissible"] = report.two_site_exchange_admissible;
    bool ok = report.admissible && report.single_site_pivots == 0 &&
              report.two_site_exchange_admissible;
    finish(j, !ok);
  } else if (norms->parsed()) {
    gl::SftSpace sft = load_space(space_arg, manifest);
    manifest.budgets["halo"] = norm_halo;
    manifest.inputs[cocycle_file] = gl::file_digest(cocycle_file);
    gl::Interaction phi =
        gl::interaction_from_json(gl::load_json_file(cocycle_file), sft);
    gl::Json j;
    j["ns"] = gl::norm_report_to_json(
        gl::norm_ns(phi, sft, norm_halo, common.budget()), &sft);
    j["vs"] = gl::norm_report_to_json(
        gl::norm_vs(phi, sft, norm_halo, common.budget()), &sft);
    gl::Cocycle psi = gl::Cocycle::from_interaction(sft, phi);
    gl::SullivanOptions opts;
    opts.halo = norm_halo;
    opts.seed = common.seed;
    opts.workers = common.resolved_workers();
    opts.budget = common.budget();
    j["sullivan"] = gl::norm_report_to_json(gl::norm_sullivan(psi, opts), &sft);
    finish(j);
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "[gibbslab] wall-clock " << elapsed << " ms\n";
  return exit_code;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gl::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gl::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsified;
  }
  return kExitOk;
}
