#include "gibbslab/kozlov.hpp"
#include <limits>

#include <cmath>
#include <map>
#include <string>

namespace gibbslab {

std::vector<Pattern> enumerate_window(const WindowedSpace& ws) {
  return admissible_fillings(*ws.sft, ws.boundary, ws.window, ws.budget);
}

namespace {

// Window patterns grouped by their restriction off `moving`; members of one
// group are pairwise T_moving-related.
std::map<std::string, std::vector<const Pattern*>> group_off(
    const std::vector<Pattern>& patterns, const Shape& window,
    const Shape& moving) {
  Shape off = shape_difference(window, moving);
  std::map<std::string, std::vector<const Pattern*>> groups;
  for (const Pattern& p : patterns) groups[p.restricted(off).key()].push_back(&p);
  return groups;
}

ExtensionCertificate certify(const WindowedSpace& ws,
                             const std::vector<Pattern>& patterns,
                             const Interaction& phi, const Cocycle& psi_star,
                             const Shape& b) {
  ExtensionCertificate cert;
  cert.exact_on = b;
  auto groups = group_off(patterns, ws.window, b);
  for (const auto& [key, group] : groups) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      Configuration x = ws.boundary.with(*group[i]);
      if (cert.pairs_checked > ws.budget.max_nodes)
        throw BudgetError("kozlov certificate: pair budget exceeded");
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        Configuration y = ws.boundary.with(*group[j]);
        AsymptoticPair pair = AsymptoticPair::make(x, y);
        double got = interaction_cocycle_eval(phi, pair);
        double want = psi_star.eval(pair);
        cert.max_error = std::max(cert.max_error, std::abs(got - want));
        ++cert.pairs_checked;
      }
    }
  }
  return cert;
}

void check_vanishes_on(const WindowedSpace& ws,
                       const std::vector<Pattern>& patterns,
                       const Cocycle& psi_star, const Shape& a, double bound,
                       const char* who) {
  if (a.empty()) return;
  auto groups = group_off(patterns, ws.window, a);
  for (const auto& [key, group] : groups) {
    if (group.size() < 2) continue;
    Configuration x0 = ws.boundary.with(*group.front());
    for (std::size_t j = 1; j < group.size(); ++j) {
      Configuration y = ws.boundary.with(*group[j]);
      double v = psi_star.eval(AsymptoticPair::make(x0, y));
      if (!(std::abs(v) < bound))
        throw InputError(std::string(who) +
                         ": cocycle exceeds the required bound on T_a pairs "
                         "(|psi*| = " +
                         std::to_string(std::abs(v)) + ")");
    }
  }
}

Shape require_markov_window(const WindowedSpace& ws, const Cocycle& psi,
                            const Shape& ab) {
  auto reads = psi.reads_for(ab);
  if (!reads)
    throw InputError("kozlov: cocycle carries no Markov memory data");
  Shape d = shape_union(memory_set(*ws.sft, ab), *reads);
  if (!d.subset_of(ws.window))
    throw InputError(
        "kozlov: window smaller than the memory set of the target region");
  return d;
}

// Potential from edge differences: union-find components plus BFS over the
// recorded edges; non-tree edges must agree with the cocycle value.
struct PotentialBuilder {
  std::map<std::string, int> ids;
  std::vector<std::string> keys;
  std::vector<int> parent;
  struct Edge {
    int p, q;
    double delta;
  };
  std::vector<Edge> edges;

  int id_of(const std::string& key) {
    auto [it, fresh] = ids.try_emplace(key, static_cast<int>(keys.size()));
    if (fresh) {
      keys.push_back(key);
      parent.push_back(it->second);
    }
    return it->second;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void add_edge(const std::string& pk, const std::string& qk, double delta) {
    int p = id_of(pk), q = id_of(qk);
    edges.push_back({p, q, delta});
    parent[find(p)] = find(q);
  }

  // Returns key -> potential; roots (lowest key per component) get value 0.
  std::map<std::string, double> solve(double tol) const {
    std::map<std::string, double> value;
    std::vector<std::vector<std::pair<int, double>>> adjacency(keys.size());
    for (const Edge& e : edges) {
      adjacency[e.p].push_back({e.q, e.delta});
      adjacency[e.q].push_back({e.p, -e.delta});
    }
    std::vector<char> seen(keys.size(), 0);
    std::vector<double> pot(keys.size(), 0.0);
    // Deterministic roots: ids were assigned in key-discovery order, so walk
    // keys in sorted order and start a BFS at each unseen vertex.
    std::map<std::string, int> sorted(ids.begin(), ids.end());
    for (const auto& [key, root] : sorted) {
      if (seen[root]) continue;
      seen[root] = 1;
      pot[root] = 0.0;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, delta] : adjacency[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            pot[w] = pot[v] + delta;
            stack.push_back(w);
          } else if (std::abs(pot[v] + delta - pot[w]) > tol) {
            throw ConsistencyError(
                "potential reconstruction: edge violates the cocycle value "
                "by " +
                std::to_string(std::abs(pot[v] + delta - pot[w])));
          }
        }
      }
    }
    for (std::size_t i = 0; i < keys.size(); ++i) value[keys[i]] = pot[i];
    return value;
  }
};

}  // namespace

KozlovResult kozlov_partial(const WindowedSpace& ws, const Cocycle& psi_star,
                            const Shape& a, const Shape& b, double tol) {
  if (!a.subset_of(ws.window) || !b.subset_of(ws.window))
    throw InputError("kozlov_partial: regions must lie inside the window");
  Shape ab = shape_union(a, b);
  Shape d = require_markov_window(ws, psi_star, ab);
  Shape support = shape_difference(d, a);

  std::vector<Pattern> patterns = enumerate_window(ws);
  check_vanishes_on(ws, patterns, psi_star, a, tol, "kozlov_partial");

  KozlovResult result;
  result.support = support;
  result.phi = Interaction(InteractionMode::SiteIndexed);
  if (support.empty()) {
    result.certificate = certify(ws, patterns, result.phi, psi_star, b);
    return result;
  }

  PotentialBuilder builder;
  auto groups = group_off(patterns, ws.window, b);
  for (const auto& [key, group] : groups) {
    Configuration x0 = ws.boundary.with(*group.front());
    std::string k0 = group.front()->restricted(support).key();
    builder.id_of(k0);
    for (std::size_t j = 1; j < group.size(); ++j) {
      Configuration y = ws.boundary.with(*group[j]);
      double delta = psi_star.eval(AsymptoticPair::make(x0, y));
      builder.add_edge(k0, group[j]->restricted(support).key(), delta);
    }
  }
  for (const auto& [key, value] : builder.solve(tol)) {
    std::vector<Symbol> syms(key.begin(), key.end());
    result.phi.set(Pattern(support, std::move(syms)), value);
  }
  result.certificate = certify(ws, patterns, result.phi, psi_star, b);
  return result;
}

KozlovChainResult kozlov_chain(const WindowedSpace& ws, const Cocycle& psi,
                               const std::vector<Shape>& chain, double tol) {
  if (chain.empty()) throw InputError("kozlov_chain: empty chain");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!chain[i - 1].subset_of(chain[i]))
      throw InputError("kozlov_chain: chain must be increasing");

  KozlovChainResult result;
  result.phi = Interaction(InteractionMode::SiteIndexed);
  Cocycle current = psi;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Shape a = i == 0 ? Shape{} : chain[i - 1];
    KozlovResult step = kozlov_partial(ws, current, a, chain[i], tol);
    for (const auto& [shape, table] : step.phi.entries())
      if (!a.empty() && !shape_intersection(shape, a).empty())
        result.support_disjoint = false;
    result.steps.push_back(
        {a, chain[i], step.support, step.certificate.max_error});
    result.phi += step.phi;
    current = psi - Cocycle::from_interaction(*ws.sft, result.phi);
  }
  std::vector<Pattern> patterns = enumerate_window(ws);
  result.certificate =
      certify(ws, patterns, result.phi, psi, chain.back());
  return result;
}

namespace {

// Continuity window: sites on which ψ must be pinned so that its value on
// T_region pairs moves by less than `bound` — the dilation radius from the
// declared modulus, or the exact reads of a Markov cocycle.
Shape continuity_window(const WindowedSpace& ws, const Cocycle& psi,
                        const Shape& region, double bound) {
  if (psi.modulus) {
    int max_r = ws.window.diameter();
    for (int r = 0; r <= max_r; ++r)
      if (psi.modulus(r) < bound)
        return dilate(region, r, ws.sft->dimension());
    throw InputError(
        "kozlov_approx: declared modulus never reaches the requested bound "
        "inside the window");
  }
  auto reads = psi.reads_for(region);
  if (!reads)
    throw InputError("kozlov_approx: no modulus and no Markov data");
  return *reads;
}

// Canonical configuration extending `partial` over the window (least
// admissible completion), glued into the boundary.
Configuration canonical_extension(const WindowedSpace& ws,
                                  const Pattern& partial) {
  auto completed =
      least_completion(*ws.sft, ws.boundary, partial, ws.window);
  if (!completed)
    throw ConsistencyError(
        "kozlov_approx: no admissible completion for a window pattern");
  return ws.boundary.with(*completed);
}

}  // namespace

KozlovApproxResult kozlov_approx(const WindowedSpace& ws,
                                 const Cocycle& psi_star, const Shape& a,
                                 const Shape& b, double eps_in,
                                 double delta_out) {
  if (!a.subset_of(ws.window) || !b.subset_of(ws.window))
    throw InputError("kozlov_approx: regions must lie inside the window");
  if (!a.subset_of(b))
    throw InputError("kozlov_approx: needs a ⊆ b (shared exteriors)");
  Shape ab = shape_union(a, b);
  const SftSpace& sft = *ws.sft;

  // Stage-one window: memory for b plus the eps_in continuity window.
  Shape d1 = shape_union(memory_set(sft, ab),
                         continuity_window(ws, psi_star, ab, eps_in));
  if (!d1.subset_of(ws.window))
    throw InputError("kozlov_approx: stage-one radius exceeds the window");
  Shape e1 = shape_difference(d1, a);

  std::vector<Pattern> patterns = enumerate_window(ws);
  check_vanishes_on(ws, patterns, psi_star, a, eps_in, "kozlov_approx");

  KozlovApproxResult result;
  result.d1 = d1;
  result.phi = Interaction(InteractionMode::SiteIndexed);

  // Stage 1: anchored values on e1, one root per class.
  if (!e1.empty()) {
    Shape share = shape_difference(e1, b);  // classes agree here
    auto groups = group_off(patterns, ws.window, b);
    std::map<std::string, std::map<std::string, const Pattern*>> classes;
    for (const auto& [key, group] : groups)
      for (const Pattern* p : group) {
        Pattern on_e1 = p->restricted(e1);
        classes[on_e1.restricted(share).key()].try_emplace(on_e1.key(), p);
      }
    Interaction phi1(InteractionMode::SiteIndexed);
    for (const auto& [share_key, members] : classes) {
      // Shared canonical exterior from the class's d1\b restriction.
      const Pattern* first = members.begin()->second;
      Configuration z =
          canonical_extension(ws, first->restricted(shape_difference(d1, b)));
      auto anchored = [&](const std::string& e1_key) {
        std::vector<Symbol> syms(e1_key.begin(), e1_key.end());
        Pattern on_e1(e1, std::move(syms));
        Configuration u = canonical_extension(ws, on_e1);
        // z off d1, the pattern on e1, canonical values on a.
        Configuration x = z;
        for (Site s : e1.sites()) x = x.with(s, on_e1.at(s));
        for (Site s : a.sites()) x = x.with(s, u.at(s));
        return x;
      };
      Configuration x0 = anchored(members.begin()->first);
      if (!config_admissible_near(sft, x0, d1))
        throw ConsistencyError("kozlov_approx: anchored gluing inadmissible");
      for (const auto& [e1_key, p] : members) {
        Configuration xp = anchored(e1_key);
        double f1 = psi_star.eval(AsymptoticPair::make(x0, xp));
        std::vector<Symbol> syms(e1_key.begin(), e1_key.end());
        phi1.set(Pattern(e1, std::move(syms)), f1);
      }
    }
    result.phi += phi1;
  }

  // Stage 2: correct the residual on full d2 patterns. The interaction part
  // is reproduced exactly once its placements are pinned, so its reads join
  // the continuity window of psi_star itself.
  Cocycle psi1 = Cocycle::from_interaction(sft, result.phi);
  Cocycle residual = psi_star - psi1;
  Shape phi1_reads = *psi1.reads_for(b);
  Shape d2 = shape_union(shape_union(memory_set(sft, b), d1),
                         shape_union(continuity_window(ws, psi_star, b, delta_out),
                                     phi1_reads));
  if (!d2.subset_of(ws.window))
    throw InputError("kozlov_approx: stage-two radius exceeds the window");
  result.d2 = d2;

  {
    auto groups = group_off(patterns, ws.window, b);
    std::map<std::string, std::map<std::string, const Pattern*>> classes;
    for (const auto& [key, group] : groups)
      for (const Pattern* p : group) {
        Pattern on_d2 = p->restricted(d2);
        classes[on_d2.restricted(shape_difference(d2, b)).key()]
            .try_emplace(on_d2.key(), p);
      }
    Interaction phi2(InteractionMode::SiteIndexed);
    for (const auto& [share_key, members] : classes) {
      const Pattern* first = members.begin()->second;
      Configuration z =
          canonical_extension(ws, first->restricted(shape_difference(d2, b)));
      std::map<std::string, double> f2;
      double f_min = 0.0, f_max = 0.0;
      bool any = false;
      Configuration x0 = z;
      {
        std::vector<Symbol> syms(members.begin()->first.begin(),
                                 members.begin()->first.end());
        Pattern on_d2(d2, std::move(syms));
        for (Site s : d2.sites()) x0 = x0.with(s, on_d2.at(s));
      }
      for (const auto& [d2_key, p] : members) {
        std::vector<Symbol> syms(d2_key.begin(), d2_key.end());
        Pattern on_d2(d2, std::move(syms));
        Configuration xp = z;
        for (Site s : d2.sites()) xp = xp.with(s, on_d2.at(s));
        double v = residual.eval(AsymptoticPair::make(x0, xp));
        f2[d2_key] = v;
        f_min = any ? std::min(f_min, v) : v;
        f_max = any ? std::max(f_max, v) : v;
        any = true;
      }
      double center = (f_min + f_max) / 2.0;
      for (const auto& [d2_key, v] : f2) {
        std::vector<Symbol> syms(d2_key.begin(), d2_key.end());
        phi2.set(Pattern(d2, std::move(syms)), v - center);
      }
    }
    result.phi += phi2;

    // Boundary norm: entries meeting a.
    for (const auto& [shape, table] : result.phi.entries()) {
      if (a.empty() || shape_intersection(shape, a).empty()) continue;
      double sup = 0.0;
      for (const auto& [key, v] : table) sup = std::max(sup, std::abs(v));
      result.boundary_norm += sup;
    }
    result.boundary_bound = 3.0 * eps_in;
  }

  result.certificate = certify(ws, patterns, result.phi, psi_star, b);
  return result;
}

ApproxChainResult kozlov_approx_chain(const WindowedSpace& ws,
                                      const Cocycle& psi,
                                      const std::vector<Shape>& chain,
                                      double eps0) {
  if (chain.empty()) throw InputError("kozlov_approx_chain: empty chain");
  ApproxChainResult result;
  result.phi = Interaction(InteractionMode::SiteIndexed);
  double eps_prev = eps0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    double eps_n = eps0 * std::pow(2.0, -static_cast<double>(i + 1));
    Shape a = i == 0 ? Shape{} : chain[i - 1];

    Cocycle current = psi;
    if (i > 0) {
      // The residual's interaction part contributes exact reads through the
      // combination; only psi's own tail needs the declared modulus, and it
      // is valid only once the built entries are pinned.
      Cocycle rebuilt = Cocycle::from_interaction(*ws.sft, result.phi);
      current = psi - rebuilt;
      if (psi.modulus) {
        Shape pin = *rebuilt.reads_for(chain[i]);
        Site lo = pin.bound_lo(), hi = pin.bound_hi();
        Site blo = chain[i].bound_lo(), bhi = chain[i].bound_hi();
        int reach = std::max({blo.x - lo.x, blo.y - lo.y, hi.x - bhi.x,
                              hi.y - bhi.y, 0});
        auto base_modulus = psi.modulus;
        current.modulus = [base_modulus, reach](int r) {
          if (r < reach) return std::numeric_limits<double>::infinity();
          return base_modulus(r);
        };
      }
    }

    KozlovApproxResult step =
        kozlov_approx(ws, current, a, chain[i], eps_prev, eps_n);
    result.phi += step.phi;
    result.steps.push_back({chain[i], eps_n, step.certificate.max_error,
                            step.boundary_norm});
    result.tail_bound += 3.0 * eps_n;
    eps_prev = eps_n;
  }
  return result;
}

}  // namespace gibbslab
