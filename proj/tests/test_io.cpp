#include "doctest.h"

#include "gibbslab/json_io.hpp"
#include "gibbslab/manifest.hpp"
#include "gibbslab/markers.hpp"
#include "gibbslab/zoo.hpp"

using namespace gibbslab;

TEST_CASE("sft json round trip") {
  for (const char* name : {"hardcore(1)", "coloring(3,2)", "full(2,1)",
                           "sunny(1)"}) {
    SftSpace sft = builtin_space(name);
    SftSpace back = sft_from_json(sft_to_json(sft));
    CHECK(back.dimension() == sft.dimension());
    CHECK(back.alphabet() == sft.alphabet());
    CHECK(back.forbidden() == sft.forbidden());
    CHECK(back.asserted().ssf == sft.asserted().ssf);
    CHECK(back.asserted().safe_symbol == sft.asserted().safe_symbol);
    CHECK(back.asserted().pivot == sft.asserted().pivot);
    CHECK(back.family() == sft.family());
  }

  // The documented wire format parses.
  Json j = Json::parse(R"({
    "dimension": 1,
    "alphabet": ["0", "1"],
    "forbidden": [{"shape": [[0], [1]], "symbols": ["1", "1"]}],
    "asserted": {"ssf": true, "safe_symbol": "0", "pivot": true}
  })");
  SftSpace hc = sft_from_json(j);
  CHECK(hc.forbidden().size() == 1);
  CHECK(local_admissible(Pattern::of(Shape::interval(0, 1), {1, 0}), hc));
  CHECK_FALSE(local_admissible(Pattern::of(Shape::interval(0, 1), {1, 1}), hc));
}

TEST_CASE("configuration json round trip") {
  SftSpace col = builtin_space("coloring(3,2)");
  Background bg;
  bg.period = {3, 1};
  bg.cell = Pattern(Shape::box({0, 0}, {2, 0}), {0, 1, 2});
  Configuration x{bg};
  x = x.with({0, 0}, 2).with({1, 1}, 0);
  Configuration back = config_from_json(config_to_json(x, col), col);
  CHECK(back == x);

  SftSpace hc = builtin_space("hardcore(1)");
  Configuration y = Configuration().with({-3, 0}, 1).with({2, 0}, 1);
  CHECK(config_from_json(config_to_json(y, hc), hc) == y);

  Json bad = Json::parse(
      R"({"background": {"period": [[2,1],[0,2]], "cell": {}}, "patch": {}})");
  CHECK_THROWS_AS(config_from_json(bad, col), InputError);
}

TEST_CASE("interaction json round trip") {
  SftSpace hc = builtin_space("hardcore(1)");
  Interaction phi(InteractionMode::ShiftInvariant);
  phi.set(Pattern::of(Shape{Site{0, 0}}, {1}), 1.0);
  phi.set(Pattern::of(Shape::interval(0, 1), {1, 0}), 0.25);
  phi.set(Pattern::of(Shape::interval(0, 1), {0, 1}), 0.15);
  Json j = interaction_to_json(phi, hc);
  Interaction back = interaction_from_json(j, hc);
  CHECK(back.entries() == phi.entries());
  CHECK(back.mode() == phi.mode());

  // Pattern strings use symbol names in canonical order.
  bool saw = false;
  for (const auto& entry : j["entries"])
    for (auto it = entry["table"].begin(); it != entry["table"].end(); ++it)
      if (it.key() == "10") saw = true;
  CHECK(saw);
}

TEST_CASE("site-indexed interaction json round trip") {
  SftSpace hc = builtin_space("hardcore(1)");
  Interaction phi(InteractionMode::SiteIndexed);
  phi.set(Pattern::of(Shape{Site{-2, 0}, Site{1, 0}}, {1, 0}), -0.5);
  phi.set(Pattern::of(Shape::interval(3, 4), {0, 1}), 2.0);
  Interaction back = interaction_from_json(interaction_to_json(phi, hc), hc);
  CHECK(back.mode() == InteractionMode::SiteIndexed);
  CHECK(back.entries() == phi.entries());
}

TEST_CASE("marker json round trip") {
  MarkerParams p;
  p.k = 2;
  p.n = 48;
  p.epsilon = 0.45;
  p.seed = 3;
  MarkerSearchReport found = search_markers(p, 20000);
  REQUIRE(found.found);
  MarkerData back = marker_from_json(marker_to_json(found.data));
  CHECK(back.u == found.data.u);
  CHECK(back.v == found.data.v);
  CHECK(back.params.n == p.n);
  CHECK(back.params.epsilon == p.epsilon);
  CHECK(back.certified.condition_a == found.data.certified.condition_a);
  CHECK(back.certified.condition_b == found.data.certified.condition_b);
}

TEST_CASE("manifest digests") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") != fnv1a64("b"));
  RunManifest m;
  m.command = "gibbslab zoo heights";
  m.seed = 7;
  m.workers = 2;
  m.budgets["patterns"] = 42;
  Json j = m.to_json();
  CHECK(j["command"] == "gibbslab zoo heights");
  CHECK(j["seed"] == 7);
  CHECK(j["version"] == kVersion);
}
