#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gkm2/examples.hpp"
#include "gkm2/moment_graph.hpp"

using namespace gkm2;

namespace {

const char* const k2_document = R"({"rank": 1, "vertices": ["a", "b"],
  "edges": [{"u": "a", "v": "b", "weight": [1]}]})";

const char* const cp2_document = R"({"rank": 1, "vertices": ["p1", "p2", "p3"],
  "edges": [{"u": "p1", "v": "p2", "weight": [1]},
            {"u": "p1", "v": "p3", "weight": []},
            {"u": "p2", "v": "p3", "weight": [1]}]})";

bool has_violation(const ValidationReport& r, const std::string& vertex, const std::string& text) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) {
    return v.vertex == vertex && v.description.find(text) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("parse_graph") {
  const MomentGraph k2 = parse_graph(k2_document);
  CHECK(k2.rank() == 1);
  CHECK(k2.vertex_count() == 2);
  REQUIRE(k2.edges().size() == 1);
  CHECK(k2.edges()[0].weight == LinearForm::variable(1, 1));
  CHECK_FALSE(k2.degenerate());

  const MomentGraph cp2 = parse_graph(cp2_document);
  CHECK(cp2.degenerate());
  CHECK(cp2.edges()[1].weight.is_zero());
  CHECK(cp2 == examples::cp2_bad());

  // Unsorted weights are accepted and canonicalized.
  const MomentGraph unsorted = parse_graph(
      R"({"rank": 2, "vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "weight": [2, 1]}]})");
  CHECK(unsorted.edges()[0].weight.to_string() == "x1+x2");
}

TEST_CASE("parse_graph errors") {
  CHECK_THROWS_AS(parse_graph("{not json"), GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": 1, "vertices": ["a", "b"],
    "edges": [{"u": "a", "v": "Z", "weight": [1]}]})"),
                  GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": 1, "vertices": ["a", "b"],
    "edges": [{"u": "a", "v": "b", "weight": [2]}]})"),
                  GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": 1, "vertices": ["a", "b"],
    "edges": [{"u": "a", "v": "b", "weight": [0]}]})"),
                  GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": 1, "vertices": ["a", "a"], "edges": []})"), GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": 1, "vertices": ["a"],
    "edges": [{"u": "a", "v": "a", "weight": [1]}]})"),
                  GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": [], "edges": []})"), GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": "two", "vertices": [], "edges": []})"), GraphError);
  CHECK_THROWS_AS(parse_graph(R"([1, 2])"), GraphError);
}

TEST_CASE("serialize round trip") {
  const MomentGraph k2 = parse_graph(k2_document);
  const std::string text = serialize_graph(k2);
  CHECK(parse_graph(text) == k2);
  CHECK(serialize_graph(parse_graph(text)) == text);
  CHECK(text.back() == '\n');

  for (const auto& entry : examples::catalog()) {
    const std::string doc = serialize_graph(entry.graph);
    const MomentGraph back = parse_graph(doc);
    CHECK(back == entry.graph);
    CHECK(back.vertices() == entry.graph.vertices());
  }
  CHECK(parse_graph(serialize_graph(examples::cp2_bad())) == examples::cp2_bad());
}

TEST_CASE("validate_mod2_gkm") {
  CHECK(validate_mod2_gkm(examples::complete_graph(3)).valid);
  CHECK(validate_mod2_gkm(parse_graph(k2_document)).valid);

  const ValidationReport cp2 = validate_mod2_gkm(examples::cp2_bad());
  CHECK_FALSE(cp2.valid);
  CHECK(has_violation(cp2, "p1", "zero weight"));
  CHECK(has_violation(cp2, "p3", "zero weight"));
  CHECK(has_violation(cp2, "p2", "repeated weight"));
  CHECK_FALSE(has_violation(cp2, "p2", "zero weight"));

  CHECK_FALSE(validate_mod2_gkm(examples::gh_cycle(4)).valid);

  // Degree bound: three edges at a vertex need rank >= 2.
  const MomentGraph star(1, {"c", "a", "b", "d"},
                         {{0, 1, LinearForm(1, {1})}, {0, 2, LinearForm(1, {1})},
                          {0, 3, LinearForm(1, {1})}});
  const ValidationReport r = validate_mod2_gkm(star);
  CHECK(has_violation(r, "c", "exceeds bound 1"));
}

TEST_CASE("validate_mod2_gh") {
  CHECK(validate_mod2_gh(examples::gh_cycle(4)).valid);
  CHECK(validate(examples::gh_cycle(3), Mode::gh).valid);

  const MomentGraph star(1, {"c", "a", "b", "d"},
                         {{0, 1, LinearForm(1, {1})}, {0, 2, LinearForm(1, {1})},
                          {0, 3, LinearForm(1, {1})}});
  const ValidationReport r = validate_mod2_gh(star);
  CHECK_FALSE(r.valid);
  CHECK(has_violation(r, "c", "appears 3 times"));

  // A path a-b-c with one weight has mixed local degree.
  const MomentGraph path(1, {"a", "b", "c"},
                         {{0, 1, LinearForm(1, {1})}, {1, 2, LinearForm(1, {1})}});
  CHECK_FALSE(validate_mod2_gh(path).valid);

  CHECK_FALSE(validate_mod2_gh(examples::cp2_bad()).valid);

  // A doubled edge is a two-vertex component of local degree 2.
  const MomentGraph doubled(1, {"a", "b"}, {{0, 1, LinearForm(1, {1})}, {0, 1, LinearForm(1, {1})}});
  CHECK(validate_mod2_gh(doubled).valid);
  CHECK_FALSE(validate_mod2_gkm(doubled).valid);
}

TEST_CASE("valid reports have no violations") {
  for (const auto& entry : examples::catalog())
    for (Mode mode : {Mode::gkm, Mode::gh}) {
      const ValidationReport r = validate(entry.graph, mode);
      CHECK(r.valid == r.violations.empty());
      CHECK(r.mode == mode);
    }
}

TEST_CASE("alpha_components") {
  const auto k3 = alpha_components(examples::complete_graph(3), LinearForm(3, {1, 2}));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].vertices == std::vector<std::size_t>{0, 1});
  CHECK(k3[0].local_degree == 1);

  const auto cycle = alpha_components(examples::gh_cycle(4), LinearForm(1, {1}));
  REQUIRE(cycle.size() == 1);
  CHECK(cycle[0].vertices.size() == 4);
  CHECK(cycle[0].edges.size() == 4);
  CHECK(cycle[0].local_degree == 2);
  CHECK(cycle[0].tree_edges.size() == 3);

  const auto square = alpha_components(examples::hypercube(2), LinearForm(2, {1}));
  REQUIRE(square.size() == 2);
  CHECK(square[0].edges.size() == 1);
  CHECK(square[1].edges.size() == 1);
  CHECK(square[0].vertices != square[1].vertices);

  CHECK(alpha_components(examples::complete_graph(3), LinearForm(3, {3})).empty());

  const MomentGraph path(1, {"a", "b", "c"},
                         {{0, 1, LinearForm(1, {1})}, {1, 2, LinearForm(1, {1})}});
  CHECK_THROWS_AS(alpha_components(path, LinearForm(1, {1})), GraphError);
}

TEST_CASE("alpha components partition the edges") {
  for (const auto& entry : examples::catalog()) {
    const MomentGraph& g = entry.graph;
    std::multiset<std::size_t> seen;
    for (const auto& w : g.distinct_weights())
      for (const auto& comp : alpha_components(g, w)) {
        for (std::size_t e : comp.edges) {
          seen.insert(e);
          CHECK(g.edges()[e].weight == w);
        }
        if (entry.mode == Mode::gkm) CHECK(comp.local_degree == 1);
        CHECK(comp.tree_edges.size() + 1 == comp.vertices.size());
      }
    CHECK(seen.size() == g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) CHECK(seen.count(e) == 1);
  }
}

TEST_CASE("gkm validity implies gh validity") {
  std::mt19937_64 rng(41);
  int gkm_valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t vertices = 2 + trial % 5;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < vertices; ++i) ids.push_back("v" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    std::vector<Edge> edges;
    const std::size_t edge_count = 1 + trial % 6;
    for (std::size_t k = 0; k < edge_count; ++k) {
      const std::size_t u = pick(rng);
      std::size_t v = pick(rng);
      if (v == u) v = (u + 1) % vertices;
      edges.push_back({u, v, LinearForm::from_mask(n, mask(rng))});
    }
    const MomentGraph g(n, ids, edges);
    const bool gkm = validate_mod2_gkm(g).valid;
    if (gkm) {
      ++gkm_valid;
      CHECK(validate_mod2_gh(g).valid);
    }
  }
  CHECK(gkm_valid > 20);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("gkm") == Mode::gkm);
  CHECK(parse_mode("gh") == Mode::gh);
  CHECK(to_string(Mode::gh) == "gh");
  CHECK_THROWS(parse_mode("GKM2"));
}
