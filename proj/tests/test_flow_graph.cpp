#include <doctest.h>

#include "support.hpp"
#include "toricbb/errors.hpp"
#include "toricbb/flow_graph.hpp"

#include <functional>

using namespace testing;
using nlohmann::json;

namespace {

FlowGraph three_cycle() {
  return FlowGraph::from_json(json::parse(R"({
    "ambientDim": 1,
    "nodes": [{"id": "a", "posDim": 0, "negDim": 1},
              {"id": "b", "posDim": 1, "negDim": 0},
              {"id": "c", "posDim": 1, "negDim": 0}],
    "edges": [["a", "b"], ["b", "c"], ["c", "a"]]})"));
}

std::vector<std::string> ids(const FlowGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(g.nodes[i].id);
  return out;
}

// Colour-marking DFS, independent of the Kahn-based implementation.
bool has_cycle(const FlowGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (auto [s, t] : g.edges) adj[s].push_back(t);
  std::vector<int> colour(g.nodes.size(), 0);
  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    colour[u] = 1;
    for (auto w : adj[u]) {
      if (colour[w] == 1 || (colour[w] == 0 && visit(w))) return true;
    }
    colour[u] = 2;
    return false;
  };
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    if (colour[u] == 0 && visit(u)) return true;
  }
  return false;
}

bool is_cycle_in(const FlowGraph& g, const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 2) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto e = std::make_pair(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) return false;
  }
  return true;
}

FlowGraph random_digraph(std::mt19937& rng, std::size_t n, double density) {
  FlowGraph g;
  g.ambient_dim = 2;
  for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(FlowNode{std::to_string(i), 1, 1});
  std::bernoulli_distribution coin(density);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t && coin(rng)) g.edges.emplace_back(s, t);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("three-cycle is not filterable") {
  FlowGraph g = three_cycle();
  Filterability f = is_filterable(g);
  CHECK_FALSE(f.filterable);
  CHECK(ids(g, f.cycle) == std::vector<std::string>{"a", "b", "c"});
  CHECK(f.order.empty());

  FlowGraph r = reversed(g);
  Filterability fr = is_filterable(r);
  CHECK_FALSE(fr.filterable);
  CHECK(is_cycle_in(r, fr.cycle));
  std::vector<std::size_t> back(f.cycle.rbegin(), f.cycle.rend());
  CHECK(is_cycle_in(r, back));

  CellCensus census = cells_per_dimension(g);
  CHECK(census.counts == std::map<int, std::size_t>{{0, 1}, {1, 2}});
}

TEST_CASE("shortest cycle is reported") {
  FlowGraph g = FlowGraph::from_json(json::parse(R"({
    "ambientDim": 2,
    "nodes": [{"id": "0", "posDim": 0, "negDim": 2}, {"id": "1", "posDim": 1, "negDim": 1},
              {"id": "2", "posDim": 1, "negDim": 1}, {"id": "3", "posDim": 2, "negDim": 0},
              {"id": "10", "posDim": 1, "negDim": 1}],
    "edges": [["0", "1"], ["1", "2"], ["2", "3"], ["3", "0"], ["2", "10"], ["10", "2"]]})"));
  Filterability f = is_filterable(g);
  CHECK_FALSE(f.filterable);
  CHECK(ids(g, f.cycle) == std::vector<std::string>{"2", "10"});
}

TEST_CASE("toric orbit graphs are filterable") {
  for (const auto& [name, p] : smooth_fixtures()) {
    CAPTURE(name);
    for (const auto& c : sample_admissible(p, 8, 67)) {
      FlowGraph g = orbit_graph(Flow(p, c)).to_flow_graph();
      Filterability f = is_filterable(g);
      CHECK(f.filterable);
      CHECK(f.order.size() == g.nodes.size());
      std::vector<std::size_t> rank(g.nodes.size());
      for (std::size_t i = 0; i < f.order.size(); ++i) rank[f.order[i]] = i;
      for (auto [s, t] : g.edges) CHECK(rank[s] < rank[t]);
      CellCensus census = cells_per_dimension(g);
      CHECK(census.every_dimension_present);
      std::size_t total = 0;
      for (auto [d, n] : census.counts) total += n;
      CHECK(total == g.nodes.size());
    }
  }
}

TEST_CASE("graphs without edges") {
  FlowGraph g = FlowGraph::from_json(
      json::parse(R"({"ambientDim": 0, "nodes": [{"id": "x", "posDim": 0, "negDim": 0}], "edges": []})"));
  CHECK(is_filterable(g).filterable);
  CHECK(numeric_strat_condition(g).holds);
}

TEST_CASE("numeric stratification condition") {
  Polytope prism = fixture(FixtureId::Prism714);
  FlowGraph g = orbit_graph(Flow(prism, Cocharacter{iv({-1, 1, 2})})).to_flow_graph();
  NumericStrat s = numeric_strat_condition(g);
  CHECK_FALSE(s.holds);
  bool ik = false;
  for (auto [a, b] : s.violations) {
    if (g.nodes[a].id == "2" && g.nodes[b].id == "4") {
      ik = true;
      CHECK(g.nodes[a].neg_dim == 1);
      CHECK(g.nodes[b].pos_dim == 2);
    }
  }
  CHECK(ik);

  Polytope s3 = simplex(3);
  for (const auto& c : sample_admissible(s3, 10, 71)) {
    CHECK(numeric_strat_condition(orbit_graph(Flow(s3, c)).to_flow_graph()).holds);
  }
}

TEST_CASE("cells per dimension") {
  SUBCASE("permutahedron counts are Eulerian numbers") {
    Permutahedron pi = permutahedron_labeled(3);
    IntVector ambient{0, 1, 2, 3};
    Flow flow(pi.polytope, Cocharacter{pi.frame.restrict_covector(ambient)});
    CellCensus c = cells_per_dimension(orbit_graph(flow).to_flow_graph());
    // Count permutations of four letters by descents.
    std::map<int, std::size_t> eulerian;
    std::vector<int> w{0, 1, 2, 3};
    do {
      int d = 0;
      for (std::size_t k = 0; k + 1 < w.size(); ++k) d += w[k] > w[k + 1];
      ++eulerian[d];
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(c.counts == eulerian);
    CHECK(c.counts == std::map<int, std::size_t>{{0, 1}, {1, 11}, {2, 11}, {3, 1}});
  }
  SUBCASE("segment") {
    Polytope seg = simplex(1);
    CHECK(cells_per_dimension(orbit_graph(Flow(seg, Cocharacter{iv({1})})).to_flow_graph()).counts ==
          std::map<int, std::size_t>{{0, 1}, {1, 1}});
  }
  SUBCASE("unit square") {
    Polytope sq = unit_square();
    CHECK(cells_per_dimension(orbit_graph(Flow(sq, Cocharacter{iv({1, 2})})).to_flow_graph()).counts ==
          std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 1}});
  }
  SUBCASE("filterable graph missing a dimension") {
    FlowGraph g = FlowGraph::from_json(json::parse(
        R"({"ambientDim": 1, "nodes": [{"id": "a", "posDim": 0, "negDim": 1}, {"id": "b", "posDim": 0, "negDim": 1}],
            "edges": [["a", "b"]]})"));
    CHECK_THROWS_AS(cells_per_dimension(g), InternalConsistencyError);
  }
}

TEST_CASE("strong products") {
  std::mt19937 rng(73);
  int cyclic = 0, acyclic = 0;
  for (int t = 0; t < 60; ++t) {
    FlowGraph a = random_digraph(rng, 2 + rng() % 3, 0.3);
    FlowGraph b = random_digraph(rng, 2 + rng() % 3, 0.3);
    FlowGraph ab = strong_product(a, b);
    CHECK(ab.nodes.size() == a.nodes.size() * b.nodes.size());
    bool expected = is_filterable(a).filterable && is_filterable(b).filterable;
    CHECK(is_filterable(ab).filterable == expected);
    CHECK(!has_cycle(ab) == expected);
    (expected ? acyclic : cyclic)++;
    Filterability f = is_filterable(ab);
    if (!f.filterable) CHECK(is_cycle_in(ab, f.cycle));
    CHECK(is_filterable(reversed(ab)).filterable == expected);
  }
  CHECK(cyclic > 5);
  CHECK(acyclic > 5);
}

TEST_CASE("JSON round trip and validation") {
  FlowGraph g = three_cycle();
  FlowGraph again = FlowGraph::from_json(g.to_json());
  CHECK(again.to_json() == g.to_json());

  CHECK_THROWS_AS(FlowGraph::from_json(json::parse(
                      R"({"ambientDim": 1, "nodes": [{"id": "a", "posDim": 0, "negDim": 1}], "edges": [["a", "a"]]})")),
                  InputError);
  CHECK_THROWS_AS(FlowGraph::from_json(json::parse(
                      R"({"ambientDim": 1, "nodes": [{"id": "a", "posDim": 0, "negDim": 1}], "edges": [["a", "z"]]})")),
                  InputError);
  CHECK_THROWS_AS(FlowGraph::from_json(json::parse(R"({"ambientDim": 1, "nodes": [{"id": "a", "posDim": -1, "negDim": 1}],
                                                      "edges": []})")),
                  InputError);
  CHECK_THROWS_AS(FlowGraph::from_json(json::parse(R"({"nodes": 3})")), InputError);
}
