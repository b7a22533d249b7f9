#pragma once

// Abstract orbit graphs: fixed points with the dimensions of their positive
// and negative cells, and an edge p -> q whenever some flow line runs from p
// (its limit at infinity) to q (its limit at zero). Graphs may be authored by
// hand, so cyclic (non-filterable) inputs are allowed.

#include <json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toricbb {

struct FlowNode {
  std::string id;
  int pos_dim = 0;
  int neg_dim = 0;
};

struct FlowGraph {
  int ambient_dim = 0;
  std::vector<FlowNode> nodes;
  /// Node indices (src, dst).
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// {"ambientDim": n, "nodes": [{"id", "posDim", "negDim"}], "edges": [[src, dst], ...]}.
  /// Throws InputError on unknown ids, duplicate ids, negative dimensions or self-loops.
  static FlowGraph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// Throws InputError if the graph breaks its invariants.
  void validate() const;
};

/// Id order used for every tie-break: numerically when both ids are
/// non-negative decimal integers, lexicographically otherwise.
bool id_less(const std::string& a, const std::string& b);

struct Filterability {
  bool filterable = false;
  /// Topological order (node indices), ties broken by id; empty when cyclic.
  std::vector<std::size_t> order;
  /// A shortest directed cycle starting at its smallest id; empty when acyclic.
  std::vector<std::size_t> cycle;
};

Filterability is_filterable(const FlowGraph& g);

struct NumericStrat {
  bool holds = true;
  /// Edges (src, dst) with negDim(src) + posDim(dst) <= ambientDim.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

NumericStrat numeric_strat_condition(const FlowGraph& g);

struct CellCensus {
  std::map<int, std::size_t> counts;
  /// Every dimension 0..ambientDim has at least one cell.
  bool every_dimension_present = false;
};

/// Histogram of positive cell dimensions. For a filterable graph a missing
/// dimension contradicts the cells-in-every-dimension theorem and raises
/// InternalConsistencyError; non-filterable graphs only report the flag.
CellCensus cells_per_dimension(const FlowGraph& g);

/// All edges reversed, positive and negative dimensions swapped.
FlowGraph reversed(const FlowGraph& g);

/// Strong product: (a,b) -> (a',b') when each coordinate either moves along
/// an edge or stays put, and at least one moves. Node (i, j) has index
/// i * h.nodes.size() + j and id "(a,b)".
FlowGraph strong_product(const FlowGraph& g, const FlowGraph& h);

}  // namespace toricbb
