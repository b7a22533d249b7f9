#include "toricbb/flow_graph.hpp"

#include "toricbb/errors.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <queue>
#include <set>

namespace toricbb {

namespace {

bool is_decimal(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::vector<std::size_t>> out_lists(const FlowGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.nodes.size());
  for (auto [s, t] : g.edges) out[s].push_back(t);
  for (auto& l : out) {
    std::sort(l.begin(), l.end(), [&](std::size_t a, std::size_t b) { return id_less(g.nodes[a].id, g.nodes[b].id); });
  }
  return out;
}

std::vector<std::size_t> nodes_by_id(const FlowGraph& g) {
  std::vector<std::size_t> idx(g.nodes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return id_less(g.nodes[a].id, g.nodes[b].id); });
  return idx;
}

}  // namespace

bool id_less(const std::string& a, const std::string& b) {
  if (is_decimal(a) && is_decimal(b)) {
    auto strip = [](const std::string& s) {
      auto p = s.find_first_not_of('0');
      return p == std::string::npos ? std::string("0") : s.substr(p);
    };
    std::string x = strip(a);
    std::string y = strip(b);
    if (x.size() != y.size()) return x.size() < y.size();
    if (x != y) return x < y;
  }
  return a < b;
}

void FlowGraph::validate() const {
  std::set<std::string> ids;
  for (const auto& n : nodes) {
    if (!ids.insert(n.id).second) throw InputError("flow graph: duplicate node id '" + n.id + "'");
    if (n.pos_dim < 0 || n.neg_dim < 0) throw InputError("flow graph: negative cell dimension at '" + n.id + "'");
  }
  for (auto [s, t] : edges) {
    if (s >= nodes.size() || t >= nodes.size()) throw InputError("flow graph: edge endpoint out of range");
    if (s == t) throw InputError("flow graph: self-loop at '" + nodes[s].id + "'");
  }
}

FlowGraph FlowGraph::from_json(const nlohmann::json& j) {
  try {
    FlowGraph g;
    g.ambient_dim = j.at("ambientDim").get<int>();
    std::map<std::string, std::size_t> index;
    for (const auto& n : j.at("nodes")) {
      FlowNode node{n.at("id").get<std::string>(), n.at("posDim").get<int>(), n.at("negDim").get<int>()};
      if (!index.emplace(node.id, g.nodes.size()).second) {
        throw InputError("flow graph: duplicate node id '" + node.id + "'");
      }
      g.nodes.push_back(std::move(node));
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("flow graph: each edge must be a [src, dst] pair");
      auto lookup = [&](const nlohmann::json& id) {
        auto it = index.find(id.get<std::string>());
        if (it == index.end()) throw InputError("flow graph: unknown node id " + id.dump());
        return it->second;
      };
      auto edge = std::make_pair(lookup(e[0]), lookup(e[1]));
      if (seen.insert(edge).second) g.edges.push_back(edge);
    }
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("flow graph JSON: ") + ex.what());
  }
}

nlohmann::json FlowGraph::to_json() const {
  nlohmann::json jn = nlohmann::json::array();
  for (const auto& n : nodes) jn.push_back({{"id", n.id}, {"posDim", n.pos_dim}, {"negDim", n.neg_dim}});
  nlohmann::json je = nlohmann::json::array();
  for (auto [s, t] : edges) je.push_back({nodes[s].id, nodes[t].id});
  return {{"ambientDim", ambient_dim}, {"nodes", jn}, {"edges", je}};
}

Filterability is_filterable(const FlowGraph& g) {
  g.validate();
  const std::size_t n = g.nodes.size();
  auto out = out_lists(g);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [s, t] : g.edges) ++indegree[t];

  auto later = [&](std::size_t a, std::size_t b) { return id_less(g.nodes[b].id, g.nodes[a].id); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  Filterability result;
  while (!ready.empty()) {
    std::size_t u = ready.top();
    ready.pop();
    result.order.push_back(u);
    for (std::size_t w : out[u]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (result.order.size() == n) {
    result.filterable = true;
    return result;
  }
  result.order.clear();

  // Shortest cycle: BFS from every node, keeping the first strictly shorter hit.
  for (std::size_t s : nodes_by_id(g)) {
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> dist(n, n);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    std::optional<std::size_t> closing;
    while (!queue.empty() && !closing) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : out[u]) {
        if (w == s) {
          closing = u;
          break;
        }
        if (dist[w] == n) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (!closing) continue;
    if (!result.cycle.empty() && dist[*closing] + 1 >= result.cycle.size()) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t u = *closing; u != s; u = parent[u]) cycle.push_back(u);
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    result.cycle = std::move(cycle);
  }
  return result;
}

NumericStrat numeric_strat_condition(const FlowGraph& g) {
  g.validate();
  NumericStrat result;
  for (auto [s, t] : g.edges) {
    if (g.nodes[s].neg_dim + g.nodes[t].pos_dim <= g.ambient_dim) {
      result.holds = false;
      result.violations.emplace_back(s, t);
    }
  }
  std::sort(result.violations.begin(), result.violations.end());
  return result;
}

CellCensus cells_per_dimension(const FlowGraph& g) {
  CellCensus census;
  for (const auto& n : g.nodes) ++census.counts[n.pos_dim];
  census.every_dimension_present = true;
  for (int d = 0; d <= g.ambient_dim; ++d) {
    if (!census.counts.count(d)) census.every_dimension_present = false;
  }
  if (!census.every_dimension_present && !g.nodes.empty() && is_filterable(g).filterable) {
    throw InternalConsistencyError("cells_per_dimension: filterable graph is missing a cell dimension");
  }
  return census;
}

FlowGraph reversed(const FlowGraph& g) {
  FlowGraph r;
  r.ambient_dim = g.ambient_dim;
  for (const auto& n : g.nodes) r.nodes.push_back(FlowNode{n.id, n.neg_dim, n.pos_dim});
  for (auto [s, t] : g.edges) r.edges.emplace_back(t, s);
  return r;
}

FlowGraph strong_product(const FlowGraph& g, const FlowGraph& h) {
  FlowGraph p;
  p.ambient_dim = g.ambient_dim + h.ambient_dim;
  const std::size_t m = h.nodes.size();
  for (const auto& a : g.nodes) {
    for (const auto& b : h.nodes) {
      p.nodes.push_back(FlowNode{"(" + a.id + "," + b.id + ")", a.pos_dim + b.pos_dim, a.neg_dim + b.neg_dim});
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [s, t] : g.edges) {
    for (std::size_t j = 0; j < m; ++j) edges.emplace(s * m + j, t * m + j);
    for (auto [u, w] : h.edges) edges.emplace(s * m + u, t * m + w);
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (auto [u, w] : h.edges) edges.emplace(i * m + u, i * m + w);
  }
  p.edges.assign(edges.begin(), edges.end());
  return p;
}

}  // namespace toricbb
