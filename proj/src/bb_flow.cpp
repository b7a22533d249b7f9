#include "toricbb/bb_flow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace toricbb {

Admissibility is_admissible(const Polytope& p, const Cocharacter& v) {
  if (v.v.size() != static_cast<std::size_t>(p.dim())) {
    throw InputError("cocharacter has " + std::to_string(v.v.size()) + " coordinates, polytope has dimension " +
                     std::to_string(p.dim()));
  }
  for (auto [a, b] : p.edges()) {
    if (pairing(p.vertex(a), v.v) == pairing(p.vertex(b), v.v)) return Admissibility{false, std::make_pair(a, b)};
  }
  return Admissibility{};
}

Flow::Flow(const Polytope& p, Cocharacter v) : polytope_(&p), v_(std::move(v)) {
  Admissibility adm = is_admissible(p, v_);
  if (!adm.admissible) {
    auto [a, b] = *adm.offending_edge;
    throw InadmissibleCocharacter(a, b,
                                  "cocharacter " + to_string(v_.v) + " is perpendicular to the edge " +
                                      to_string(p.vertex(a)) + "-" + to_string(p.vertex(b)));
  }
  values_.reserve(p.num_vertices());
  for (const auto& x : p.vertices()) values_.push_back(pairing(x, v_.v));
}

std::vector<std::size_t> Flow::order_key() const {
  std::vector<Integer> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> key;
  key.reserve(values_.size());
  for (const auto& x : values_) {
    key.push_back(static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()));
  }
  return key;
}

Extrema face_extrema(const Flow& flow, const Face& f) {
  const auto& vs = f.vertices;
  if (vs.empty()) throw InputError("face_extrema: empty face");
  VertexIndex up = vs.front();
  VertexIndex down = vs.front();
  for (VertexIndex i : vs) {
    if (flow.value(i) > flow.value(up)) up = i;
    if (flow.value(i) < flow.value(down)) down = i;
  }
  return Extrema{up, down};
}

FaceIndex bb_face(const Flow& flow, VertexIndex p, Sign sign) {
  const Polytope& poly = flow.polytope();
  VertexSet span{p};
  for (VertexIndex q : poly.neighbors(p)) {
    bool lower = flow.value(q) < flow.value(p);
    if (lower == (sign == Sign::Plus)) span.push_back(q);
  }
  std::sort(span.begin(), span.end());
  FaceIndex f = poly.face_spanned_by(span);
  Extrema ex = face_extrema(flow, poly.face(f));
  if ((sign == Sign::Plus ? ex.up : ex.down) != p) {
    throw InternalConsistencyError("bb_face: spanned face is not extremal at vertex " + std::to_string(p));
  }
  return f;
}

FaceIndex bb_face_by_definition(const Flow& flow, VertexIndex p, Sign sign) {
  const Polytope& poly = flow.polytope();
  std::vector<FaceIndex> candidates;
  for (FaceIndex i = 0; i < poly.faces().size(); ++i) {
    const Face& f = poly.face(i);
    if (!f.contains(p)) continue;
    Extrema ex = face_extrema(flow, f);
    if ((sign == Sign::Plus ? ex.up : ex.down) == p) candidates.push_back(i);
  }
  // The extremal faces at p are exactly the faces of the maximal one.
  FaceIndex best = candidates.front();
  for (FaceIndex i : candidates) {
    if (poly.face(i).vertices.size() > poly.face(best).vertices.size()) best = i;
  }
  for (FaceIndex i : candidates) {
    if (!is_subset(poly.face(i).vertices, poly.face(best).vertices)) {
      throw InternalConsistencyError("bb_face_by_definition: no unique maximal face at vertex " + std::to_string(p));
    }
  }
  return best;
}

std::vector<CellDims> bb_dims(const Flow& flow) {
  const Polytope& poly = flow.polytope();
  std::vector<CellDims> dims(poly.num_vertices());
  for (VertexIndex p = 0; p < poly.num_vertices(); ++p) {
    for (VertexIndex q : poly.neighbors(p)) {
      if (flow.value(q) < flow.value(p)) {
        ++dims[p].pos;
      } else {
        ++dims[p].neg;
      }
    }
    if (poly.face(bb_face(flow, p, Sign::Plus)).dim != dims[p].pos ||
        poly.face(bb_face(flow, p, Sign::Minus)).dim != dims[p].neg) {
      throw InternalConsistencyError("bb_dims: incoming edge count differs from BB face dimension at vertex " +
                                     std::to_string(p) + " (polytope not simple?)");
    }
  }
  return dims;
}

BBDecomposition decompose(const Flow& flow) {
  const Polytope& poly = flow.polytope();
  BBDecomposition out;
  out.dims = bb_dims(flow);
  for (VertexIndex p = 0; p < poly.num_vertices(); ++p) {
    out.pos_face.push_back(bb_face(flow, p, Sign::Plus));
    out.neg_face.push_back(bb_face(flow, p, Sign::Minus));
  }
  return out;
}

FlowGraph OrbitGraph::to_flow_graph() const {
  FlowGraph g;
  g.ambient_dim = ambient_dim;
  for (std::size_t i = 0; i < dims.size(); ++i) g.nodes.push_back(FlowNode{std::to_string(i), dims[i].pos, dims[i].neg});
  for (const auto& e : edges) g.edges.emplace_back(e.src, e.dst);
  return g;
}

OrbitGraph orbit_graph(const Flow& flow) {
  const Polytope& poly = flow.polytope();
  OrbitGraph g;
  g.ambient_dim = poly.dim();
  g.dims = bb_dims(flow);
  std::map<std::pair<VertexIndex, VertexIndex>, FaceIndex> seen;
  // Faces are stored by ascending dimension, so the first witness is the smallest.
  for (FaceIndex i = 0; i < poly.faces().size(); ++i) {
    const Face& f = poly.face(i);
    if (f.dim < 1) continue;
    Extrema ex = face_extrema(flow, f);
    if (flow.value(ex.down) >= flow.value(ex.up)) {
      throw InternalConsistencyError("orbit_graph: flow edge does not increase the value");
    }
    seen.emplace(std::make_pair(ex.down, ex.up), i);
  }
  for (const auto& [key, witness] : seen) g.edges.push_back(FlowEdge{key.first, key.second, witness});
  return g;
}

std::vector<VertexIndex> filtering_order(const Flow& flow) {
  std::vector<VertexIndex> order(flow.polytope().num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexIndex a, VertexIndex b) { return flow.value(a) < flow.value(b); });
  std::vector<std::size_t> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  for (const auto& e : orbit_graph(flow).edges) {
    if (position[e.src] >= position[e.dst]) {
      throw InternalConsistencyError("filtering_order: not a linear extension of the orbit graph");
    }
  }
  return order;
}

}  // namespace toricbb
