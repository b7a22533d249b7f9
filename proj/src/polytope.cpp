#include "toricbb/polytope.hpp"

#include "toricbb/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace toricbb {

bool Face::contains(VertexIndex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

const char* to_string(TwoFaceShape shape) {
  switch (shape) {
    case TwoFaceShape::Triangle: return "Triangle";
    case TwoFaceShape::Parallelogram: return "Parallelogram";
    case TwoFaceShape::OtherQuadrilateral: return "OtherQuadrilateral";
    case TwoFaceShape::CentrallySymmetricPolygon: return "CentrallySymmetricPolygon";
    case TwoFaceShape::Other: return "Other";
  }
  return "Other";
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

// Normal to the hyperplane through n affinely independent points in Z^n, via
// signed maximal minors of the difference matrix. Zero when dependent.
IntVector spanning_normal(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx) {
  const std::size_t n = pts.front().size();
  IntMatrix diffs;
  diffs.reserve(n - 1);
  for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(sub(pts[idx[k]], pts[idx[0]]));
  IntVector normal(n);
  IntMatrix minor(n - 1, IntVector(n - 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r + 1 < n; ++r) {
      std::size_t c = 0;
      for (std::size_t col = 0; col < n; ++col) {
        if (col != j) minor[r][c++] = diffs[r][col];
      }
    }
    Integer d = det(minor);
    normal[j] = (j % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

std::vector<std::size_t> tight_points(const std::vector<IntVector>& pts, const IntVector& normal, const Integer& offset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pairing(pts[i], normal) == offset) out.push_back(i);
  }
  return out;
}

std::vector<IntVector> gather(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(pts[i]);
  return out;
}

// Some facet of the hull: start from the hyperplane maximizing the first
// coordinate and tilt it about its contact set until that set spans n-1
// dimensions. Every normal satisfies <x, normal> <= offset on all points.
Facet initial_facet(const std::vector<IntVector>& pts) {
  const std::size_t n = pts.front().size();
  IntVector normal(n, Integer(0));
  normal[0] = 1;
  Integer offset = pts.front()[0];
  for (const auto& x : pts) offset = std::max(offset, x[0]);
  std::vector<std::size_t> contact = tight_points(pts, normal, offset);
  while (affine_rank(gather(pts, contact)) < static_cast<int>(n) - 1) {
    const IntVector& s0 = pts[contact.front()];
    IntMatrix rows;
    for (std::size_t i : contact) rows.push_back(sub(pts[i], s0));
    rows.push_back(normal);
    IntVector u = integer_kernel(rows, n).front();
    bool bounded = false;
    for (const auto& x : pts) bounded |= pairing(sub(x, s0), u) > 0;
    if (!bounded) u = negated(u);
    // Largest t with offset - <x, normal> - t <x - s0, u> >= 0 for every point.
    Integer num = -1, den = 1;
    for (const auto& x : pts) {
      Integer w = pairing(sub(x, s0), u);
      if (w <= 0) continue;
      Integer slack = offset - pairing(x, normal);
      if (num < 0 || slack * den < num * w) {
        num = slack;
        den = w;
      }
    }
    IntVector tilted(n);
    for (std::size_t j = 0; j < n; ++j) tilted[j] = den * normal[j] + num * u[j];
    normal = primitive(tilted).coords();
    offset = pairing(s0, normal);
    contact = tight_points(pts, normal, offset);
  }
  return Facet{normal, offset, contact};
}

// The facet other than `from` containing the ridge with point indices `ridge`.
Facet pivot(const std::vector<IntVector>& pts, const Facet& from, const std::vector<std::size_t>& ridge) {
  const std::size_t n = pts.front().size();
  std::vector<std::size_t> basis;
  std::vector<IntVector> chosen;
  for (std::size_t i : ridge) {
    chosen.push_back(pts[i]);
    if (affine_rank(chosen) + 1 == static_cast<int>(chosen.size())) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
    if (basis.size() + 1 == n) break;
  }
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (std::binary_search(from.vertices.begin(), from.vertices.end(), p)) continue;
    std::vector<std::size_t> idx = basis;
    idx.push_back(p);
    IntVector normal = spanning_normal(pts, idx);
    if (is_zero(normal)) continue;
    normal = primitive(normal).coords();
    Integer offset = pairing(pts[p], normal);
    bool above = false, below = false;
    for (std::size_t i = 0; i < pts.size() && !(above && below); ++i) {
      Integer s = pairing(pts[i], normal) - offset;
      above |= s > 0;
      below |= s < 0;
    }
    if (above && below) continue;
    if (above) {
      normal = negated(normal);
      offset = -offset;
    }
    return Facet{normal, offset, tight_points(pts, normal, offset)};
  }
  throw InternalConsistencyError("facet enumeration: ridge without a second facet");
}

// Gift wrapping: ridges of each facet come from the hull of that facet taken
// in its own lattice frame, and each ridge leads to one neighboring facet.
std::vector<Facet> enumerate_facets(const std::vector<IntVector>& pts) {
  const std::size_t n = pts.front().size();
  std::vector<Facet> facets;
  if (n == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    facets.push_back(Facet{IntVector{Integer(-1)}, -(*lo)[0], tight_points(pts, IntVector{Integer(1)}, (*lo)[0])});
    facets.push_back(Facet{IntVector{Integer(1)}, (*hi)[0], tight_points(pts, IntVector{Integer(1)}, (*hi)[0])});
  } else {
    std::set<VertexSet> seen;
    std::deque<Facet> queue;
    Facet first = initial_facet(pts);
    seen.insert(first.vertices);
    queue.push_back(std::move(first));
    while (!queue.empty()) {
      Facet f = std::move(queue.front());
      queue.pop_front();
      std::vector<IntVector> local = gather(pts, f.vertices);
      AffineFrame frame = affine_sublattice_parametrization(local);
      std::vector<IntVector> coords;
      coords.reserve(local.size());
      for (const auto& x : local) coords.push_back(frame.coordinates_of(x));
      for (const auto& r : enumerate_facets(coords)) {
        std::vector<std::size_t> ridge;
        for (std::size_t i : r.vertices) ridge.push_back(f.vertices[i]);
        Facet g = pivot(pts, f, ridge);
        if (seen.insert(g.vertices).second) queue.push_back(std::move(g));
      }
      facets.push_back(std::move(f));
    }
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return facets;
}

}  // namespace

Polytope Polytope::build(std::vector<IntVector> vertices) {
  if (vertices.empty()) throw InputError("polytope: no vertices");
  const std::size_t n = vertices.front().size();
  if (n == 0) throw InputError("polytope: zero-dimensional ambient space");
  for (const auto& v : vertices) {
    if (v.size() != n) throw InputError("polytope: vertices have inconsistent dimensions");
  }
  {
    std::set<IntVector> unique(vertices.begin(), vertices.end());
    if (unique.size() != vertices.size()) throw InputError("polytope: repeated vertex");
  }
  if (affine_rank(vertices) != static_cast<int>(n)) {
    throw InputError("polytope: points are not full-dimensional");
  }

  Polytope p;
  p.dim_ = static_cast<int>(n);
  p.vertices_ = std::move(vertices);
  p.facets_ = enumerate_facets(p.vertices_);

  const std::size_t count = p.vertices_.size();
  VertexSet all(count);
  std::iota(all.begin(), all.end(), 0);

  // A point is a vertex iff the facets through it meet only in that point.
  for (VertexIndex i = 0; i < count; ++i) {
    VertexSet meet = all;
    bool on_boundary = false;
    for (const auto& f : p.facets_) {
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), i)) {
        meet = intersect(meet, f.vertices);
        on_boundary = true;
      }
    }
    if (!on_boundary || meet.size() != 1) {
      throw InputError("polytope: point " + to_string(p.vertices_[i]) + " is not a vertex of the hull");
    }
  }

  std::set<VertexSet> found;
  std::deque<VertexSet> queue;
  found.insert(all);
  for (const auto& f : p.facets_) {
    if (found.insert(f.vertices).second) queue.push_back(f.vertices);
  }
  while (!queue.empty()) {
    VertexSet current = std::move(queue.front());
    queue.pop_front();
    for (const auto& f : p.facets_) {
      VertexSet meet = intersect(current, f.vertices);
      if (meet.empty() || meet == current) continue;
      if (found.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  p.faces_.reserve(found.size());
  for (const auto& vs : found) {
    std::vector<IntVector> pts;
    pts.reserve(vs.size());
    for (VertexIndex i : vs) pts.push_back(p.vertices_[i]);
    p.faces_.push_back(Face{vs, affine_rank(pts)});
  }
  std::sort(p.faces_.begin(), p.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  for (FaceIndex i = 0; i < p.faces_.size(); ++i) p.face_lookup_.emplace(p.faces_[i].vertices, i);

  p.neighbors_.assign(count, {});
  for (const auto& f : p.faces_) {
    if (f.dim != 1) continue;
    if (f.vertices.size() != 2) throw InternalConsistencyError("polytope: edge with more than two vertices");
    p.edges_.emplace_back(f.vertices[0], f.vertices[1]);
    p.neighbors_[f.vertices[0]].push_back(f.vertices[1]);
    p.neighbors_[f.vertices[1]].push_back(f.vertices[0]);
  }
  for (auto& nb : p.neighbors_) std::sort(nb.begin(), nb.end());
  return p;
}

std::vector<FaceIndex> Polytope::faces_of_dim(int d) const {
  std::vector<FaceIndex> out;
  for (FaceIndex i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == d) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Polytope::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dim_) + 1, 0);
  for (const auto& f : faces_) ++counts[static_cast<std::size_t>(f.dim)];
  return counts;
}

std::optional<FaceIndex> Polytope::find_face(const VertexSet& vertices) const {
  auto it = face_lookup_.find(vertices);
  if (it == face_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Polytope::facets_containing(const VertexSet& vertices) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (is_subset(vertices, facets_[i].vertices)) out.push_back(i);
  }
  return out;
}

FaceIndex Polytope::face_spanned_by(const VertexSet& vertices) const {
  if (vertices.empty()) throw InputError("face_spanned_by: empty vertex set");
  VertexSet meet;
  bool first = true;
  for (std::size_t i : facets_containing(vertices)) {
    meet = first ? facets_[i].vertices : intersect(meet, facets_[i].vertices);
    first = false;
  }
  if (first) return whole_index();
  auto idx = find_face(meet);
  if (!idx) throw InternalConsistencyError("face_spanned_by: facet intersection is not a face");
  return *idx;
}

bool Polytope::adjacent(VertexIndex a, VertexIndex b) const {
  const auto& nb = neighbors_.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<VertexIndex> Polytope::cyclic_order(const Face& two_face) const {
  if (two_face.dim != 2) throw InputError("cyclic_order: face is not 2-dimensional");
  const auto& vs = two_face.vertices;
  std::vector<VertexIndex> order{vs.front()};
  VertexIndex prev = vs.front();
  VertexIndex cur = vs.front();
  for (;;) {
    std::optional<VertexIndex> next;
    for (VertexIndex nb : neighbors_[cur]) {
      if (nb != prev && two_face.contains(nb)) {
        next = nb;
        break;
      }
    }
    if (!next || *next == vs.front()) break;
    prev = cur;
    cur = *next;
    order.push_back(cur);
  }
  if (order.size() != vs.size()) throw InternalConsistencyError("cyclic_order: 2-face boundary is not a cycle");
  return order;
}

bool is_simple(const Polytope& p) {
  for (VertexIndex v = 0; v < p.num_vertices(); ++v) {
    if (p.neighbors(v).size() != static_cast<std::size_t>(p.dim())) return false;
  }
  return true;
}

std::vector<PrimitiveDirection> edge_directions(const Polytope& p, VertexIndex v) {
  std::vector<PrimitiveDirection> out;
  for (VertexIndex w : p.neighbors(v)) out.push_back(primitive(sub(p.vertex(w), p.vertex(v))));
  return out;
}

Integer lattice_length(const Polytope& p, VertexIndex a, VertexIndex b) {
  return content(sub(p.vertex(b), p.vertex(a)));
}

bool is_smooth(const Polytope& p) {
  if (!is_simple(p)) return false;
  for (VertexIndex v = 0; v < p.num_vertices(); ++v) {
    IntMatrix m;
    for (const auto& d : edge_directions(p, v)) m.push_back(d.coords());
    if (abs(det(m)) != 1) return false;
  }
  return true;
}

TwoFaceShape classify_two_face(const Polytope& p, const Face& f) {
  if (f.dim != 2) throw InputError("classify_two_face: face is not 2-dimensional");
  const std::size_t k = f.vertices.size();
  if (k == 3) return TwoFaceShape::Triangle;
  if (k == 4) {
    auto c = p.cyclic_order(f);
    bool par = add(p.vertex(c[0]), p.vertex(c[2])) == add(p.vertex(c[1]), p.vertex(c[3]));
    return par ? TwoFaceShape::Parallelogram : TwoFaceShape::OtherQuadrilateral;
  }
  if (k % 2 != 0) return TwoFaceShape::Other;
  // Invariance under x -> 2c - x with c the vertex centroid, scaled by k.
  IntVector sum(static_cast<std::size_t>(p.dim()));
  std::set<IntVector> scaled_pts;
  for (VertexIndex i : f.vertices) {
    sum = add(sum, p.vertex(i));
    scaled_pts.insert(scaled(p.vertex(i), Integer(k)));
  }
  IntVector twice_sum = scaled(sum, Integer(2));
  for (const auto& x : scaled_pts) {
    if (!scaled_pts.count(sub(twice_sum, x))) return TwoFaceShape::Other;
  }
  return TwoFaceShape::CentrallySymmetricPolygon;
}

VertexSet Restriction::lift(const VertexSet& local) const {
  VertexSet out;
  out.reserve(local.size());
  for (VertexIndex i : local) out.push_back(to_parent.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

Restriction restrict_to_face(const Polytope& p, const Face& q) {
  if (!p.find_face(q.vertices)) throw InputError("restrict_to_face: not a face of the polytope");
  if (q.dim < 1) throw InputError("restrict_to_face: cannot restrict to a vertex");
  const std::size_t n = static_cast<std::size_t>(p.dim());
  if (q.vertices.size() == p.num_vertices()) {
    AffineFrame identity{IntVector(n), {}};
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      identity.basis.push_back(std::move(e));
    }
    return Restriction{p, q.vertices, std::move(identity)};
  }
  std::vector<IntVector> pts;
  for (VertexIndex i : q.vertices) pts.push_back(p.vertex(i));
  AffineFrame frame = saturated_affine_frame(pts);
  std::vector<IntVector> local;
  for (const auto& x : pts) local.push_back(frame.coordinates_of(x));
  return Restriction{Polytope::build(std::move(local)), q.vertices, std::move(frame)};
}

}  // namespace toricbb
