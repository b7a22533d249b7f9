#include "toricbb/factorization.hpp"

#include "toricbb/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace toricbb {

const char* to_string(FactorizationStatus s) {
  switch (s) {
    case FactorizationStatus::UnimodularProduct: return "UnimodularProduct";
    case FactorizationStatus::AffineProductOnly: return "AffineProductOnly";
    case FactorizationStatus::CombinatorialOnly: return "CombinatorialOnly";
    case FactorizationStatus::NotProduct: return "NotProduct";
  }
  return "NotProduct";
}

IntVector UnimodularFrame::apply(const IntVector& x) const { return add(mat_vec(matrix, x), translation); }

std::vector<int> SimplexFactorization::factor_dims() const {
  std::vector<int> dims;
  for (const auto& f : factors) dims.push_back(f.dim);
  std::sort(dims.rbegin(), dims.rend());
  return dims;
}

namespace {

VertexSet sorted_set(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool spans_triangle(const Polytope& p, VertexIndex o, VertexIndex a, VertexIndex b) {
  const Face& f = p.face(p.face_spanned_by(sorted_set({o, a, b})));
  return f.dim == 2 && f.vertices.size() == 3;
}

// Classes of "spans a triangle" among the edges at o that lie in `within`.
// Verifies the relation is an equivalence and that chained triangle pairs
// span a tetrahedron, as they must when 3-faces are simplices, prisms or
// parallelepipeds.
std::vector<std::vector<VertexIndex>> triangle_classes(const Polytope& p, VertexIndex o, const VertexSet& within) {
  std::vector<VertexIndex> edges;
  for (VertexIndex w : p.neighbors(o)) {
    if (std::binary_search(within.begin(), within.end(), w)) edges.push_back(w);
  }
  const std::size_t k = edges.size();
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    rel[i][i] = true;
    for (std::size_t j = i + 1; j < k; ++j) rel[i][j] = rel[j][i] = spans_triangle(p, o, edges[i], edges[j]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (i == j || j == l || i == l || !rel[i][j] || !rel[j][l]) continue;
        if (!rel[i][l]) {
          throw InternalConsistencyError("edge relation at vertex " + std::to_string(o) + " is not transitive");
        }
        const Face& three = p.face(p.face_spanned_by(sorted_set({o, edges[i], edges[j], edges[l]})));
        if (three.dim != 3 || three.vertices.size() != 4) {
          throw InternalConsistencyError("3-face with two adjacent triangles is not a simplex at vertex " +
                                         std::to_string(o));
        }
      }
    }
  }
  std::vector<std::vector<VertexIndex>> classes;
  std::vector<bool> done(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (done[i]) continue;
    std::vector<VertexIndex> cls;
    for (std::size_t j = i; j < k; ++j) {
      if (rel[i][j]) {
        cls.push_back(edges[j]);
        done[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

VertexSet all_vertices(const Polytope& p) {
  VertexSet s(p.num_vertices());
  for (VertexIndex i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

std::vector<std::pair<VertexIndex, VertexIndex>> edges_within(const Polytope& p, const VertexSet& face) {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (auto e : p.edges()) {
    if (std::binary_search(face.begin(), face.end(), e.first) && std::binary_search(face.begin(), face.end(), e.second)) {
      out.push_back(e);
    }
  }
  return out;
}

class Transporter {
 public:
  explicit Transporter(const Polytope& p) : p_(p) {
    for (VertexIndex i = 0; i < p.num_vertices(); ++i) index_.emplace(p.vertex(i), i);
  }

  // Is the translate of edge (a, b) by `shift` an edge of the polytope?
  bool edge_survives(std::pair<VertexIndex, VertexIndex> e, const IntVector& shift) const {
    auto a = index_.find(add(p_.vertex(e.first), shift));
    auto b = index_.find(add(p_.vertex(e.second), shift));
    return a != index_.end() && b != index_.end() && p_.adjacent(a->second, b->second);
  }

 private:
  const Polytope& p_;
  std::map<IntVector, VertexIndex> index_;
};

}  // namespace

EdgeClasses edge_classes(const Polytope& p, VertexIndex vertex) {
  if (vertex >= p.num_vertices()) throw InputError("edge_classes: vertex index out of range");
  if (!is_simple(p)) throw InputError("edge_classes: polytope is not simple");
  for (FaceIndex i : p.faces_of_dim(2)) {
    const Face& f = p.face(i);
    if (!f.contains(vertex)) continue;
    TwoFaceShape s = classify_two_face(p, f);
    if (s != TwoFaceShape::Triangle && s != TwoFaceShape::Parallelogram) {
      throw InputError(std::string("edge_classes: 2-face at vertex is a ") + to_string(s) +
                       ", not a triangle or parallelogram");
    }
  }
  return EdgeClasses{vertex, triangle_classes(p, vertex, all_vertices(p))};
}

SimplexFactorization affine_factorize(const Polytope& p, VertexIndex origin) {
  if (origin >= p.num_vertices()) throw InputError("affine_factorize: origin index out of range");
  SimplexFactorization result;
  result.origin = origin;
  if (!is_simple(p)) return result;

  bool has_other_quad = false;
  for (FaceIndex i : p.faces_of_dim(2)) {
    switch (classify_two_face(p, p.face(i))) {
      case TwoFaceShape::Triangle:
      case TwoFaceShape::Parallelogram: break;
      case TwoFaceShape::OtherQuadrilateral: has_other_quad = true; break;
      default: return result;
    }
  }

  auto factor_from_class = [&](const std::vector<VertexIndex>& cls) {
    VertexSet span = cls;
    span.push_back(origin);
    const Face& f = p.face(p.face_spanned_by(sorted_set(span)));
    return SimplexFactor{f.vertices, f.dim, {}};
  };

  if (has_other_quad) {
    result.status = FactorizationStatus::CombinatorialOnly;
    for (const auto& cls : triangle_classes(p, origin, all_vertices(p))) result.factors.push_back(factor_from_class(cls));
    return result;
  }

  Transporter transport(p);
  VertexSet current = all_vertices(p);
  for (;;) {
    auto classes = triangle_classes(p, origin, current);
    if (classes.size() <= 1) {
      const Face& last = p.face(*p.find_face(current));
      if (last.vertices.size() != static_cast<std::size_t>(last.dim) + 1) {
        throw InternalConsistencyError("affine_factorize: single edge class but the face is not a simplex");
      }
      result.factors.push_back(SimplexFactor{last.vertices, last.dim, {}});
      break;
    }
    SimplexFactor simplex = factor_from_class(classes.front());
    std::vector<VertexIndex> rest;
    for (std::size_t c = 1; c < classes.size(); ++c) rest.insert(rest.end(), classes[c].begin(), classes[c].end());
    rest.push_back(origin);
    const VertexSet remainder = p.face(p.face_spanned_by(sorted_set(rest))).vertices;

    if (remainder.size() * simplex.face.size() != current.size()) {
      throw InternalConsistencyError("affine_factorize: vertex count of the face is not the product of its parts");
    }
    // Edges of the simplex transported to every vertex of the remainder.
    for (VertexIndex w : remainder) {
      IntVector shift = sub(p.vertex(w), p.vertex(origin));
      for (auto e : edges_within(p, simplex.face)) {
        if (!transport.edge_survives(e, shift)) {
          throw InternalConsistencyError("affine_factorize: simplex edge does not transport to vertex " +
                                         std::to_string(w));
        }
      }
    }
    // Edges of the remainder transported to every vertex of the simplex.
    for (VertexIndex v : simplex.face) {
      if (v == origin) continue;
      IntVector shift = sub(p.vertex(v), p.vertex(origin));
      for (auto e : edges_within(p, remainder)) {
        if (!transport.edge_survives(e, shift)) {
          throw InternalConsistencyError("affine_factorize: remainder edge does not transport to vertex " +
                                         std::to_string(v));
        }
      }
    }
    result.factors.push_back(std::move(simplex));
    current = remainder;
  }
  result.status = FactorizationStatus::AffineProductOnly;
  return result;
}

SimplexFactorization unimodular_normalize(const Polytope& p, const SimplexFactorization& f) {
  if (f.status != FactorizationStatus::AffineProductOnly && f.status != FactorizationStatus::UnimodularProduct) {
    throw InputError(std::string("unimodular_normalize: factorization status is ") + to_string(f.status));
  }
  if (!is_smooth(p)) throw InputError("unimodular_normalize: polytope is not smooth");
  const VertexIndex o = f.origin;
  const auto n = static_cast<std::size_t>(p.dim());

  // Edge directions at o, grouped factor by factor.
  IntMatrix directions;
  std::vector<std::size_t> block_start;
  for (const auto& factor : f.factors) {
    block_start.push_back(directions.size());
    for (VertexIndex w : p.neighbors(o)) {
      if (std::binary_search(factor.face.begin(), factor.face.end(), w)) {
        directions.push_back(primitive(sub(p.vertex(w), p.vertex(o))).coords());
      }
    }
  }
  if (directions.size() != n) throw InternalConsistencyError("unimodular_normalize: factors do not cover the edges at the origin");

  UnimodularFrame frame;
  frame.matrix = unimodular_inverse(transpose(directions, n));
  frame.translation = negated(mat_vec(frame.matrix, p.vertex(o)));

  SimplexFactorization out = f;
  out.status = FactorizationStatus::UnimodularProduct;
  for (std::size_t k = 0; k < out.factors.size(); ++k) {
    auto& factor = out.factors[k];
    const std::size_t lo = block_start[k];
    const std::size_t hi = lo + static_cast<std::size_t>(factor.dim);
    factor.coords.clear();
    for (VertexIndex v : factor.face) {
      IntVector x = frame.apply(p.vertex(v));
      for (std::size_t j = 0; j < n; ++j) {
        if ((j < lo || j >= hi) && x[j] != 0) {
          throw InternalConsistencyError("unimodular_normalize: factor leaves its coordinate block");
        }
      }
      factor.coords.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(lo), x.begin() + static_cast<std::ptrdiff_t>(hi));
    }
  }

  // The transformed vertex set must be the coordinate product of the factors.
  std::vector<IntVector> prod{IntVector{}};
  for (const auto& factor : out.factors) {
    std::vector<IntVector> next;
    for (const auto& head : prod) {
      for (const auto& tail : factor.coords) {
        IntVector x = head;
        x.insert(x.end(), tail.begin(), tail.end());
        next.push_back(std::move(x));
      }
    }
    prod = std::move(next);
  }
  std::set<IntVector> expected(prod.begin(), prod.end());
  std::set<IntVector> actual;
  for (const auto& x : p.vertices()) actual.insert(frame.apply(x));
  if (expected != actual) {
    throw InternalConsistencyError("unimodular_normalize: transformed polytope is not the product of its factors");
  }
  out.frame = std::move(frame);
  return out;
}

}  // namespace toricbb
