#pragma once

#include "toricbb/lattice.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace toricbb {

using VertexIndex = std::size_t;
/// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<VertexIndex>;
using FaceIndex = std::size_t;

struct Face {
  VertexSet vertices;
  int dim = 0;

  bool contains(VertexIndex v) const;
  friend bool operator==(const Face&, const Face&) = default;
};

/// Facet inequality <x, normal> <= offset with a primitive outer normal.
struct Facet {
  IntVector normal;
  Integer offset;
  VertexSet vertices;
};

enum class TwoFaceShape { Triangle, Parallelogram, OtherQuadrilateral, CentrallySymmetricPolygon, Other };

const char* to_string(TwoFaceShape shape);

bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);

/// A full-dimensional lattice polytope with its complete face lattice.
///
/// Immutable after build(). Vertex identity is positional: every Face refers
/// to vertices by index, never by coordinates. Faces are stored sorted by
/// dimension, then lexicographically by vertex indices; the last face is the
/// polytope itself.
class Polytope {
 public:
  /// Hull of the given points. Throws InputError when the points do not span
  /// a full-dimensional polytope, when any point is repeated, or when a point
  /// is not a vertex of the hull.
  static Polytope build(std::vector<IntVector> vertices);

  int dim() const noexcept { return dim_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  const IntVector& vertex(VertexIndex i) const { return vertices_.at(i); }

  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(FaceIndex i) const { return faces_.at(i); }
  FaceIndex whole_index() const noexcept { return faces_.size() - 1; }

  /// Indices of faces of dimension d, in storage order.
  std::vector<FaceIndex> faces_of_dim(int d) const;
  /// f_0, ..., f_dim.
  std::vector<std::size_t> face_counts() const;

  std::optional<FaceIndex> find_face(const VertexSet& vertices) const;
  /// Smallest face containing all of the given vertices.
  FaceIndex face_spanned_by(const VertexSet& vertices) const;
  /// Indices of the facets containing every vertex of the set.
  std::vector<std::size_t> facets_containing(const VertexSet& vertices) const;

  const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return neighbors_.at(v); }
  bool adjacent(VertexIndex a, VertexIndex b) const;
  /// Edges as (lower index, higher index) pairs, each with its face index.
  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges() const noexcept { return edges_; }

  /// Vertices of a 2-face in cyclic boundary order, starting at the smallest index.
  std::vector<VertexIndex> cyclic_order(const Face& two_face) const;

 private:
  Polytope() = default;

  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::map<VertexSet, FaceIndex> face_lookup_;
  std::vector<std::vector<VertexIndex>> neighbors_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
};

bool is_simple(const Polytope& p);
/// Simple, with the primitive edge directions at every vertex forming a
/// basis of the lattice.
bool is_smooth(const Polytope& p);

/// Primitive directions of the edges leaving v, ordered like neighbors(v).
std::vector<PrimitiveDirection> edge_directions(const Polytope& p, VertexIndex v);
/// Lattice length of the edge a-b (content of b - a).
Integer lattice_length(const Polytope& p, VertexIndex a, VertexIndex b);

/// Shape of a 2-face. Throws InputError if the face is not 2-dimensional.
TwoFaceShape classify_two_face(const Polytope& p, const Face& f);

/// A face presented as a full-dimensional polytope in its own lattice.
struct Restriction {
  Polytope polytope;
  /// Vertex i of `polytope` is vertex to_parent[i] of the parent.
  std::vector<VertexIndex> to_parent;
  AffineFrame frame;

  /// Parent vertex set of a face of the restriction.
  VertexSet lift(const VertexSet& local) const;
  /// Cocharacter on the face lattice inducing the same vertex order.
  IntVector induced_cocharacter(const IntVector& v) const { return frame.restrict_covector(v); }
};

/// Restriction to a face of dimension >= 1, expressed in the saturated
/// lattice of its affine span. Restricting to the polytope itself returns
/// the identity frame. Throws InputError for a vertex.
Restriction restrict_to_face(const Polytope& p, const Face& q);

}  // namespace toricbb
