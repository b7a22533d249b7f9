#pragma once

#include "toricbb/polytope.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricbb {

/// Convex hull of the origin and the standard basis of Z^d.
Polytope simplex(int d);
/// Unit cube [0,1]^d.
Polytope cube(int d);
/// Vertex (i, j) of the product is vertex i * Q.num_vertices() + j.
Polytope product(const Polytope& p, const Polytope& q);
Polytope dilate(const Polytope& p, int k);

struct Blowup {
  Polytope polytope;
  /// Dilation applied before truncating (1 when none was needed).
  int dilation = 1;
};

/// Truncates a smooth polytope at vertex `v` through the lattice points at
/// lattice distance one along each incident edge. Dilates first by the least
/// factor making every incident edge at least two lattice steps long. The new
/// corner vertices replace `v` in the vertex list, in neighbor order.
Blowup blowup_at_vertex(const Polytope& p, VertexIndex v);

/// Simultaneous unit truncation of every vertex after one global dilation.
/// Vertex i * dim + k of the result lies on the k-th edge out of input vertex i.
Blowup pop(const Polytope& p);

/// The permutahedron of order n, projected onto its own affine lattice.
struct Permutahedron {
  Polytope polytope;
  /// Lattice frame of the hyperplane containing the orbit of (0, 1, ..., n).
  AffineFrame frame;
  /// One-line notation of the permutation labelling each vertex; the vertex
  /// of sigma is (sigma^-1(0), ..., sigma^-1(n)) in ambient coordinates.
  std::vector<std::vector<int>> words;

  /// Vertex index of a permutation given in one-line notation.
  VertexIndex vertex_of(const std::vector<int>& word) const;
  /// Face of an ordered set partition E_0 | E_1 | ... : permutations whose
  /// one-line word lists every element of E_i before every element of E_i+1.
  VertexSet face_of_ordered_partition(const std::vector<std::vector<int>>& blocks) const;
};

Permutahedron permutahedron_labeled(int n);
Polytope permutahedron(int n);

enum class FixtureId { Prism714, PrismTall, TwiceBlownP3, PopSimplex3, Pentagon2D };

/// Literal vertex lists used throughout the tests. Prism714 and PrismTall
/// list their vertices in the order G, H, I, J, K, L.
std::vector<IntVector> fixture_vertices(FixtureId id);
Polytope fixture(FixtureId id);
const std::vector<FixtureId>& all_fixtures();
std::string_view fixture_name(FixtureId id);
std::optional<FixtureId> fixture_from_name(std::string_view name);

}  // namespace toricbb
