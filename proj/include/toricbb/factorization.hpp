#pragma once

// Recognition of products of simplices.
//
// At a vertex o of a simple polytope whose 2-faces are triangles and
// parallelograms, "the two edges span a triangle" is an equivalence relation
// on the edges at o. Each class spans a simplex J, the remaining edges span a
// face C, and the polytope is the Minkowski sum C + J. Iterating on C splits
// the polytope into simplex factors; for a smooth polytope the edge
// directions at o give a unimodular frame in which it is a coordinate product.

#include "toricbb/polytope.hpp"

#include <optional>
#include <vector>

namespace toricbb {

struct EdgeClasses {
  VertexIndex vertex = 0;
  /// Each edge is named by its other endpoint. Classes are sorted, and
  /// ordered by their smallest member.
  std::vector<std::vector<VertexIndex>> classes;
};

/// Throws InputError unless the polytope is simple and every 2-face at the
/// vertex is a triangle or a parallelogram.
EdgeClasses edge_classes(const Polytope& p, VertexIndex vertex);

enum class FactorizationStatus { UnimodularProduct, AffineProductOnly, CombinatorialOnly, NotProduct };
const char* to_string(FactorizationStatus s);

struct SimplexFactor {
  /// The factor as a face of the polytope through the origin vertex.
  VertexSet face;
  int dim = 0;
  /// Vertices of the factor in its own coordinate block; filled in by
  /// unimodular_normalize.
  std::vector<IntVector> coords;
};

/// x -> matrix * x + translation.
struct UnimodularFrame {
  IntMatrix matrix;
  IntVector translation;

  IntVector apply(const IntVector& x) const;
};

struct SimplexFactorization {
  FactorizationStatus status = FactorizationStatus::NotProduct;
  VertexIndex origin = 0;
  std::vector<SimplexFactor> factors;
  std::optional<UnimodularFrame> frame;

  /// Factor dimensions sorted in decreasing order.
  std::vector<int> factor_dims() const;
};

/// Splits a simple polytope into simplex factors at the given origin vertex.
/// Only triangles and parallelograms as 2-faces: AffineProductOnly with
/// factor faces. Triangles and quadrilaterals: CombinatorialOnly with factor
/// dimensions from the edge classes. Anything else: NotProduct.
SimplexFactorization affine_factorize(const Polytope& p, VertexIndex origin = 0);

/// Upgrades an affine factorization of a smooth polytope to a unimodular
/// one, recording the frame that sends the edges at the origin to the
/// standard basis. Throws InputError on a non-smooth polytope or a
/// factorization that is not affine.
SimplexFactorization unimodular_normalize(const Polytope& p, const SimplexFactorization& f);

}  // namespace toricbb
