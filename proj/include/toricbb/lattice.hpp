#pragma once

// Exact integer linear algebra for lattice polytopes.
//
// Everything here is arbitrary precision. Floating point never enters the
// library: every criterion downstream is a sign or equality test.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace toricbb {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;
/// Row-major dense matrix; every row has the same length.
using IntMatrix = std::vector<IntVector>;

IntVector make_vector(std::initializer_list<long long> coords);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& a, const Integer& k);
IntVector negated(const IntVector& a);
bool is_zero(const IntVector& a);

/// Standard inner product <chi, v>. Throws InputError on dimension mismatch.
Integer pairing(const IntVector& chi, const IntVector& v);

/// gcd of all entries (non-negative; zero for the zero vector).
Integer content(const IntVector& a);

/// A nonzero integer vector whose entries have gcd 1.
class PrimitiveDirection {
 public:
  const IntVector& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }

  friend bool operator==(const PrimitiveDirection&, const PrimitiveDirection&) = default;

 private:
  explicit PrimitiveDirection(IntVector coords) : coords_(std::move(coords)) {}
  IntVector coords_;

  friend PrimitiveDirection primitive(const IntVector& d);
};

/// d divided by the gcd of its entries, orientation preserved.
/// Throws InputError for the zero vector.
PrimitiveDirection primitive(const IntVector& d);

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws InputError if the matrix is not square.
Integer det(const IntMatrix& m);

/// Rank over Q of the row set.
std::size_t rank(const IntMatrix& rows);

/// Affine rank of a point set: rank of the differences to the first point.
/// The empty set has affine rank -1 by convention.
int affine_rank(const std::vector<IntVector>& points);

/// Row-style Hermite normal form of the lattice spanned by `rows`.
/// Returns a basis in echelon form: pivots strictly increase to the right,
/// pivot entries are positive, entries above a pivot are reduced modulo it.
IntMatrix hermite_basis(const IntMatrix& rows, std::size_t ncols);

/// Lattice basis of {y in Z^ncols : <row, y> = 0 for every row}.
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t ncols);

/// Coordinates a with x = sum_k a_k * basis[k] for an echelon basis as
/// returned by hermite_basis. Throws InputError if x is not in the lattice.
IntVector solve_in_echelon_basis(const IntMatrix& basis, const IntVector& x);

/// Inverse of a unimodular matrix (det = +-1). Throws InputError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m, std::size_t ncols);
IntVector mat_vec(const IntMatrix& m, const IntVector& x);

/// An affine lattice frame origin + span_Z(basis) inside Z^n.
struct AffineFrame {
  IntVector origin;
  IntMatrix basis;  // echelon form, rank() rows of length ambient_dim()

  std::size_t rank() const noexcept { return basis.size(); }
  std::size_t ambient_dim() const noexcept { return origin.size(); }

  /// Frame coordinates of a point of the affine lattice.
  IntVector coordinates_of(const IntVector& point) const;
  /// Inverse of coordinates_of.
  IntVector embed(const IntVector& coords) const;
  /// The covector on frame coordinates induced by an ambient covector v:
  /// <embed(c), v> = <origin, v> + <c, restrict_covector(v)>.
  IntVector restrict_covector(const IntVector& v) const;
};

/// Frame for the affine lattice generated by `points`: the origin is the
/// first point and the basis spans the lattice generated by the differences.
/// Throws InputError for an empty input.
AffineFrame affine_sublattice_parametrization(const std::vector<IntVector>& points);

/// Like affine_sublattice_parametrization, but the basis spans all of
/// Z^n intersected with the linear span of the differences (the saturation).
/// This is the lattice of a face of a lattice polytope.
AffineFrame saturated_affine_frame(const std::vector<IntVector>& points);

std::string to_string(const IntVector& v);

}  // namespace toricbb
