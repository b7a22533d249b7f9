#include "toricbb/lattice.hpp"

#include "toricbb/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toricbb {

namespace {

void require_same_dim(const IntVector& a, const IntVector& b, const char* what) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a.size() << " vs " << b.size() << ")";
    throw InputError(msg.str());
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy_row(IntVector& dst, const Integer& q, const IntVector& src) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

// Brings the first `ncols` columns of m into Hermite echelon form using only
// unimodular row operations (swaps, negations, integer row additions). Extra
// columns beyond ncols are carried along, which is how transforms are tracked.
// Returns the rank; rows at index >= rank are zero in the first ncols columns.
std::size_t echelonize(IntMatrix& m, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    bool found = false;
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (best == m.size() || abs(m[i][col]) < abs(m[best][col])) best = i;
      }
      if (best == m.size()) break;
      found = true;
      std::swap(m[r], m[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Integer q = m[i][col] / m[r][col];
        axpy_row(m[i], q, m[r]);
        if (m[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (m[r][col] < 0) {
      for (auto& x : m[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(m[i][col], m[r][col]);
      if (q != 0) axpy_row(m[i], q, m[r]);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntVector make_vector(std::initializer_list<long long> coords) {
  IntVector v;
  v.reserve(coords.size());
  for (long long c : coords) v.emplace_back(c);
  return v;
}

IntVector add(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b, "add");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b, "sub");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector scaled(const IntVector& a, const Integer& k) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

IntVector negated(const IntVector& a) { return scaled(a, Integer(-1)); }

bool is_zero(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

Integer pairing(const IntVector& chi, const IntVector& v) {
  require_same_dim(chi, v, "pairing");
  Integer s = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * v[i];
  return s;
}

Integer content(const IntVector& a) {
  Integer g = 0;
  for (const auto& x : a) g = gcd(g, abs(x));
  return g;
}

PrimitiveDirection primitive(const IntVector& d) {
  Integer g = content(d);
  if (g == 0) throw InputError("primitive: zero vector has no direction");
  IntVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] / g;
  return PrimitiveDirection(std::move(out));
}

Integer det(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("det: matrix is not square");
  }
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  IntMatrix m = rows;
  return echelonize(m, m.front().size());
}

int affine_rank(const std::vector<IntVector>& points) {
  if (points.empty()) return -1;
  IntMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(rank(diffs));
}

IntMatrix hermite_basis(const IntMatrix& rows, std::size_t ncols) {
  IntMatrix m = rows;
  for (const auto& row : m) {
    if (row.size() != ncols) throw InputError("hermite_basis: ragged matrix");
  }
  std::size_t r = echelonize(m, ncols);
  m.resize(r);
  return m;
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t ncols) {
  const std::size_t m = rows.size();
  // Rows of [A^T | I]; reducing the A^T block records a unimodular U with
  // U A^T = H, and the rows of U opposite zero rows of H span the kernel.
  IntMatrix aug(ncols, IntVector(m + ncols));
  for (std::size_t i = 0; i < ncols; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (rows[j].size() != ncols) throw InputError("integer_kernel: ragged matrix");
      aug[i][j] = rows[j][i];
    }
    aug[i][m + i] = 1;
  }
  std::size_t r = echelonize(aug, m);
  IntMatrix kernel;
  for (std::size_t i = r; i < ncols; ++i) {
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(m), aug[i].end());
  }
  return hermite_basis(kernel, ncols);
}

IntVector solve_in_echelon_basis(const IntMatrix& basis, const IntVector& x) {
  IntVector rest = x;
  IntVector coeffs(basis.size());
  std::size_t col = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    require_same_dim(basis[k], x, "solve_in_echelon_basis");
    while (col < rest.size() && basis[k][col] == 0) ++col;
    if (col == rest.size()) throw InputError("solve_in_echelon_basis: basis is not in echelon form");
    if (rest[col] % basis[k][col] != 0) {
      throw InputError("solve_in_echelon_basis: point " + to_string(x) + " is not in the lattice");
    }
    coeffs[k] = rest[col] / basis[k][col];
    axpy_row(rest, coeffs[k], basis[k]);
  }
  if (!is_zero(rest)) {
    throw InputError("solve_in_echelon_basis: point " + to_string(x) + " is not in the lattice");
  }
  return coeffs;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix aug(n, IntVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("unimodular_inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::size_t r = echelonize(aug, n);
  // The Hermite form of a unimodular matrix is the identity.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r != n || aug[i][j] != (i == j ? 1 : 0)) {
        throw InputError("unimodular_inverse: matrix is not unimodular");
      }
    }
  }
  IntMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  }
  return inv;
}

IntMatrix transpose(const IntMatrix& m, std::size_t ncols) {
  IntMatrix t(ncols, IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& x) {
  IntVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = pairing(m[i], x);
  return out;
}

IntVector AffineFrame::coordinates_of(const IntVector& point) const {
  return solve_in_echelon_basis(basis, sub(point, origin));
}

IntVector AffineFrame::embed(const IntVector& coords) const {
  if (coords.size() != basis.size()) throw InputError("AffineFrame::embed: wrong coordinate count");
  IntVector out = origin;
  for (std::size_t k = 0; k < basis.size(); ++k) out = add(out, scaled(basis[k], coords[k]));
  return out;
}

IntVector AffineFrame::restrict_covector(const IntVector& v) const {
  IntVector out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out[k] = pairing(basis[k], v);
  return out;
}

namespace {

IntMatrix differences(const std::vector<IntVector>& points) {
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return diffs;
}

}  // namespace

AffineFrame affine_sublattice_parametrization(const std::vector<IntVector>& points) {
  if (points.empty()) throw InputError("affine_sublattice_parametrization: empty input");
  const std::size_t n = points.front().size();
  AffineFrame frame{points.front(), hermite_basis(differences(points), n)};
  return frame;
}

AffineFrame saturated_affine_frame(const std::vector<IntVector>& points) {
  if (points.empty()) throw InputError("saturated_affine_frame: empty input");
  const std::size_t n = points.front().size();
  IntMatrix normals = integer_kernel(differences(points), n);
  return AffineFrame{points.front(), integer_kernel(normals, n)};
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

}  // namespace toricbb
