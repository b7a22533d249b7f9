#pragma once

// Stratification and convexity criteria for BB decompositions of smooth
// lattice polytopes, and sweeps over bounded sets of cocharacters.

#include "toricbb/bb_flow.hpp"

#include <array>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace toricbb {

// ---------------------------------------------------------------------------
// Stratification

/// p lies in the BB face of q, but the BB face of p is not inside it.
struct FaceContainmentViolation {
  VertexIndex p;
  VertexIndex q;
};
/// Polytope edge p -> q (value increasing) with posDim(p) >= posDim(q).
struct DimMonotoneViolation {
  VertexIndex p;
  VertexIndex q;
  int pos_p;
  int pos_q;
};
/// Orbit graph edge p -> q with negDim(p) + posDim(q) <= dim P.
struct DimSumViolation {
  VertexIndex p;
  VertexIndex q;
  int neg_p;
  int pos_q;
};

/// How a cocharacter orients a 2-face. Only triangles and quadrilaterals with
/// opposite extrema are stratified.
enum class TwoFaceOrientation { Triangle, QuadrilateralOpposite, QuadrilateralAdjacent, LargePolygon };
const char* to_string(TwoFaceOrientation o);

struct TwoFaceOrientationViolation {
  FaceIndex face;
  TwoFaceOrientation orientation;
};

using StratViolation =
    std::variant<FaceContainmentViolation, DimMonotoneViolation, DimSumViolation, TwoFaceOrientationViolation>;

enum class StratRoute { FaceContainment = 0, DimMonotone = 1, DimSum = 2, TwoFaces = 3 };

struct StratVerdict {
  bool is_stratification = false;
  /// Verdict of each route, indexed by StratRoute.
  std::array<bool, 4> routes{};
  /// Grouped by route, each group in ascending index order.
  std::vector<StratViolation> violations;
};

TwoFaceOrientation two_face_orientation(const Flow& flow, const Face& f);

/// Runs the four routes without comparing them.
StratVerdict evaluate_stratification_routes(const Flow& flow);

/// Runs all four routes and requires them to agree; disagreement raises
/// InternalConsistencyError. Throws InputError if the polytope is not simple.
StratVerdict stratification_check(const Flow& flow);

struct PolytopeClass {
  std::map<TwoFaceShape, std::size_t> census;
  bool existentially_stratified = false;
  bool universally_stratified = false;
  bool zonotope_like = false;
};

PolytopeClass classify_stratification(const Polytope& p);

// ---------------------------------------------------------------------------
// Convexity

struct ConvexityVerdict {
  bool is_convex = true;
  /// First face F (by dimension, then vertex indices) with both extrema in E
  /// but not contained in E.
  std::optional<FaceIndex> witness;
};

ConvexityVerdict gm_convexity(const Flow& flow, const Face& e);

struct CellConvexityViolation {
  VertexIndex vertex;
  FaceIndex cell;
  FaceIndex witness;
};

struct WellRoundedVerdict {
  bool well_rounded = true;
  std::vector<CellConvexityViolation> violations;
};

/// Gm-convexity of every positive BB face.
WellRoundedVerdict well_rounded(const Flow& flow);

struct WellRounded3dVerdict {
  bool well_rounded = true;
  /// Facets failing all three facet conditions, in facet storage order.
  std::vector<FaceIndex> violating_facets;
};

/// Facet test for 3-polytopes: every facet F needs F.up = P.up, or F.up and
/// F.down non-adjacent, or the edge F.up F.down on a facet through P.up.
/// Must agree with well_rounded (InternalConsistencyError otherwise).
/// Throws InputError unless dim P = 3.
WellRounded3dVerdict well_rounded_3d(const Flow& flow);

struct OrbitClosureVerdict {
  bool all_convex = true;
  /// (E, F): E is the first non-convex face, F its witness.
  std::optional<std::pair<FaceIndex, FaceIndex>> witness;
};

OrbitClosureVerdict orbit_closure_convexity_all(const Flow& flow);

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepGoal { WellRounded, NotWellRounded, Stratifies };
const char* to_string(SweepGoal goal);

/// All integer vectors in [-bound, bound]^dim ordered by max norm, then sum
/// of absolute values, then lexicographically.
std::vector<IntVector> sweep_enumeration(int dim, int bound);

struct SweepClass {
  std::vector<std::size_t> order_key;
  /// First member in enumeration order.
  IntVector representative;
  std::size_t members = 0;
  bool satisfies = false;
};

struct SweepReport {
  int bound = 0;
  SweepGoal goal = SweepGoal::WellRounded;
  std::size_t enumerated = 0;
  std::size_t admissible = 0;
  std::size_t satisfying = 0;
  /// In order of first appearance.
  std::vector<SweepClass> classes;
};

/// Evaluates the goal once per induced vertex order. Exhaustive over the
/// behaviors realised inside the bound, not over all cocharacters.
SweepReport cocharacter_sweep(const Polytope& p, int bound, SweepGoal goal);

struct StratifyingWitness {
  std::optional<Cocharacter> witness;
  int bound = 0;
  /// Absence is proven: some 2-face is neither a triangle nor a quadrilateral.
  bool absence_certified = false;
};

/// First stratifying cocharacter in sweep order, if any within the bound.
StratifyingWitness stratifying_witness(const Polytope& p, int bound);

}  // namespace toricbb
