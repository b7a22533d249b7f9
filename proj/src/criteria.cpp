#include "toricbb/criteria.hpp"

#include <algorithm>
#include <string>

namespace toricbb {

const char* to_string(TwoFaceOrientation o) {
  switch (o) {
    case TwoFaceOrientation::Triangle: return "Triangle";
    case TwoFaceOrientation::QuadrilateralOpposite: return "QuadrilateralOpposite";
    case TwoFaceOrientation::QuadrilateralAdjacent: return "QuadrilateralAdjacent";
    case TwoFaceOrientation::LargePolygon: return "LargePolygon";
  }
  return "LargePolygon";
}

TwoFaceOrientation two_face_orientation(const Flow& flow, const Face& f) {
  if (f.dim != 2) throw InputError("two_face_orientation: face is not 2-dimensional");
  switch (f.vertices.size()) {
    case 3: return TwoFaceOrientation::Triangle;
    case 4: {
      Extrema ex = face_extrema(flow, f);
      return flow.polytope().adjacent(ex.up, ex.down) ? TwoFaceOrientation::QuadrilateralAdjacent
                                                      : TwoFaceOrientation::QuadrilateralOpposite;
    }
    default: return TwoFaceOrientation::LargePolygon;
  }
}

StratVerdict evaluate_stratification_routes(const Flow& flow) {
  const Polytope& poly = flow.polytope();
  const int d = poly.dim();
  BBDecomposition bb = decompose(flow);
  StratVerdict verdict;
  verdict.routes.fill(true);
  auto fail = [&](StratRoute r, StratViolation v) {
    verdict.routes[static_cast<std::size_t>(r)] = false;
    verdict.violations.push_back(v);
  };

  // Closure of each cell is a union of cells: p in P_q^+ forces P_p^+ inside P_q^+.
  for (VertexIndex q = 0; q < poly.num_vertices(); ++q) {
    const Face& cell_q = poly.face(bb.pos_face[q]);
    for (VertexIndex p : cell_q.vertices) {
      if (p == q) continue;
      if (!is_subset(poly.face(bb.pos_face[p]).vertices, cell_q.vertices)) {
        fail(StratRoute::FaceContainment, FaceContainmentViolation{p, q});
      }
    }
  }

  // Cell dimension strictly increases along every polytope edge.
  for (auto [a, b] : poly.edges()) {
    VertexIndex p = flow.value(a) < flow.value(b) ? a : b;
    VertexIndex q = p == a ? b : a;
    if (bb.dims[p].pos >= bb.dims[q].pos) {
      fail(StratRoute::DimMonotone, DimMonotoneViolation{p, q, bb.dims[p].pos, bb.dims[q].pos});
    }
  }

  // negDim(p) + posDim(q) > dim along every orbit graph edge.
  for (const auto& e : orbit_graph(flow).edges) {
    if (bb.dims[e.src].neg + bb.dims[e.dst].pos <= d) {
      fail(StratRoute::DimSum, DimSumViolation{e.src, e.dst, bb.dims[e.src].neg, bb.dims[e.dst].pos});
    }
  }

  // Every 2-face must itself be stratified.
  for (FaceIndex i : poly.faces_of_dim(2)) {
    TwoFaceOrientation o = two_face_orientation(flow, poly.face(i));
    if (o == TwoFaceOrientation::QuadrilateralAdjacent || o == TwoFaceOrientation::LargePolygon) {
      fail(StratRoute::TwoFaces, TwoFaceOrientationViolation{i, o});
    }
  }

  verdict.is_stratification = std::all_of(verdict.routes.begin(), verdict.routes.end(), [](bool b) { return b; });
  return verdict;
}

StratVerdict stratification_check(const Flow& flow) {
  if (!is_simple(flow.polytope())) throw InputError("stratification_check: polytope is not simple");
  StratVerdict verdict = evaluate_stratification_routes(flow);
  const auto& r = verdict.routes;
  if (!(r[0] == r[1] && r[1] == r[2] && r[2] == r[3])) {
    std::string detail;
    for (bool b : r) detail += b ? 'T' : 'F';
    throw InternalConsistencyError("stratification routes disagree (" + detail + ") for cocharacter " +
                                   to_string(flow.cocharacter().v));
  }
  return verdict;
}

PolytopeClass classify_stratification(const Polytope& p) {
  PolytopeClass c;
  for (FaceIndex i : p.faces_of_dim(2)) ++c.census[classify_two_face(p, p.face(i))];
  auto only = [&](std::initializer_list<TwoFaceShape> allowed) {
    for (const auto& [shape, n] : c.census) {
      if (n > 0 && std::find(allowed.begin(), allowed.end(), shape) == allowed.end()) return false;
    }
    return true;
  };
  c.existentially_stratified =
      only({TwoFaceShape::Triangle, TwoFaceShape::Parallelogram, TwoFaceShape::OtherQuadrilateral});
  c.universally_stratified = only({TwoFaceShape::Triangle, TwoFaceShape::Parallelogram});
  c.zonotope_like = only({TwoFaceShape::Parallelogram, TwoFaceShape::CentrallySymmetricPolygon});
  return c;
}

ConvexityVerdict gm_convexity(const Flow& flow, const Face& e) {
  const Polytope& poly = flow.polytope();
  for (FaceIndex i = 0; i < poly.faces().size(); ++i) {
    const Face& f = poly.face(i);
    Extrema ex = face_extrema(flow, f);
    if (e.contains(ex.up) && e.contains(ex.down) && !is_subset(f.vertices, e.vertices)) {
      return ConvexityVerdict{false, i};
    }
  }
  return ConvexityVerdict{};
}

WellRoundedVerdict well_rounded(const Flow& flow) {
  const Polytope& poly = flow.polytope();
  WellRoundedVerdict verdict;
  for (VertexIndex p = 0; p < poly.num_vertices(); ++p) {
    FaceIndex cell = bb_face(flow, p, Sign::Plus);
    ConvexityVerdict c = gm_convexity(flow, poly.face(cell));
    if (!c.is_convex) {
      verdict.well_rounded = false;
      verdict.violations.push_back(CellConvexityViolation{p, cell, *c.witness});
    }
  }
  return verdict;
}

WellRounded3dVerdict well_rounded_3d(const Flow& flow) {
  const Polytope& poly = flow.polytope();
  if (poly.dim() != 3) throw InputError("well_rounded_3d: polytope is not 3-dimensional");
  if (!is_simple(poly)) throw InputError("well_rounded_3d: polytope is not simple");
  const VertexIndex top = face_extrema(flow, poly.face(poly.whole_index())).up;
  WellRounded3dVerdict verdict;
  for (FaceIndex i : poly.faces_of_dim(2)) {
    Extrema ex = face_extrema(flow, poly.face(i));
    bool top_is_face_max = ex.up == top;
    bool not_adjacent = !poly.adjacent(ex.up, ex.down);
    VertexSet trio{ex.up, ex.down, top};
    std::sort(trio.begin(), trio.end());
    trio.erase(std::unique(trio.begin(), trio.end()), trio.end());
    bool shared_with_top_facet = !poly.facets_containing(trio).empty();
    if (!(top_is_face_max || not_adjacent || shared_with_top_facet)) {
      verdict.well_rounded = false;
      verdict.violating_facets.push_back(i);
    }
  }
  if (verdict.well_rounded != well_rounded(flow).well_rounded) {
    throw InternalConsistencyError("well_rounded_3d disagrees with well_rounded for cocharacter " +
                                   to_string(flow.cocharacter().v));
  }
  return verdict;
}

OrbitClosureVerdict orbit_closure_convexity_all(const Flow& flow) {
  const Polytope& poly = flow.polytope();
  for (FaceIndex i = 0; i < poly.faces().size(); ++i) {
    ConvexityVerdict c = gm_convexity(flow, poly.face(i));
    if (!c.is_convex) return OrbitClosureVerdict{false, std::make_pair(i, *c.witness)};
  }
  return OrbitClosureVerdict{};
}

}  // namespace toricbb
