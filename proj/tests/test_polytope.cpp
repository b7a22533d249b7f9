#include <doctest.h>

#include "support.hpp"
#include "toricbb/errors.hpp"

#include <random>
#include <set>

using namespace testing;

namespace {

void check_structure(const Polytope& p) {
  // Euler: the alternating sum over proper faces is 1 - (-1)^dim.
  long long euler = 0;
  for (std::size_t i = 0; i + 1 < p.faces().size(); ++i) euler += p.face(i).dim % 2 == 0 ? 1 : -1;
  CHECK(euler == 1 - (p.dim() % 2 == 0 ? 1 : -1));

  for (const auto& f : p.facets()) {
    for (VertexIndex v = 0; v < p.num_vertices(); ++v) {
      Integer s = pairing(p.vertex(v), f.normal);
      CHECK(s <= f.offset);
      CHECK((s == f.offset) == std::binary_search(f.vertices.begin(), f.vertices.end(), v));
    }
  }

  std::set<VertexSet> sets;
  for (const auto& f : p.faces()) sets.insert(f.vertices);
  for (const auto& a : p.faces()) {
    for (const auto& b : p.faces()) {
      VertexSet c = intersect(a.vertices, b.vertices);
      if (!c.empty()) CHECK(sets.count(c) == 1);
    }
  }
  CHECK(p.face(p.whole_index()).dim == p.dim());
  CHECK(p.face(p.whole_index()).vertices.size() == p.num_vertices());
}

// Facet vertex sets by testing the hyperplane through every n-subset.
std::set<VertexSet> brute_force_facets(const std::vector<IntVector>& pts) {
  const std::size_t n = pts.front().size();
  std::set<VertexSet> out;
  std::vector<bool> pick(pts.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pick[i]) idx.push_back(i);
    }
    IntMatrix diffs;
    for (std::size_t k = 1; k < n; ++k) diffs.push_back(sub(pts[idx[k]], pts[idx[0]]));
    IntMatrix ker = integer_kernel(diffs, n);
    if (ker.size() != 1) continue;
    Integer offset = pairing(pts[idx[0]], ker[0]);
    bool above = false, below = false;
    VertexSet on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Integer s = pairing(pts[i], ker[0]) - offset;
      above |= s > 0;
      below |= s < 0;
      if (s == 0) on.push_back(i);
    }
    if (!(above && below)) out.insert(on);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool all_extreme(const std::vector<IntVector>& pts, const std::set<VertexSet>& facets) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    VertexSet meet;
    bool first = true;
    for (const auto& f : facets) {
      if (!std::binary_search(f.begin(), f.end(), i)) continue;
      meet = first ? f : intersect(meet, f);
      first = false;
    }
    if (meet != VertexSet{i}) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("unit square") {
  Polytope sq = Polytope::build({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  CHECK(sq.facets().size() == 4);
  CHECK(sq.edges().size() == 4);
  CHECK(sq.faces_of_dim(2).size() == 1);
  CHECK(is_smooth(sq));
  check_structure(sq);
}

TEST_CASE("prism facets") {
  Polytope prism = fixture(FixtureId::Prism714);
  std::set<VertexSet> facets;
  for (const auto& f : prism.facets()) facets.insert(f.vertices);
  std::set<VertexSet> expected{vset({G, H, I}), vset({J, K, L}), vset({H, G, J, L}), vset({I, H, L, K}),
                               vset({G, I, K, J})};
  CHECK(facets == expected);
  CHECK(is_simple(prism));
  CHECK(is_smooth(prism));
  check_structure(prism);
}

TEST_CASE("simplex and pyramid") {
  Polytope s = simplex(3);
  CHECK(s.facets().size() == 4);
  CHECK(s.edges().size() == 6);
  CHECK(is_simple(s));
  Polytope pyramid =
      Polytope::build({iv({0, 0, 0}), iv({2, 0, 0}), iv({0, 2, 0}), iv({2, 2, 0}), iv({1, 1, 1})});
  CHECK_FALSE(is_simple(pyramid));
  CHECK_FALSE(is_smooth(pyramid));
  check_structure(pyramid);
}

TEST_CASE("smoothness") {
  Polytope tri = Polytope::build({iv({0, 0}), iv({1, 0}), iv({0, 2})});
  CHECK_FALSE(is_smooth(tri));
  CHECK(is_smooth(cube(3)));
  for (const auto& [name, p] : smooth_fixtures()) {
    CAPTURE(name);
    CHECK(is_smooth(p));
    check_structure(p);
  }
}

TEST_CASE("two-face shapes") {
  Polytope prism = fixture(FixtureId::Prism714);
  CHECK(classify_two_face(prism, face_with(prism, {G, H, I})) == TwoFaceShape::Triangle);
  CHECK(classify_two_face(prism, face_with(prism, {H, G, J, L})) == TwoFaceShape::OtherQuadrilateral);
  Polytope c = cube(3);
  for (FaceIndex i : c.faces_of_dim(2)) CHECK(classify_two_face(c, c.face(i)) == TwoFaceShape::Parallelogram);
  Polytope hex = permutahedron(2);
  CHECK(classify_two_face(hex, hex.face(hex.whole_index())) == TwoFaceShape::CentrallySymmetricPolygon);
  Polytope pent = fixture(FixtureId::Pentagon2D);
  CHECK(classify_two_face(pent, pent.face(pent.whole_index())) == TwoFaceShape::Other);
  CHECK_THROWS_AS(classify_two_face(prism, face_with(prism, {G, H})), InputError);
}

TEST_CASE("simple 3-polytopes with triangles and parallelograms have three facet profiles") {
  std::vector<Polytope> cases{simplex(3), cube(3), product(simplex(2), simplex(1)),
                              Polytope::build({iv({0, 0, 0}), iv({1, 0, 0}), iv({1, 1, 0}), iv({2, 1, 0}),
                                               iv({0, 0, 1}), iv({1, 0, 1}), iv({1, 1, 1}), iv({2, 1, 1})})};
  for (const auto& p : cases) {
    int tri = 0, par = 0;
    for (FaceIndex i : p.faces_of_dim(2)) {
      auto s = classify_two_face(p, p.face(i));
      REQUIRE((s == TwoFaceShape::Triangle || s == TwoFaceShape::Parallelogram));
      (s == TwoFaceShape::Triangle ? tri : par)++;
    }
    auto profile = std::make_pair(tri, par);
    CHECK((profile == std::make_pair(4, 0) || profile == std::make_pair(2, 3) || profile == std::make_pair(0, 6)));
  }
}

TEST_CASE("facets agree with a brute-force oracle") {
  std::mt19937 rng(29);
  std::size_t built = 0;
  for (int t = 0; t < 120; ++t) {
    const int n = 2 + t % 3;
    std::uniform_int_distribution<int> coord(-4, 4);
    std::vector<IntVector> pts;
    std::set<IntVector> unique;
    if (t % 4 == 0) {
      // Points on the moment curve are always in convex position.
      std::vector<int> ts{-3, -2, -1, 0, 1, 2, 3};
      std::shuffle(ts.begin(), ts.end(), rng);
      for (int k = 0; k < n + 3; ++k) {
        IntVector x;
        Integer power = 1;
        for (int j = 0; j < n; ++j) x.push_back(power *= ts[static_cast<std::size_t>(k)]);
        pts.push_back(x);
      }
    } else {
      while (pts.size() < static_cast<std::size_t>(n + 2 + t % 5)) {
        IntVector x;
        for (int j = 0; j < n; ++j) x.emplace_back(coord(rng));
        if (unique.insert(x).second) pts.push_back(x);
      }
    }
    if (affine_rank(pts) != n) continue;
    std::set<VertexSet> expected = brute_force_facets(pts);
    if (!all_extreme(pts, expected)) {
      CHECK_THROWS_AS(Polytope::build(pts), InputError);
      continue;
    }
    Polytope p = Polytope::build(pts);
    std::set<VertexSet> got;
    for (const auto& f : p.facets()) got.insert(f.vertices);
    CHECK(got == expected);
    check_structure(p);
    ++built;
  }
  CHECK(built >= 30);
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(Polytope::build({}), InputError);
  CHECK_THROWS_AS(Polytope::build({iv({0, 0}), iv({1, 1}), iv({2, 2})}), InputError);
  CHECK_THROWS_AS(Polytope::build({iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({1, 0})}), InputError);
  CHECK_THROWS_AS(Polytope::build({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 0})}), InputError);
  CHECK_THROWS_AS(Polytope::build({iv({0, 0}), iv({1, 0}), iv({0, 1, 2})}), InputError);
}

TEST_CASE("restriction to faces") {
  Polytope prism = fixture(FixtureId::Prism714);
  SUBCASE("facet GIKJ") {
    Restriction r = restrict_to_face(prism, face_with(prism, {G, I, K, J}));
    CHECK(r.polytope.dim() == 2);
    CHECK(r.polytope.num_vertices() == 4);
    CHECK(vset(r.to_parent) == vset({G, I, K, J}));
  }
  SUBCASE("edge GH") {
    Restriction r = restrict_to_face(prism, face_with(prism, {G, H}));
    CHECK(r.polytope.dim() == 1);
    CHECK(lattice_length(r.polytope, 0, 1) == 1);
  }
  SUBCASE("whole polytope") {
    Restriction r = restrict_to_face(prism, prism.face(prism.whole_index()));
    CHECK(r.polytope.vertices() == prism.vertices());
    for (VertexIndex i = 0; i < prism.num_vertices(); ++i) CHECK(r.to_parent[i] == i);
  }
  SUBCASE("vertex is rejected") {
    CHECK_THROWS_AS(restrict_to_face(prism, face_with(prism, {G})), InputError);
  }
  SUBCASE("face lattice of a restriction is the interval below the face") {
    for (FaceIndex q : prism.faces_of_dim(2)) {
      const Face& face = prism.face(q);
      Restriction r = restrict_to_face(prism, face);
      std::set<VertexSet> below;
      for (const auto& f : prism.faces()) {
        if (is_subset(f.vertices, face.vertices)) below.insert(f.vertices);
      }
      std::set<VertexSet> lifted;
      for (const auto& f : r.polytope.faces()) lifted.insert(r.lift(f.vertices));
      CHECK(lifted == below);
      CHECK(is_smooth(r.polytope));
    }
  }
}
