#include <doctest.h>

#include "support.hpp"
#include "toricbb/errors.hpp"

#include <map>
#include <set>

using namespace testing;

namespace {

VertexIndex index_of(const Polytope& p, const IntVector& x) {
  for (VertexIndex i = 0; i < p.num_vertices(); ++i) {
    if (p.vertex(i) == x) return i;
  }
  throw std::runtime_error("vertex not found");
}

std::set<std::pair<VertexIndex, VertexIndex>> edge_pairs(const OrbitGraph& g) {
  std::set<std::pair<VertexIndex, VertexIndex>> out;
  for (const auto& e : g.edges) out.emplace(e.src, e.dst);
  return out;
}

Cocharacter increasing_on_permutahedron(const Permutahedron& pi) {
  IntVector ambient;
  for (std::size_t i = 0; i < pi.words.front().size(); ++i) ambient.emplace_back(static_cast<long>(i));
  return Cocharacter{pi.frame.restrict_covector(ambient)};
}

}  // namespace

TEST_CASE("admissibility") {
  Polytope prism = fixture(FixtureId::Prism714);
  CHECK(is_admissible(prism, Cocharacter{iv({-1, 1, 2})}).admissible);

  Polytope sq = unit_square();
  Admissibility a = is_admissible(sq, Cocharacter{iv({1, 0})});
  CHECK_FALSE(a.admissible);
  REQUIRE(a.offending_edge);
  CHECK(sq.vertex(a.offending_edge->first)[0] == sq.vertex(a.offending_edge->second)[0]);
  CHECK(is_admissible(sq, Cocharacter{iv({1, 2})}).admissible);

  CHECK_THROWS_AS(is_admissible(sq, Cocharacter{iv({1, 2, 3})}), InputError);
  CHECK_THROWS_AS(Flow(sq, Cocharacter{iv({0, 1})}), InadmissibleCocharacter);
}

TEST_CASE("prism values and extrema") {
  Polytope prism = fixture(FixtureId::Prism714);
  Flow flow(prism, Cocharacter{iv({-1, 1, 2})});
  std::vector<Integer> expected{-1, 0, 1, 1, 3, 4};
  CHECK(flow.values() == expected);

  Extrema ghi = face_extrema(flow, face_with(prism, {G, H, I}));
  CHECK(ghi.up == I);
  CHECK(ghi.down == G);
  Extrema k = face_extrema(flow, face_with(prism, {K}));
  CHECK(k.up == K);
  CHECK(k.down == K);
  Extrema whole = face_extrema(flow, prism.face(prism.whole_index()));
  CHECK(whole.up == L);
  CHECK(whole.down == G);
}

TEST_CASE("prism BB faces and dimensions") {
  Polytope prism = fixture(FixtureId::Prism714);
  Flow flow(prism, Cocharacter{iv({-1, 1, 2})});
  CHECK(prism.face(bb_face(flow, K, Sign::Plus)).vertices == vset({G, I, K, J}));
  CHECK(prism.face(bb_face(flow, G, Sign::Plus)).vertices == vset({G}));
  CHECK(prism.face(bb_face(flow, I, Sign::Plus)).vertices == vset({G, H, I}));

  std::vector<int> pos;
  for (const auto& d : bb_dims(flow)) pos.push_back(d.pos);
  CHECK(pos == std::vector<int>{0, 1, 2, 1, 2, 3});
}

TEST_CASE("orbit graphs") {
  SUBCASE("unit square") {
    Polytope sq = unit_square();
    Flow flow(sq, Cocharacter{iv({1, 2})});
    VertexIndex o = index_of(sq, iv({0, 0})), a = index_of(sq, iv({1, 0})), b = index_of(sq, iv({0, 1})),
                c = index_of(sq, iv({1, 1}));
    OrbitGraph g = orbit_graph(flow);
    CHECK(edge_pairs(g) == std::set<std::pair<VertexIndex, VertexIndex>>{{o, a}, {o, b}, {a, c}, {b, c}, {o, c}});
    for (const auto& e : g.edges) {
      if (e.src == o && e.dst == c) CHECK(e.witness == sq.whole_index());
    }
  }
  SUBCASE("segment") {
    Polytope seg = simplex(1);
    Flow flow(seg, Cocharacter{iv({1})});
    OrbitGraph g = orbit_graph(flow);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].src == 0);
    CHECK(g.edges[0].dst == 1);
  }
  SUBCASE("prism") {
    Polytope prism = fixture(FixtureId::Prism714);
    Flow flow(prism, Cocharacter{iv({-1, 1, 2})});
    bool found = false;
    for (const auto& e : orbit_graph(flow).edges) {
      if (e.src == G && e.dst == L) {
        found = true;
        CHECK(prism.face(e.witness).vertices == vset({H, G, J, L}));
      }
    }
    CHECK(found);
  }
}

TEST_CASE("filtering orders") {
  Polytope prism = fixture(FixtureId::Prism714);
  Flow flow(prism, Cocharacter{iv({-1, 1, 2})});
  CHECK(filtering_order(flow) == std::vector<VertexIndex>{G, H, I, J, K, L});
  Polytope seg = simplex(1);
  CHECK(filtering_order(Flow(seg, Cocharacter{iv({1})})) == std::vector<VertexIndex>{0, 1});

  // Under -v the order is a linear extension of the reversed orbit graph.
  Flow back(prism, Cocharacter{iv({1, -1, -2})});
  auto order = filtering_order(back);
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  for (const auto& e : orbit_graph(flow).edges) CHECK(rank[e.dst] < rank[e.src]);
}

TEST_CASE("permutahedron cells follow ascents") {
  Permutahedron pi = permutahedron_labeled(3);
  Flow flow(pi.polytope, increasing_on_permutahedron(pi));
  auto dims = bb_dims(flow);
  for (VertexIndex i = 0; i < pi.words.size(); ++i) {
    const auto& w = pi.words[i];
    int ascents = 0;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) ascents += w[k] < w[k + 1];
    CHECK(dims[i].pos == ascents);
    CHECK(dims[i].neg == 3 - ascents);
  }
  VertexIndex v1230 = pi.vertex_of({1, 2, 3, 0});
  CHECK(pi.polytope.face(bb_face(flow, v1230, Sign::Plus)).vertices ==
        pi.face_of_ordered_partition({{1, 2, 3}, {0}}));
}

TEST_CASE("structural invariants over sampled cocharacters") {
  for (const auto& [name, p] : smooth_fixtures()) {
    CAPTURE(name);
    for (const auto& c : sample_admissible(p, 12, 17)) {
      CAPTURE(to_string(c.v));
      Flow flow(p, c);
      Flow back(p, c.reversed());
      BBDecomposition bb = decompose(flow);

      int top = 0, bottom = 0;
      std::set<int> seen;
      for (VertexIndex q = 0; q < p.num_vertices(); ++q) {
        CHECK(bb.dims[q].pos + bb.dims[q].neg == p.dim());
        top += bb.dims[q].pos == p.dim();
        bottom += bb.dims[q].pos == 0;
        seen.insert(bb.dims[q].pos);

        CHECK(bb_face(flow, q, Sign::Plus) == bb_face_by_definition(flow, q, Sign::Plus));
        CHECK(bb_face(flow, q, Sign::Minus) == bb_face_by_definition(flow, q, Sign::Minus));
        CHECK(bb_face(flow, q, Sign::Plus) == bb_face(back, q, Sign::Minus));
        CHECK(bb.neg_face[q] == bb_face(back, q, Sign::Plus));
      }
      CHECK(top == 1);
      CHECK(bottom == 1);
      CHECK(seen.size() == static_cast<std::size_t>(p.dim()) + 1);

      // Every face has exactly one maximizer, so the faces with maximizer q
      // partition the face set; they are the faces of P_q^+ containing q.
      std::size_t total = 0;
      for (VertexIndex q = 0; q < p.num_vertices(); ++q) {
        const Face& cell = p.face(bb.pos_face[q]);
        for (const auto& f : p.faces()) {
          bool by_max = face_extrema(flow, f).up == q;
          bool by_cell = f.contains(q) && is_subset(f.vertices, cell.vertices);
          CHECK(by_max == by_cell);
          total += by_max;
        }
      }
      CHECK(total == p.faces().size());

      for (const auto& e : orbit_graph(flow).edges) CHECK(flow.value(e.src) < flow.value(e.dst));
    }
  }
}

TEST_CASE("inheritance to faces") {
  for (const auto& [name, p] : smooth_fixtures()) {
    CAPTURE(name);
    for (const auto& c : sample_admissible(p, 4, 23)) {
      Flow flow(p, c);
      for (FaceIndex qi = 0; qi < p.faces().size(); ++qi) {
        const Face& q = p.face(qi);
        if (q.dim < 1) continue;
        Restriction r = restrict_to_face(p, q);
        Flow local(r.polytope, Cocharacter{r.induced_cocharacter(c.v)});
        for (VertexIndex i = 0; i < r.polytope.num_vertices(); ++i) {
          VertexIndex parent = r.to_parent[i];
          VertexSet inside = r.lift(r.polytope.face(bb_face(local, i, Sign::Plus)).vertices);
          CHECK(inside == intersect(q.vertices, p.face(bb_face(flow, parent, Sign::Plus)).vertices));
        }
      }
    }
  }
}

TEST_CASE("BB faces of products are products of BB faces") {
  std::vector<Polytope> pool{simplex(1), simplex(2), cube(2), permutahedron(2), fixture(FixtureId::Pentagon2D)};
  std::mt19937 rng(3);
  for (int t = 0; t < 12; ++t) {
    const Polytope& p = pool[rng() % pool.size()];
    const Polytope& q = pool[rng() % pool.size()];
    Cocharacter v = sample_admissible(p, 1, rng())[0];
    Cocharacter w = sample_admissible(q, 1, rng())[0];
    IntVector vw = v.v;
    vw.insert(vw.end(), w.v.begin(), w.v.end());
    Polytope pq = product(p, q);
    Flow fp(p, v), fq(q, w), fpq(pq, Cocharacter{vw});
    for (VertexIndex i = 0; i < p.num_vertices(); ++i) {
      for (VertexIndex j = 0; j < q.num_vertices(); ++j) {
        VertexSet expected;
        for (VertexIndex a : p.face(bb_face(fp, i, Sign::Plus)).vertices) {
          for (VertexIndex b : q.face(bb_face(fq, j, Sign::Plus)).vertices) expected.push_back(a * q.num_vertices() + b);
        }
        CHECK(pq.face(bb_face(fpq, i * q.num_vertices() + j, Sign::Plus)).vertices == vset(expected));
      }
    }
  }
}

TEST_CASE("decomposition depends only on the vertex order") {
  Polytope prism = fixture(FixtureId::Prism714);
  std::map<std::vector<std::size_t>, std::vector<FaceIndex>> by_key;
  for (const auto& c : sample_admissible(prism, 200, 29, 4)) {
    Flow flow(prism, c);
    auto cells = decompose(flow).pos_face;
    auto [it, fresh] = by_key.emplace(flow.order_key(), cells);
    if (!fresh) CHECK(it->second == cells);
  }
  CHECK(by_key.size() > 1);
}
