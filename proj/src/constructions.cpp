#include "toricbb/constructions.hpp"

#include "toricbb/errors.hpp"

#include <algorithm>
#include <numeric>

namespace toricbb {

Polytope simplex(int d) {
  if (d < 1) throw InputError("simplex: dimension must be at least 1");
  const auto n = static_cast<std::size_t>(d);
  std::vector<IntVector> verts{IntVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    verts.push_back(std::move(e));
  }
  return Polytope::build(std::move(verts));
}

Polytope cube(int d) {
  if (d < 1) throw InputError("cube: dimension must be at least 1");
  Polytope out = simplex(1);
  for (int i = 1; i < d; ++i) out = product(out, simplex(1));
  return out;
}

Polytope product(const Polytope& p, const Polytope& q) {
  std::vector<IntVector> verts;
  verts.reserve(p.num_vertices() * q.num_vertices());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      IntVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      verts.push_back(std::move(v));
    }
  }
  return Polytope::build(std::move(verts));
}

Polytope dilate(const Polytope& p, int k) {
  if (k < 1) throw InputError("dilate: factor must be at least 1");
  std::vector<IntVector> verts;
  for (const auto& v : p.vertices()) verts.push_back(scaled(v, Integer(k)));
  return Polytope::build(std::move(verts));
}

namespace {

void require_smooth(const Polytope& p, const char* what) {
  if (!is_smooth(p)) throw InputError(std::string(what) + ": polytope is not smooth");
}

// Points at lattice distance one from v along each incident edge.
std::vector<IntVector> corner_points(const Polytope& p, VertexIndex v) {
  std::vector<IntVector> out;
  for (const auto& d : edge_directions(p, v)) out.push_back(add(p.vertex(v), d.coords()));
  return out;
}

}  // namespace

Blowup blowup_at_vertex(const Polytope& p, VertexIndex v) {
  if (v >= p.num_vertices()) throw InputError("blowup_at_vertex: vertex index out of range");
  require_smooth(p, "blowup_at_vertex");
  int factor = 1;
  for (VertexIndex w : p.neighbors(v)) {
    if (lattice_length(p, v, w) < 2) factor = 2;
  }
  Polytope base = factor == 1 ? p : dilate(p, factor);
  std::vector<IntVector> verts;
  for (VertexIndex i = 0; i < base.num_vertices(); ++i) {
    if (i == v) {
      for (auto& c : corner_points(base, v)) verts.push_back(std::move(c));
    } else {
      verts.push_back(base.vertex(i));
    }
  }
  return Blowup{Polytope::build(std::move(verts)), factor};
}

Blowup pop(const Polytope& p) {
  require_smooth(p, "pop");
  Integer shortest = -1;
  for (auto [a, b] : p.edges()) {
    Integer len = lattice_length(p, a, b);
    if (shortest < 0 || len < shortest) shortest = len;
  }
  // Each vertex needs its incident edges at least 2 long; corners at the two
  // ends of an edge touch unless it is at least 3 long.
  int factor = shortest < 2 ? 2 : 1;
  if (shortest * factor < 3) ++factor;

  const std::size_t expected = p.num_vertices() * static_cast<std::size_t>(p.dim());
  for (int attempt = 0; attempt < 8; ++attempt, ++factor) {
    Polytope base = factor == 1 ? p : dilate(p, factor);
    std::vector<IntVector> verts;
    for (VertexIndex i = 0; i < base.num_vertices(); ++i) {
      for (auto& c : corner_points(base, i)) verts.push_back(std::move(c));
    }
    try {
      Polytope out = Polytope::build(std::move(verts));
      if (out.num_vertices() == expected && is_smooth(out)) return Blowup{std::move(out), factor};
    } catch (const InputError&) {
      // Truncations at distant vertices interfere; dilate further.
    }
  }
  throw InternalConsistencyError("pop: no dilation produced a valid simultaneous truncation");
}

VertexIndex Permutahedron::vertex_of(const std::vector<int>& word) const {
  auto it = std::find(words.begin(), words.end(), word);
  if (it == words.end()) throw InputError("permutahedron: not a permutation of the right size");
  return static_cast<VertexIndex>(it - words.begin());
}

VertexSet Permutahedron::face_of_ordered_partition(const std::vector<std::vector<int>>& blocks) const {
  const std::size_t size = words.empty() ? 0 : words.front().size();
  std::vector<int> block_of(size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int e : blocks[b]) {
      if (e < 0 || static_cast<std::size_t>(e) >= size || block_of[static_cast<std::size_t>(e)] != -1) {
        throw InputError("face_of_ordered_partition: blocks do not partition the ground set");
      }
      block_of[static_cast<std::size_t>(e)] = static_cast<int>(b);
    }
  }
  if (std::count(block_of.begin(), block_of.end(), -1) != 0) {
    throw InputError("face_of_ordered_partition: blocks do not cover the ground set");
  }
  VertexSet out;
  for (VertexIndex i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    bool ok = true;
    for (std::size_t pos = 1; pos < w.size(); ++pos) {
      if (block_of[static_cast<std::size_t>(w[pos - 1])] > block_of[static_cast<std::size_t>(w[pos])]) ok = false;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

Permutahedron permutahedron_labeled(int n) {
  if (n < 1) throw InputError("permutahedron: order must be at least 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<int> word(size);
  std::iota(word.begin(), word.end(), 0);
  std::vector<std::vector<int>> words;
  std::vector<IntVector> ambient;
  do {
    IntVector x(size);
    for (std::size_t pos = 0; pos < size; ++pos) x[static_cast<std::size_t>(word[pos])] = static_cast<long>(pos);
    words.push_back(word);
    ambient.push_back(std::move(x));
  } while (std::next_permutation(word.begin(), word.end()));

  AffineFrame frame = affine_sublattice_parametrization(ambient);
  std::vector<IntVector> local;
  for (const auto& x : ambient) local.push_back(frame.coordinates_of(x));
  return Permutahedron{Polytope::build(std::move(local)), std::move(frame), std::move(words)};
}

Polytope permutahedron(int n) { return permutahedron_labeled(n).polytope; }

std::vector<IntVector> fixture_vertices(FixtureId id) {
  switch (id) {
    case FixtureId::Prism714:
      return {make_vector({1, 0, 0}), make_vector({0, 0, 0}), make_vector({0, 1, 0}),
              make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({0, 0, 2})};
    case FixtureId::PrismTall:
      return {make_vector({1, 0, 0}), make_vector({0, 0, 0}), make_vector({0, 1, 0}),
              make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({0, 0, 5})};
    case FixtureId::TwiceBlownP3:
      return {make_vector({0, 0, 0}), make_vector({2, 0, 0}), make_vector({0, 0, 2}), make_vector({2, 1, 0}),
              make_vector({2, 0, 1}), make_vector({0, 3, 0}), make_vector({1, 0, 2}), make_vector({0, 1, 2})};
    case FixtureId::PopSimplex3:
      return {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1}),
              make_vector({2, 0, 0}), make_vector({2, 1, 0}), make_vector({2, 0, 1}),
              make_vector({0, 2, 0}), make_vector({1, 2, 0}), make_vector({0, 2, 1}),
              make_vector({0, 0, 2}), make_vector({1, 0, 2}), make_vector({0, 1, 2})};
    case FixtureId::Pentagon2D:
      return {make_vector({1, 0}), make_vector({2, 0}), make_vector({2, 2}), make_vector({0, 2}),
              make_vector({0, 1})};
  }
  throw InputError("unknown fixture");
}

Polytope fixture(FixtureId id) { return Polytope::build(fixture_vertices(id)); }

const std::vector<FixtureId>& all_fixtures() {
  static const std::vector<FixtureId> ids{FixtureId::Prism714, FixtureId::PrismTall, FixtureId::TwiceBlownP3,
                                          FixtureId::PopSimplex3, FixtureId::Pentagon2D};
  return ids;
}

std::string_view fixture_name(FixtureId id) {
  switch (id) {
    case FixtureId::Prism714: return "prism714";
    case FixtureId::PrismTall: return "prism-tall";
    case FixtureId::TwiceBlownP3: return "twice-blown-p3";
    case FixtureId::PopSimplex3: return "pop-simplex3";
    case FixtureId::Pentagon2D: return "pentagon2d";
  }
  return "";
}

std::optional<FixtureId> fixture_from_name(std::string_view name) {
  for (FixtureId id : all_fixtures()) {
    if (fixture_name(id) == name) return id;
  }
  return std::nullopt;
}

}  // namespace toricbb
