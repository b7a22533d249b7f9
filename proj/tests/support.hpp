#pragma once

#include "toricbb/bb_flow.hpp"
#include "toricbb/constructions.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace toricbb;

// Prism vertices in fixture order: G H I J K L.
enum PrismVertex : VertexIndex { G = 0, H = 1, I = 2, J = 3, K = 4, L = 5 };

inline VertexSet vset(std::vector<VertexIndex> s) {
  std::sort(s.begin(), s.end());
  return s;
}

inline IntVector iv(std::initializer_list<long long> x) { return make_vector(x); }

inline const Face& face_with(const Polytope& p, std::vector<VertexIndex> s) {
  auto idx = p.find_face(vset(std::move(s)));
  if (!idx) throw std::runtime_error("no such face");
  return p.face(*idx);
}

inline Polytope unit_square() { return cube(2); }

// Admissible cocharacters drawn uniformly from [-bound, bound]^dim.
inline std::vector<Cocharacter> sample_admissible(const Polytope& p, std::size_t count, unsigned seed, int bound = 7) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-bound, bound);
  std::vector<Cocharacter> out;
  while (out.size() < count) {
    IntVector v;
    for (int i = 0; i < p.dim(); ++i) v.emplace_back(coord(rng));
    Cocharacter c{v};
    if (is_admissible(p, c).admissible) out.push_back(c);
  }
  return out;
}

// Smooth fixtures used by the sweeping property tests.
inline std::vector<std::pair<std::string, Polytope>> smooth_fixtures() {
  std::vector<std::pair<std::string, Polytope>> out;
  for (FixtureId id : all_fixtures()) out.emplace_back(std::string(fixture_name(id)), fixture(id));
  out.emplace_back("simplex3", simplex(3));
  out.emplace_back("cube3", cube(3));
  out.emplace_back("prism-lattice", product(simplex(2), simplex(1)));
  out.emplace_back("hexagon", permutahedron(2));
  return out;
}

}  // namespace testing
