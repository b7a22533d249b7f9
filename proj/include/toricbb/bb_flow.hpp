#pragma once

// Bialynicki-Birula data of a smooth lattice polytope under a cocharacter.
//
// For an admissible cocharacter v every face F has a unique maximizer F.up
// and minimizer F.down of <., v>. The positive BB face of a vertex p is the
// largest face whose maximizer is p; it is spanned by p and its neighbors of
// smaller value, so its dimension counts those neighbors.

#include "toricbb/errors.hpp"
#include "toricbb/flow_graph.hpp"
#include "toricbb/polytope.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toricbb {

struct Cocharacter {
  IntVector v;

  Cocharacter reversed() const { return Cocharacter{negated(v)}; }
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

enum class Sign { Plus, Minus };

struct Admissibility {
  bool admissible = true;
  /// An edge perpendicular to v, when not admissible.
  std::optional<std::pair<VertexIndex, VertexIndex>> offending_edge;
};

/// Throws InputError on dimension mismatch.
Admissibility is_admissible(const Polytope& p, const Cocharacter& v);

class InadmissibleCocharacter : public InputError {
 public:
  InadmissibleCocharacter(VertexIndex a, VertexIndex b, const std::string& message)
      : InputError(message), edge_(a, b) {}
  std::pair<VertexIndex, VertexIndex> edge() const noexcept { return edge_; }

 private:
  std::pair<VertexIndex, VertexIndex> edge_;
};

/// A polytope together with an admissible cocharacter and its vertex values.
///
/// Holds a reference to the polytope, which must outlive the Flow.
class Flow {
 public:
  /// Throws InadmissibleCocharacter (an InputError) when some edge is
  /// perpendicular to v, and InputError on dimension mismatch.
  Flow(const Polytope& p, Cocharacter v);
  Flow(Polytope&&, Cocharacter) = delete;

  const Polytope& polytope() const noexcept { return *polytope_; }
  const Cocharacter& cocharacter() const noexcept { return v_; }
  const std::vector<Integer>& values() const noexcept { return values_; }
  const Integer& value(VertexIndex i) const { return values_.at(i); }

  /// Dense rank of each vertex value; equal values share a rank. Two
  /// cocharacters with equal keys induce identical BB data.
  std::vector<std::size_t> order_key() const;

 private:
  const Polytope* polytope_;
  Cocharacter v_;
  std::vector<Integer> values_;
};

struct Extrema {
  VertexIndex up;
  VertexIndex down;
};

Extrema face_extrema(const Flow& flow, const Face& f);

/// Largest face with maximizer p (Sign::Plus) or minimizer p (Sign::Minus),
/// built from the span of p and its lower (resp. upper) neighbors.
FaceIndex bb_face(const Flow& flow, VertexIndex p, Sign sign);

/// The same face found by scanning every face for the ones extremal at p.
/// Independent of bb_face; used to cross-check it.
FaceIndex bb_face_by_definition(const Flow& flow, VertexIndex p, Sign sign);

struct CellDims {
  int pos = 0;
  int neg = 0;
};

/// Neighbor counts below and above each vertex, cross-checked against the
/// dimensions of the BB faces (mismatch is an InternalConsistencyError).
std::vector<CellDims> bb_dims(const Flow& flow);

struct BBDecomposition {
  std::vector<FaceIndex> pos_face;
  std::vector<FaceIndex> neg_face;
  std::vector<CellDims> dims;
};

BBDecomposition decompose(const Flow& flow);

struct FlowEdge {
  VertexIndex src;
  VertexIndex dst;
  /// Lowest-dimensional face with minimizer src and maximizer dst.
  FaceIndex witness;
};

struct OrbitGraph {
  std::vector<CellDims> dims;
  /// Sorted by (src, dst).
  std::vector<FlowEdge> edges;
  int ambient_dim = 0;

  /// Abstract graph with node ids "0", "1", ... matching vertex indices.
  FlowGraph to_flow_graph() const;
};

/// Edge F.down -> F.up for every face of dimension at least one.
OrbitGraph orbit_graph(const Flow& flow);

/// Vertices by ascending value, ties broken by index.
std::vector<VertexIndex> filtering_order(const Flow& flow);

}  // namespace toricbb
