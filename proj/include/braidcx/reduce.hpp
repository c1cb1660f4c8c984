// reduce.hpp — braid-equivalence-preserving modifications and simplification.
//
// The moves here (2-skeleton truncation, capping spheres, edge contraction
// and its inverse) each keep every braid group of the complex intact.
// simplify() chains them to turn any connected complex into a simple one of
// dimension at most 2, logging each step so the run can be replayed.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidcx/complex.hpp"

namespace braidcx::reduce {

// A move was requested whose hypothesis does not hold.
struct guard_failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The solid tetrahedron: truncating it to its boundary sphere is the one
// skeleton move that is not an equivalence.
struct excluded_case : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Move {
  enum class Kind {
    TwoSkeleton,
    CapOffSphere,
    AttachTwoCell,
    ContractEdge,
    UncontractEdge,
  };
  Kind kind = Kind::TwoSkeleton;
  // TwoSkeleton: empty.  ContractEdge: {v, w} with v merged into w.
  // UncontractEdge: {v, w, least label of the moved link component}.
  // AttachTwoCell/CapOffSphere: the attaching cycle/sphere, one cell per
  // entry with labels joined by commas.
  std::vector<std::string> payload;
  std::uint64_t result_fingerprint = 0;

  std::string str() const;  // "kind payload... -> fingerprint"
  static Move parse(const std::string& line);
};

struct MoveLog {
  std::uint64_t initial_fingerprint = 0;
  std::uint64_t final_fingerprint = 0;
  std::vector<Move> moves;

  std::string str() const;
  static MoveLog parse(const std::string& text);
};

// Positive-dimensional components of lk(w), each as a vertex set of the
// ambient complex, ordered by least vertex label.  These are the pieces an
// uncontraction can pull off w.
std::vector<std::vector<core::VertexId>> link_graph_components(
    const core::Complex& x, core::VertexId w);

// Drop cells above dimension 2.  Throws excluded_case for the solid
// tetrahedron, whose 2-skeleton is a sphere.
std::pair<core::Complex, Move> two_skeleton(const core::Complex& x);

// Contract the edge e = (v, w) where lk(v) is a connected graph plus the
// isolated point w (v is merged into w).  If that graph is a circle, w must
// not be a boundary point.  Throws guard_failed otherwise.
std::pair<core::Complex, Move> contract_edge(const core::Complex& x,
                                             const core::Simplex& e);

// Inverse of contraction at a non-simple vertex w: introduce a fresh vertex
// v joined to w by an edge and move the chosen positive-dimensional link
// component over to v.  component_choice indexes link_graph_components(x, w).
std::pair<core::Complex, Move> uncontract_vertex(const core::Complex& x,
                                                 core::VertexId w,
                                                 long component_choice);

// Attach a k-cell (k = 2 or 3) along the subcomplex s, as a cone with a
// fresh apex.  k = 2: s must be a circle bounding a disk in x whose interior
// contains a branch point.  k = 3: s must be a 2-sphere, with x neither a
// 2-sphere itself nor a cone over s.
std::pair<core::Complex, Move> cap_off_sphere(const core::Complex& x,
                                              const core::Complex& s, long k);

// Truncate to the 2-skeleton, then uncontract non-simple vertices (least
// label first, least component first) until the complex is simple.
std::pair<core::Complex, MoveLog> simplify(const core::Complex& x);

// Re-apply a log from its initial complex, checking every fingerprint.
core::Complex replay(const core::Complex& initial, const MoveLog& log);

}  // namespace braidcx::reduce
