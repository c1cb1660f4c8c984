// planarity.hpp — Kuratowski search, disjoint paths, and flat embeddability.
//
// Graphs are decided by exhaustive search for K5/K33 subdivisions over
// branch-vertex candidates — complete by Kuratowski's theorem and fine at
// desk scale.  Two-dimensional complexes are decided recursively: every
// maximal edge-connected sheet of triangles must be an orientable genus-0
// surface with boundary, and whatever is attached to each of its boundary
// circles must embed in that circle's complement disk.  The disk test is
// the same planarity question for the circle plus its attachments plus an
// apex joined to the whole circle, standing for the solid sheet behind it.

#pragma once

#include <optional>
#include <string>

#include "braidcx/complex.hpp"
#include "braidcx/reduce.hpp"

namespace braidcx::planarity {

using guard_failed = reduce::guard_failed;

struct KuratowskiWitness {
  core::Complex subgraph;  // the subdivision found, labelled as in the input
  std::string kind;        // "K5-subdivision" or "K33-subdivision"
};

// Search the 1-skeleton for a subdivided K5 or K33.  Branch candidates are
// the vertices of degree >= 4 (K5) or >= 3 (K33); path systems are found by
// backtracking over internally disjoint simple paths.
std::optional<KuratowskiWitness> find_kuratowski(const core::Complex& x);

// No Kuratowski subdivision in the 1-skeleton.  A complete planarity test
// for graphs; higher-dimensional complexes go through planar().
bool graph_planar(const core::Complex& x);

// Maximum number of internally vertex-disjoint u-w paths in the 1-skeleton
// (unit-vertex-capacity augmenting paths), capped at limit.
long max_disjoint_paths(const core::Complex& x, core::VertexId u,
                        core::VertexId w, long limit);

struct PlanarityResult {
  bool planar = false;
  bool has_witness = false;
  core::Complex witness;     // Kuratowski subcomplex of the input when found
  std::string witness_kind;  // "K5-subdivision" | "K33-subdivision" | "evidence"
  std::string evidence;      // prose reason when no subgraph witness exists
};

// Embeddability in the plane for a connected complex of dimension <= 2.
// Nonplanar results carry a Kuratowski witness when one exists in the
// 1-skeleton, and prose evidence otherwise (the obstruction can be genuinely
// two-dimensional).  Throws guard_failed on an empty, disconnected, or
// higher-dimensional input, and on a sheet pinched at a vertex (out of
// scope for this library).
PlanarityResult planar(const core::Complex& x);

}  // namespace braidcx::planarity
