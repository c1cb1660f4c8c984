// decomp.hpp — cuts, closures, connected sums, and decomposition trees.
//
// A simple complex of dimension ≤ 2 is torn apart along vertices whose
// closed star is a k-leg star: single-vertex cuts give wedge-like splits,
// vertex-pair cuts give theta-like splits, and whatever resists both is a
// leaf (star, circle, surface, branched piece, or 3-connected block).  The
// resulting tree is what the braid-homology fold and the planarity verdict
// walk.  Splits only happen at vertices with 0-dimensional links: that is
// the shape the strand-rewiring constructions need, and splitting anywhere
// else is unsound (the disk-with-interior-whisker would fall apart into a
// disk and a whisker, losing its 2-torsion).

#pragma once

#include <string>
#include <vector>

#include "braidcx/complex.hpp"
#include "braidcx/reduce.hpp"

namespace braidcx::decomp {

using guard_failed = reduce::guard_failed;

// A vertex whose closed star is a k-leg star, with a chosen order on its
// link vertices.  The ordering is what a connected sum matches up.
struct OrderedVertex {
  core::VertexId vertex = 0;
  std::vector<core::VertexId> ordering;
};

// A set of branch vertices whose star-deletion disconnects the complex.
// Trivial means the complex is literally a closure along the set (some
// deleted component is a single cone vertex joined to exactly these).
struct CutSet {
  std::vector<core::VertexId> vertices;
  bool trivial = false;
};

enum class ElementaryKind { TreeStar, Circle, Surface, BranchedSurface };

struct ElementaryInfo {
  ElementaryKind kind = ElementaryKind::TreeStar;
  long k = 0;               // TreeStar: number of legs
  bool orientable = true;   // Surface data
  long genus = 0;
  long boundary_count = 0;
  std::string str() const;
};

// How a leaf is evaluated downstream.  Trivial = point or interval.
// SurfacePiece/BranchedPiece/Block all fold the same way (planar or not);
// the distinction is kept for certificates and printing.
enum class LeafRule {
  Trivial,
  Circle,
  TreeStar,
  SurfacePiece,
  BranchedPiece,
  Block,
};

struct DecompositionNode {
  enum class Kind { Leaf, Closure, OneCut, TwoCut };
  Kind kind = Kind::Leaf;

  // Leaf payload.
  core::Complex piece;
  LeafRule rule = LeafRule::Trivial;
  ElementaryInfo info;  // set for Circle/TreeStar/SurfacePiece/BranchedPiece

  // Closure: {cut vertex, tip} of a contracted trivial 1-cut.
  // OneCut: {cut vertex}.  TwoCut: {first, second cut vertex}.
  std::vector<std::string> cut;
  long k = 0;  // valency of a OneCut vertex
  long m = 0;  // number of parts
  // Per-child gluing data: the part's vertices wired to the first/second
  // cut vertex, and the fresh hub label(s) standing in for it.
  std::vector<std::vector<std::string>> attach_one, attach_two;
  std::vector<std::string> hubs_one, hubs_two;
  // TwoCut only: midpoint labels of direct cut-to-cut edges that were
  // subdivided so the strand could become its own part.
  std::vector<std::string> direct_mids;

  std::vector<DecompositionNode> children;

  bool is_leaf() const { return kind == Kind::Leaf; }
  std::string str(int indent = 0) const;  // one node per line, indented
};

struct DecompositionTree {
  core::Complex root;
  DecompositionNode top;

  std::string str() const { return top.str(0); }
  std::string json_string() const;  // machine-readable form for the CLI
};

// --- closure / unwrap / connected sum -------------------------------------

// Glue a fresh cone vertex to each of vs by an edge.  vs must be distinct
// boundary vertices of the connected complex x.
core::Complex closure(const core::Complex& x,
                      const std::vector<core::VertexId>& vs);

// Inverse: delete a vertex whose closed star is a k-leg star and whose
// deletion stays connected; returns the deletion plus the old link vertices
// (the marked boundary points), so closure(unwrap(x, v)) ≅ x.
std::pair<core::Complex, std::vector<core::VertexId>> unwrap(
    const core::Complex& x, core::VertexId v);

// Delete v from x and w from y, then join their links pairwise by once-
// subdivided edges, matching the two orderings (equal length required).
core::Complex connected_sum(const core::Complex& x, const OrderedVertex& v,
                            const core::Complex& y, const OrderedVertex& w);

// Ascending-label ordering on lk(v); checks the closed star is a k-leg star.
OrderedVertex ordered_star(const core::Complex& x, core::VertexId v);

// --- cuts ------------------------------------------------------------------

// All k-subsets (k = 1 or 2) of branch vertices whose star-deletion
// disconnects x, flagged trivial/nontrivial.  For graphs the branch set is
// taken as the vertices of valency ≥ 3.
std::vector<CutSet> find_cuts(const core::Complex& x, long k);

// True iff no nontrivial cut of size < k exists (k ≤ 3).
bool is_vertex_k_connected(const core::Complex& x, long k);

// --- decomposition -----------------------------------------------------------

// Deterministic split order: contract trivial 1-cuts, then leaf shortcuts
// (point/interval/circle/star), then least-label single-vertex cuts, then
// least-label vertex-pair cuts; leaves classified as above.  Requires a
// simple connected complex of dimension ≤ 2.
DecompositionTree decompose(const core::Complex& x);

// Rebuild a complex from the tree's leaves through its recorded nodes.
// Exact for cut nodes; closure nodes reattach a fresh whisker, so the
// result is homeomorphic (same χ, H₁, point-class census) but may differ
// in labels.
core::Complex recompose(const DecompositionNode& node);

// Classify an elementary complex (one admitting no nontrivial closure or
// connected-sum structure).  Throws guard_failed when the input visibly
// fails that (a tree with two branch vertices, a graph block with cycles,
// a piece with a usable cut).
ElementaryInfo classify_elementary(const core::Complex& x);

// --- surface recognition helpers (shared with verdicts) ---------------------

// Connected closed-star structure of a 2-manifold: every vertex Interior or
// Boundary.  (Equivalent to br(X) = ∅ for connected dim-2 complexes.)
bool is_surface(const core::Complex& x);
// Consistent orientation of all triangles exists (BFS over shared edges).
bool surface_orientable(const core::Complex& x);
// Number of boundary circles (components of edges lying in one triangle).
long surface_boundary_count(const core::Complex& x);
// Whole-complex tests for the two excluded closed surfaces.
bool is_two_sphere_complex(const core::Complex& x);
bool is_projective_plane_complex(const core::Complex& x);

}  // namespace braidcx::decomp
