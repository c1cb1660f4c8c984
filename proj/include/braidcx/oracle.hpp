// oracle.hpp — brute-force ground truth via discrete configuration spaces.
//
// For a graph G and token count n, the discrete configuration space is the
// cube complex whose d-cells are the n-element sets of vertices and edges of
// G, exactly d of them edges, with pairwise disjoint closures.  With every
// edge of the input subdivided into n+1 edges this has the homotopy type of
// the configuration space of n unordered points, so its H1 is an oracle for
// everything the rest of the library computes by structure theory.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidcx/complex.hpp"
#include "braidcx/presentation.hpp"
#include "braidcx/snf.hpp"

namespace braidcx::oracle {

struct GraphModel {
  std::vector<std::string> names;           // vertex -> display name
  std::vector<std::pair<long, long>> edges; // u < v, sorted, no duplicates
  long nv() const { return static_cast<long>(names.size()); }
  long ne() const { return static_cast<long>(edges.size()); }

  // Requires dim <= 1 and connectedness.  Vertices are numbered in label
  // order so the model is deterministic.
  static GraphModel from_complex(const core::Complex& x);
};

// Every edge becomes a path of n+1 edges (n fresh vertices per edge).
GraphModel subdivide_for(const GraphModel& g, long n);

class CubeComplex {
 public:
  long n = 0;  // tokens
  GraphModel graph;
  // cells[d]: sorted lists of item ids (0..nv-1 vertices, then nv+e edges),
  // in lexicographic order.  Exactly d of the n items in a d-cell are edges.
  std::vector<std::vector<std::vector<long>>> cells;

  std::size_t total_cells() const;
  long count(long d) const;
  long euler() const;
  long dim() const { return static_cast<long>(cells.size()) - 1; }

  long cell_index(long d, const std::vector<long>& cell) const;  // -1 if absent
  linalg::SparseIntMat boundary(long d) const;  // cells[d-1] x cells[d]

  long components() const;  // of the 0/1-skeleton

  // Corner of a cell: every edge item replaced by one endpoint, tail (=false)
  // or head (=true) per flags in edge-sorted order.
  std::vector<long> corner(const std::vector<long>& cell,
                           const std::vector<bool>& heads) const;
};

// Enumerates all cells and verifies boundary-squared = 0.  Throws if the
// total cell count would exceed cell_limit.
CubeComplex build_udc(const GraphModel& g, long n,
                      std::size_t cell_limit = 1000000);

linalg::AbelianInvariants cube_h1(const CubeComplex& c);

// Spanning-tree presentation of the fundamental group of the 2-skeleton.
// Requires a connected complex.
presentation::GroupPresentation cube_pi1(const CubeComplex& c);

// Convenience loop: complex -> graph -> subdivide -> cube complex -> H1.
// The complex must be a connected graph (dim <= 1).
linalg::AbelianInvariants braid_h1_oracle(const core::Complex& x, long n,
                                          std::size_t cell_limit = 1000000);

}  // namespace braidcx::oracle
