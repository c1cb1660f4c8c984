// homology.hpp — first homology of braid groups, folded over decompositions.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidcx/complex.hpp"
#include "braidcx/decomp.hpp"
#include "braidcx/reduce.hpp"
#include "braidcx/snf.hpp"

namespace braidcx::homology {

using linalg::AbelianInvariants;
using reduce::excluded_case;
using reduce::guard_failed;

// --- folding rules ----------------------------------------------------------

// H1 of the braid group of one elementary piece.  A tree star with k legs
// gives Z^{r(n,k,k)}, a circle gives Z, and a two-dimensional piece gives
// H1 of the piece plus Z when planar or plus Z_2 when not.  The sphere and
// the projective plane are refused (excluded_case); so is n < 2 (at n = 1
// the answer is h1_space of the piece itself).
AbelianInvariants h1_elementary(const core::Complex& x,
                                const decomp::ElementaryInfo& info, long n);

// Fold across a one-vertex cut of valency k into m parts:
//   Z^{r(n,k,m)} (+) parts[0] (+) ... (+) parts[m-1].
// m < 2 is not a cut and throws.
AbelianInvariants split_one_cut(const std::vector<AbelianInvariants>& parts,
                                long n, long k, long m);

// Fold across a two-vertex cut into m modified parts: the unique A with
//   A (+) Z^m  =  Z^{C(m,2)} (+) parts[0] (+) ... (+) parts[m-1].
// Torsion passes through; the free rank of the right side drops by m.  A
// right side of free rank below m signals an upstream bug and throws.
AbelianInvariants split_two_cut(const std::vector<AbelianInvariants>& parts,
                                long m);

// H1(B_n) of a simple vertex-3-connected complex: H1(X) (+) Z when the
// complex is planar, H1(X) (+) Z_2 otherwise.  The value does not depend
// on n beyond the requirement n >= 2.
AbelianInvariants h1_three_connected(const core::Complex& x, long n);

// Contribution of closing k boundary legs onto a fresh cone vertex: the
// stable letters split off a free summand of rank k - 1.
AbelianInvariants h1_closure_combine(const AbelianInvariants& h1_x, long k);

// --- certificates -------------------------------------------------------------

// One folding step.  rule is one of: space, biconn, smoothing, one-cut,
// two-cut, leaf-trivial, leaf-circle, leaf-tree-star, leaf-surface,
// leaf-branched, leaf-block.
struct CertNode {
  std::string rule;
  long n = 0;          // braid index in effect at this node
  long k = 0;          // cut valency / star legs, when meaningful
  long m = 0;          // number of parts, when meaningful
  long r = 0;          // free rank contributed by the rule itself
  std::string detail;  // cut vertices, leaf classification, planarity note
  AbelianInvariants value;
  std::vector<CertNode> children;

  std::string str(int indent = 0) const;
};

// Audit trail for one h1_braid run: which rule fired where, with which
// parameters, and the value each step produced.
struct H1Certificate {
  std::uint64_t fingerprint = 0;  // of the original input complex
  long n = 0;
  std::string tree;  // printed decomposition tree of the prepared complex
  CertNode top;
  AbelianInvariants result;

  std::string str() const;
  std::string json_string() const;

  // Refold every arithmetic step from the recorded children and compare
  // against the recorded values; true iff everything reproduces, including
  // the final result.  Leaves evaluated from a complex (surface, branched,
  // block, space) are taken at their recorded word.
  bool recheck() const;
};

// Full pipeline: guards, simplification, strand preparation, decomposition,
// fold.  Throws guard_failed on unusable input (empty, disconnected, n < 1)
// and excluded_case for the sphere, the projective plane, and solid balls.
// For a graph without an articulation vertex and n > 2 the fold runs at two
// strands and the certificate records the reduction.
H1Certificate h1_braid(const core::Complex& x, long n);

}  // namespace braidcx::homology
