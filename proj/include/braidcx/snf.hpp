// snf.hpp — exact integer matrices, Smith normal form, abelian invariants.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace braidcx::linalg {

using Int = mpz_class;

// Dense integer matrix, row-major.  Sizes here stay small (presentation
// abelianizations, SNF property tests); the big boundary matrices go through
// SparseIntMat instead.
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static DenseMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Int& at(long r, long c) { return a_[r * cols_ + c]; }
  const Int& at(long r, long c) const { return a_[r * cols_ + c]; }

  DenseMat mul(const DenseMat& other) const;
  bool operator==(const DenseMat& other) const = default;

  void swap_rows(long i, long j);
  void swap_cols(long i, long j);
  void add_row(long dst, long src, const Int& f);  // row[dst] += f * row[src]
  void add_col(long dst, long src, const Int& f);
  void negate_row(long i);
  void negate_col(long i);

  // Exact determinant (Bareiss).  Square matrices only; used by tests to
  // certify that transform matrices are unimodular.
  Int det() const;

  std::string str() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Smith normal form with transforms: d = u * m * v, u and v unimodular, d
// diagonal with d[0,0] | d[1,1] | ... and nonnegative entries.
struct SnfResult {
  DenseMat d, u, v;
};
SnfResult snf(const DenseMat& m);

// Row-major sparse matrix for boundary operators.  Only rank and invariant
// factors are needed on this path, so no transforms are tracked.
class SparseIntMat {
 public:
  SparseIntMat(long rows, long cols) : rows_(rows), cols_(cols), row_(rows) {}
  long rows() const { return rows_; }
  long cols() const { return cols_; }
  void add(long r, long c, const Int& value);  // accumulates; drops zeros
  long nnz() const;

  DenseMat to_dense() const;

 private:
  friend struct SparseElim;
  long rows_, cols_;
  std::vector<std::map<long, Int>> row_;
};

// Rank plus the full invariant-factor list (ones included) of a sparse
// matrix.  Unit pivots are eliminated Markowitz-style first; whatever
// residual survives without a +-1 entry is finished by dense SNF.
struct ElimResult {
  long rank = 0;
  std::vector<Int> factors;  // size == rank, divisibility chain
};
ElimResult eliminate(const SparseIntMat& m);

long sparse_rank(const SparseIntMat& m);

// Isomorphism type of a finitely generated abelian group:
//   Z^free_rank  (+)  Z/torsion[0] (+) Z/torsion[1] ...
// torsion entries are > 1 and form a divisibility chain.
struct AbelianInvariants {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianInvariants& other) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;

  // Direct sum, normalising the combined torsion back to a divisor chain.
  AbelianInvariants plus(const AbelianInvariants& other) const;
};

// Invariants of  Z^ambient / column-span(m)   (m read as a map into Z^ambient).
AbelianInvariants cokernel_invariants(const SparseIntMat& m, long ambient);

// H1 of a chain complex  C2 --d2--> C1 --d1--> C0  given by boundary
// matrices (d1: c0 x c1, d2: c1 x c2):
//   free rank = (c1 - rank d1) - rank d2, torsion = invariant factors of d2.
AbelianInvariants h1_from_boundaries(const SparseIntMat& d1, const SparseIntMat& d2);

}  // namespace braidcx::linalg
