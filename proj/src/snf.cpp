// snf.cpp — Smith normal form and sparse integer elimination.
#include "braidcx/snf.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braidcx::linalg {

DenseMat DenseMat::identity(long n) {
  DenseMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMat DenseMat::mul(const DenseMat& other) const {
  assert(cols_ == other.rows_);
  DenseMat out(rows_, other.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Int& f = at(i, k);
      if (f == 0) continue;
      for (long j = 0; j < other.cols_; ++j) out.at(i, j) += f * other.at(k, j);
    }
  return out;
}

void DenseMat::swap_rows(long i, long j) {
  if (i == j) return;
  for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void DenseMat::swap_cols(long i, long j) {
  if (i == j) return;
  for (long r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void DenseMat::add_row(long dst, long src, const Int& f) {
  for (long c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void DenseMat::add_col(long dst, long src, const Int& f) {
  for (long r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void DenseMat::negate_row(long i) {
  for (long c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void DenseMat::negate_col(long i) {
  for (long r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

Int DenseMat::det() const {
  assert(rows_ == cols_);
  if (rows_ == 0) return 1;
  // Bareiss fraction-free elimination.
  DenseMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < rows_; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < rows_; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (long i = k + 1; i < rows_; ++i)
      for (long j = k + 1; j < cols_; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    prev = m.at(k, k);
  }
  Int d = m.at(rows_ - 1, rows_ - 1);
  return sign > 0 ? d : Int(-d);
}

std::string DenseMat::str() const {
  std::ostringstream os;
  for (long r = 0; r < rows_; ++r) {
    for (long c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    os << "\n";
  }
  return os.str();
}

namespace {

// Pivot choice: least |nonzero| entry of the working submatrix, ties broken
// by (row, col).
bool find_pivot(const DenseMat& d, long k, long* pr, long* pc) {
  bool found = false;
  Int best;
  for (long r = k; r < d.rows(); ++r)
    for (long c = k; c < d.cols(); ++c) {
      const Int& x = d.at(r, c);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        *pr = r;
        *pc = c;
      }
    }
  return found;
}

}  // namespace

SnfResult snf(const DenseMat& m) {
  SnfResult res{m, DenseMat::identity(m.rows()), DenseMat::identity(m.cols())};
  DenseMat& d = res.d;
  DenseMat& u = res.u;
  DenseMat& v = res.v;
  const long n = std::min(m.rows(), m.cols());

  // 2x2 unimodular mixes keep coefficient growth tame (a swap-and-subtract
  // Euclid here blows entries up doubly exponentially).
  auto row_combine = [&](long r1, long r2, const Int& a11, const Int& a12,
                         const Int& a21, const Int& a22) {
    for (DenseMat* mat : {&d, &u}) {
      for (long c = 0; c < mat->cols(); ++c) {
        Int x = mat->at(r1, c), y = mat->at(r2, c);
        mat->at(r1, c) = a11 * x + a12 * y;
        mat->at(r2, c) = a21 * x + a22 * y;
      }
    }
  };
  auto col_combine = [&](long c1, long c2, const Int& a11, const Int& a12,
                         const Int& a21, const Int& a22) {
    for (DenseMat* mat : {&d, &v}) {
      for (long r = 0; r < mat->rows(); ++r) {
        Int x = mat->at(r, c1), y = mat->at(r, c2);
        mat->at(r, c1) = a11 * x + a12 * y;
        mat->at(r, c2) = a21 * x + a22 * y;
      }
    }
  };

  for (long k = 0; k < n; ++k) {
    long pr, pc;
    if (!find_pivot(d, k, &pr, &pc)) break;
    d.swap_rows(k, pr); u.swap_rows(k, pr);
    d.swap_cols(k, pc); v.swap_cols(k, pc);

    // Clear column k and row k.  Plain subtractions leave the opposite side
    // untouched; only a gcd mix on the columns can re-dirty column k, and
    // each such mix replaces the pivot by a proper divisor, so this loop
    // runs O(log pivot) times.
    for (;;) {
      for (long r = k + 1; r < d.rows(); ++r) {
        const Int& b = d.at(r, k);
        if (b == 0) continue;
        const Int& a = d.at(k, k);
        if (b % a == 0) {
          Int q = b / a;
          d.add_row(r, k, -q);
          u.add_row(r, k, -q);
        } else {
          Int g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                     a.get_mpz_t(), b.get_mpz_t());
          // det [[s, t], [-b/g, a/g]] = (s*a + t*b)/g = 1
          row_combine(k, r, s, t, -b / g, a / g);
        }
      }
      bool mixed_cols = false;
      for (long c = k + 1; c < d.cols(); ++c) {
        const Int& b = d.at(k, c);
        if (b == 0) continue;
        const Int& a = d.at(k, k);
        if (b % a == 0) {
          Int q = b / a;
          d.add_col(c, k, -q);
          v.add_col(c, k, -q);
        } else {
          Int g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                     a.get_mpz_t(), b.get_mpz_t());
          col_combine(k, c, s, t, -b / g, a / g);
          mixed_cols = true;
        }
      }
      if (!mixed_cols) break;
      bool col_clean = true;
      for (long r = k + 1; r < d.rows() && col_clean; ++r)
        if (d.at(r, k) != 0) col_clean = false;
      if (col_clean) break;
    }

    // Divisibility: the pivot must divide every remaining entry.  Pulling an
    // offending row up and redoing the step drops the pivot to a proper
    // divisor each time, so the restarts are O(log pivot) too.
    bool restart = false;
    for (long r = k + 1; r < d.rows() && !restart; ++r)
      for (long c = k + 1; c < d.cols() && !restart; ++c)
        if (d.at(r, c) % d.at(k, k) != 0) {
          d.add_row(k, r, 1);
          u.add_row(k, r, 1);
          restart = true;
        }
    if (restart) { --k; continue; }

    if (d.at(k, k) < 0) { d.negate_row(k); u.negate_row(k); }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Sparse path.

void SparseIntMat::add(long r, long c, const Int& value) {
  if (value == 0) return;
  auto& row = row_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, value);
  } else {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
}

long SparseIntMat::nnz() const {
  long n = 0;
  for (const auto& r : row_) n += static_cast<long>(r.size());
  return n;
}

DenseMat SparseIntMat::to_dense() const {
  DenseMat m(rows_, cols_);
  for (long r = 0; r < rows_; ++r)
    for (const auto& [c, val] : row_[r]) m.at(r, c) = val;
  return m;
}

// Markowitz-style elimination over unit pivots, dense SNF on the residue.
struct SparseElim {
  explicit SparseElim(const SparseIntMat& m)
      : rows(m.row_), cols(m.cols_), col_rows(m.cols_) {
    for (long r = 0; r < static_cast<long>(rows.size()); ++r)
      for (const auto& [c, val] : rows[r]) col_rows[c].insert(r);
    alive_row.assign(rows.size(), true);
    alive_col.assign(cols, true);
  }

  std::vector<std::map<long, Int>> rows;
  long cols;
  std::vector<std::set<long>> col_rows;
  std::vector<bool> alive_row, alive_col;
  long unit_pivots = 0;

  bool step() {
    long best_r = -1, best_c = -1;
    long best_cost = -1;
    for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
      if (!alive_row[r]) continue;
      for (const auto& [c, val] : rows[r]) {
        if (val != 1 && val != -1) continue;
        long cost = (static_cast<long>(rows[r].size()) - 1) *
                    (static_cast<long>(col_rows[c].size()) - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
          if (cost == 0) break;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_r < 0) return false;

    const long p = best_r, q = best_c;
    const Int piv = rows[p][q];  // +-1
    // Clear column q using row p (unimodular row ops), then retire both.
    std::vector<long> users(col_rows[q].begin(), col_rows[q].end());
    for (long r : users) {
      if (r == p) continue;
      Int f = -rows[r][q] / piv;  // exact since piv is a unit
      // row[r] += f * row[p]
      for (const auto& [c, val] : rows[p]) {
        auto& cell = rows[r][c];
        bool was = cell != 0;
        cell += f * val;
        if (cell == 0) {
          rows[r].erase(c);
          if (was) col_rows[c].erase(r);
        } else if (!was) {
          col_rows[c].insert(r);
        }
      }
    }
    for (const auto& [c, val] : rows[p]) col_rows[c].erase(p);
    rows[p].clear();
    alive_row[p] = false;
    alive_col[q] = false;
    ++unit_pivots;
    return true;
  }

  ElimResult finish() {
    while (step()) {}
    // Compact the residue into a dense matrix.
    std::vector<long> live_rows, live_cols;
    std::vector<long> col_index(cols, -1);
    for (long c = 0; c < cols; ++c)
      if (alive_col[c] && !col_rows[c].empty()) {
        col_index[c] = static_cast<long>(live_cols.size());
        live_cols.push_back(c);
      }
    for (long r = 0; r < static_cast<long>(rows.size()); ++r)
      if (alive_row[r] && !rows[r].empty()) live_rows.push_back(r);

    ElimResult out;
    out.factors.assign(unit_pivots, Int(1));
    out.rank = unit_pivots;
    if (!live_rows.empty()) {
      DenseMat residue(static_cast<long>(live_rows.size()),
                       static_cast<long>(live_cols.size()));
      for (long i = 0; i < static_cast<long>(live_rows.size()); ++i)
        for (const auto& [c, val] : rows[live_rows[i]])
          residue.at(i, col_index[c]) = val;
      SnfResult s = snf(residue);
      for (long k = 0; k < std::min(s.d.rows(), s.d.cols()); ++k) {
        if (s.d.at(k, k) == 0) break;
        out.factors.push_back(s.d.at(k, k));
        ++out.rank;
      }
    }
    // Unit pivots are 1s; dense factors keep the chain property among
    // themselves, and 1 divides everything, so the full list is a chain.
    std::sort(out.factors.begin(), out.factors.end());
    return out;
  }
};

ElimResult eliminate(const SparseIntMat& m) {
  SparseElim e(m);
  return e.finish();
}

long sparse_rank(const SparseIntMat& m) { return eliminate(m).rank; }

// ---------------------------------------------------------------------------
// Abelian invariants.

std::string AbelianInvariants::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    if (free_rank == 1)
      os << "Z";
    else
      os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " (+) ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

AbelianInvariants AbelianInvariants::plus(const AbelianInvariants& other) const {
  AbelianInvariants out;
  out.free_rank = free_rank + other.free_rank;
  if (torsion.empty()) {
    out.torsion = other.torsion;
    return out;
  }
  if (other.torsion.empty()) {
    out.torsion = torsion;
    return out;
  }
  // Renormalise the union of the two chains via a diagonal SNF.
  std::vector<Int> all = torsion;
  all.insert(all.end(), other.torsion.begin(), other.torsion.end());
  DenseMat diag(static_cast<long>(all.size()), static_cast<long>(all.size()));
  for (long i = 0; i < static_cast<long>(all.size()); ++i) diag.at(i, i) = all[i];
  SnfResult s = snf(diag);
  for (long i = 0; i < s.d.rows(); ++i)
    if (s.d.at(i, i) > 1) out.torsion.push_back(s.d.at(i, i));
  return out;
}

AbelianInvariants cokernel_invariants(const SparseIntMat& m, long ambient) {
  if (m.rows() != ambient)
    throw std::invalid_argument("cokernel_invariants: ambient mismatch");
  ElimResult e = eliminate(m);
  AbelianInvariants out;
  out.free_rank = ambient - e.rank;
  for (const Int& f : e.factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

AbelianInvariants h1_from_boundaries(const SparseIntMat& d1, const SparseIntMat& d2) {
  if (d1.cols() != d2.rows())
    throw std::invalid_argument("h1_from_boundaries: chain size mismatch");
  long r1 = sparse_rank(d1);
  ElimResult e2 = eliminate(d2);
  AbelianInvariants out;
  out.free_rank = d1.cols() - r1 - e2.rank;
  if (out.free_rank < 0)
    throw std::logic_error("h1_from_boundaries: negative rank (d2*d1 != 0?)");
  for (const Int& f : e2.factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

}  // namespace braidcx::linalg
