#include "sapphire/smith.hpp"

namespace sapphire {

namespace {

// Row/column elementary operations, mirrored onto the transform matrices.
struct Worker {
  IntMatrix M, U, Uinv, V;

  explicit Worker(const IntMatrix& m) : M(m) {
    U = IntMatrix::Identity(m.rows(), m.rows());
    Uinv = IntMatrix::Identity(m.rows(), m.rows());
    V = IntMatrix::Identity(m.cols(), m.cols());
  }

  void row_swap(long i, long k) {
    if (i == k) return;
    M.row(i).swap(M.row(k));
    U.row(i).swap(U.row(k));
    Uinv.col(i).swap(Uinv.col(k));
  }
  void col_swap(long j, long k) {
    if (j == k) return;
    M.col(j).swap(M.col(k));
    V.col(j).swap(V.col(k));
  }
  // row i += c * row k
  void row_add(long i, long k, const Int& c) {
    if (c.is_zero()) return;
    M.row(i) += c * M.row(k);
    U.row(i) += c * U.row(k);
    Uinv.col(k) -= c * Uinv.col(i);
  }
  // col j += c * col k
  void col_add(long j, long k, const Int& c) {
    if (c.is_zero()) return;
    M.col(j) += c * M.col(k);
    V.col(j) += c * V.col(k);
  }
  void row_negate(long i) {
    M.row(i) = -M.row(i);
    U.row(i) = -U.row(i);
    Uinv.col(i) = -Uinv.col(i);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& Min) {
  Worker w(Min);
  long m = Min.rows(), n = Min.cols();
  long p = 0;
  while (p < m && p < n) {
    // Pivot: nonzero entry of minimal absolute value in the trailing block.
    long pi = -1, pj = -1;
    Int best = 0;
    for (long i = p; i < m; ++i)
      for (long j = p; j < n; ++j) {
        if (w.M(i, j).is_zero()) continue;
        Int a = abs(w.M(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    w.row_swap(p, pi);
    w.col_swap(p, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (long i = p + 1; i < m; ++i) {
        Int q = w.M(i, p) / w.M(p, p);
        w.row_add(i, p, -q);
        if (!w.M(i, p).is_zero()) {
          // Remainder is strictly smaller; make it the pivot and restart.
          w.row_swap(p, i);
          clean = false;
        }
      }
      for (long j = p + 1; j < n; ++j) {
        Int q = w.M(p, j) / w.M(p, p);
        w.col_add(j, p, -q);
        if (!w.M(p, j).is_zero()) {
          w.col_swap(p, j);
          clean = false;
        }
      }
    }
    // Divisibility: pivot must divide the whole trailing block.
    bool redo = false;
    for (long i = p + 1; i < m && !redo; ++i)
      for (long j = p + 1; j < n && !redo; ++j)
        if (!(w.M(i, j) % w.M(p, p)).is_zero()) {
          w.row_add(p, i, 1);
          redo = true;
        }
    if (redo) continue;  // re-run elimination at the same pivot index
    if (w.M(p, p).sign() < 0) w.row_negate(p);
    ++p;
  }

  SmithResult res;
  res.rank = p;
  res.U = std::move(w.U);
  res.Uinv = std::move(w.Uinv);
  res.V = std::move(w.V);
  res.D = std::move(w.M);
  return res;
}

IntMatrix kernel_basis(const IntMatrix& M) {
  SmithResult s = smith_normal_form(M);
  long n = M.cols();
  IntMatrix K(n, n - s.rank);
  for (long j = s.rank; j < n; ++j) K.col(j - s.rank) = s.V.col(j);
  return K;
}

std::optional<IntVector> solve(const IntMatrix& M, const IntVector& b) {
  SmithResult s = smith_normal_form(M);
  IntVector c = s.U * b;
  IntVector y = IntVector::Zero(M.cols());
  for (long i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (!(c(i) % s.D(i, i)).is_zero()) return std::nullopt;
      y(i) = c(i) / s.D(i, i);
    } else if (!c(i).is_zero()) {
      return std::nullopt;
    }
  }
  return IntVector(s.V * y);
}

IntMatrix lattice_basis(const IntMatrix& M) {
  SmithResult s = smith_normal_form(M);
  IntMatrix B(M.rows(), s.rank);
  for (long j = 0; j < s.rank; ++j) B.col(j) = s.D(j, j) * s.Uinv.col(j);
  return B;
}

}  // namespace sapphire
