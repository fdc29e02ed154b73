#include "mvop/linalg.hpp"

#include <omp.h>

#include <algorithm>

namespace mvop {
namespace detail {

IntRows::IntRows(const std::vector<std::vector<Rational>>& qrows, int ncols) : cols(ncols) {
  rows.reserve(qrows.size());
  Integer den, g;
  for (const auto& qr : qrows) {
    if (static_cast<int>(qr.size()) != ncols) throw ComputeError("ragged row in linear system");
    den = 1;
    for (const auto& q : qr) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> row(ncols);
    g = 0;
    for (int j = 0; j < ncols; ++j) {
      row[j] = qr[j].get_num() * (den / qr[j].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    }
    if (g > 1)
      for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    bool all_zero = std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
    if (!all_zero) rows.push_back(std::move(row));
  }
}

namespace {

// Builds the canonical nullspace description from a fully reduced RREF given
// as rational rows (one per pivot).
NullspaceResult assemble_nullspace(int cols, const std::vector<int>& pivots,
                                   const std::vector<std::vector<Rational>>& rref_rows) {
  NullspaceResult out;
  out.cols = cols;
  out.pivot_cols = pivots;
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  for (int j = 0; j < cols; ++j)
    if (!is_pivot[j]) out.free_cols.push_back(j);
  out.basis.reserve(out.free_cols.size());
  for (int f : out.free_cols) {
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      if (pivots[i] < f) v[pivots[i]] = -rref_rows[i][f];
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace

// Fraction-free (Bareiss) forward elimination with first-nonzero pivoting,
// then exact back substitution to the reduced echelon form.
NullspaceResult nullspace_fraction_free(const IntRows& m, bool parallel) {
  int nrows = static_cast<int>(m.rows.size());
  int cols = m.cols;
  std::vector<std::vector<Integer>> a = m.rows;
  std::vector<int> pivots;
  Integer prev(1);
  int pr = 0;
  for (int c = 0; c < cols && pr < nrows; ++c) {
    int sel = -1;
    for (int r = pr; r < nrows; ++r)
      if (a[r][c] != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pr) a[sel].swap(a[pr]);
    const Integer p = a[pr][c];
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int r = pr + 1; r < nrows; ++r) {
      Integer t;
      const Integer f = a[r][c];
      for (int j = c; j < cols; ++j) {
        t = p * a[r][j] - f * a[pr][j];
        mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      for (int j = 0; j < c; ++j) a[r][j] = 0;  // stays zero; keep tidy
    }
    prev = p;
    pivots.push_back(c);
    ++pr;
  }
  int rk = static_cast<int>(pivots.size());
  // Back substitution over Q on the surviving rows.
  std::vector<std::vector<Rational>> rows(rk, std::vector<Rational>(cols, Rational(0)));
  for (int i = 0; i < rk; ++i) {
    Rational inv = Rational(1) / Rational(a[i][pivots[i]]);
    for (int j = pivots[i]; j < cols; ++j) rows[i][j] = Rational(a[i][j]) * inv;
  }
  for (int i = rk - 1; i >= 0; --i)
    for (int u = 0; u < i; ++u) {
      const Rational f = rows[u][pivots[i]];
      if (f == 0) continue;
      for (int j = pivots[i]; j < cols; ++j) rows[u][j] -= f * rows[i][j];
    }
  return assemble_nullspace(cols, pivots, rows);
}

}  // namespace detail

NullspaceResult nullspace(const std::vector<std::vector<Rational>>& rows, int cols,
                          LinEngine engine) {
  detail::IntRows m(rows, cols);
  if (engine == LinEngine::Auto)
    engine = (static_cast<long>(m.rows.size()) * cols > 20000 || cols > 96)
                 ? LinEngine::Modular
                 : LinEngine::Parallel;
  switch (engine) {
    case LinEngine::Reference: return detail::nullspace_fraction_free(m, false);
    case LinEngine::Parallel: return detail::nullspace_fraction_free(m, true);
    default: return detail::nullspace_modular(m);
  }
}

SolveOutcome solve_linear(const std::vector<std::vector<Rational>>& rows, int cols,
                          const std::vector<Rational>& rhs, LinEngine engine) {
  if (rows.size() != rhs.size()) throw ComputeError("rhs length mismatch");
  std::vector<std::vector<Rational>> aug(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    aug[i] = rows[i];
    aug[i].push_back(-rhs[i]);
  }
  NullspaceResult ns = nullspace(aug, cols + 1, engine);
  SolveOutcome out;
  // The system is consistent iff the appended column is free; the basis
  // vector attached to it carries a particular solution.
  for (size_t k = 0; k < ns.free_cols.size(); ++k) {
    if (ns.free_cols[k] == cols) {
      out.consistent = true;
      out.x.assign(ns.basis[k].begin(), ns.basis[k].begin() + cols);
      out.kernel_dim = ns.dim() - 1;
      return out;
    }
  }
  out.consistent = false;
  out.kernel_dim = ns.dim();
  return out;
}

NullspaceResult nullspace(const Matrix& a, LinEngine engine) {
  std::vector<std::vector<Rational>> rows(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    rows[i].resize(a.cols());
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
  }
  return nullspace(rows, a.cols(), engine);
}

std::optional<std::vector<Rational>> solve_exact(const Matrix& a, const std::vector<Rational>& b,
                                                 LinEngine engine) {
  std::vector<std::vector<Rational>> rows(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    rows[i].resize(a.cols());
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
  }
  SolveOutcome s = solve_linear(rows, a.cols(), b, engine);
  if (!s.consistent) return std::nullopt;
  return s.x;
}

int rank(const Matrix& a, LinEngine engine) { return nullspace(a, engine).rank(); }

}  // namespace mvop
