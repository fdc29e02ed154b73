#ifndef MVOP_LINALG_HPP
#define MVOP_LINALG_HPP

#include <optional>
#include <vector>

#include "mvop/matrix.hpp"
#include "mvop/rational.hpp"

namespace mvop {

// Engine selection for the exact elimination kernels.
//   Reference  - serial fraction-free (Bareiss) elimination
//   Parallel   - same elimination with OpenMP row updates
//   Modular    - multi-modular RREF + CRT + rational reconstruction; every
//                result is verified exactly against the input, so the output
//                is unconditionally correct and identical to Reference
//   Auto       - Modular for large systems, Parallel otherwise
enum class LinEngine { Reference, Parallel, Modular, Auto };

// Canonical reduced description of ker(A).  basis[k] is the nullspace vector
// attached to free_cols[k]: it has a 1 there, zeros at the other free
// columns, and the negated RREF entries at the pivot columns.  This is the
// reduced-echelon normal form, so all engines produce identical output.
struct NullspaceResult {
  int cols = 0;
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  std::vector<std::vector<Rational>> basis;

  int rank() const { return static_cast<int>(pivot_cols.size()); }
  int dim() const { return static_cast<int>(free_cols.size()); }
};

struct SolveOutcome {
  bool consistent = false;
  std::vector<Rational> x;  // one exact solution when consistent
  int kernel_dim = 0;
};

NullspaceResult nullspace(const std::vector<std::vector<Rational>>& rows, int cols,
                          LinEngine engine = LinEngine::Auto);

SolveOutcome solve_linear(const std::vector<std::vector<Rational>>& rows, int cols,
                          const std::vector<Rational>& rhs,
                          LinEngine engine = LinEngine::Auto);

// Matrix-shaped convenience wrappers.
NullspaceResult nullspace(const Matrix& a, LinEngine engine = LinEngine::Auto);
std::optional<std::vector<Rational>> solve_exact(const Matrix& a, const std::vector<Rational>& b,
                                                 LinEngine engine = LinEngine::Auto);
int rank(const Matrix& a, LinEngine engine = LinEngine::Auto);

namespace detail {
// Rows scaled to coprime integer form; shared by the elimination engines.
struct IntRows {
  int cols = 0;
  std::vector<std::vector<Integer>> rows;
  IntRows(const std::vector<std::vector<Rational>>& qrows, int ncols);
};

NullspaceResult nullspace_fraction_free(const IntRows& m, bool parallel);
NullspaceResult nullspace_modular(const IntRows& m);
}  // namespace detail

}  // namespace mvop

#endif
