#ifndef MVOP_EIGENSOLVER_HPP
#define MVOP_EIGENSOLVER_HPP

#include <string>
#include <vector>

#include "mvop/families.hpp"
#include "mvop/linalg.hpp"

namespace mvop {

enum class Normalization { Raw, ClosedForm, PStarZero, Monic };

// A run of polynomials P_0..P_N (stored in the adjoint convention: these are
// the eigenfunction factors with op P_n^* = P_n^* Lambda_n).
struct PolyFamily {
  Normalization normalization;
  std::vector<MatrixPoly> pstar;  // index n

  const MatrixPoly& at(long n) const { return pstar.at(static_cast<size_t>(n)); }
  long count() const { return static_cast<long>(pstar.size()); }
};

// Unique X with G X - X L = R, via the vectorized exact solve; requires
// disjoint spectra (checked through the resultant of the characteristic
// polynomials).
Matrix sylvester_solve(const Matrix& g, const Matrix& l, const Matrix& r);

// Generates P_0..P_N for the named operator ("d1" for the conjugated family,
// "hyp" for the diagonal-constant-term one) by the descending coefficient
// recursion.  Column scalings follow the normalization tag.
PolyFamily generate_family(const FamilyBundle& fb, const std::string& opname, long nmax,
                           Normalization normalization);

// Unique monic orthogonal family for the weight, by exact Gram-Schmidt on
// the normalized moments.
PolyFamily monic_orthogonal(const JacobiMatrixWeight& w, long nmax);

struct EigenCheck {
  bool ok = true;
  long failed_n = -1;
  MatRatFn residual;
};
// Exact check of op P_n^* = P_n^* Lambda(n) for every generated n.
EigenCheck verify_eigen_equation(const PolyFamily& fam, const MatDiffOp& op,
                                 const EigenSeq& lambda);

}  // namespace mvop

#endif
