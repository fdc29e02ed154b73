#ifndef MVOP_HYPERGEOM_HPP
#define MVOP_HYPERGEOM_HPP

#include <string>
#include <vector>

#include "mvop/eigensolver.hpp"
#include "mvop/families.hpp"

namespace mvop {

// Vectorized form of the eigenvalue problem for one degree n:
//   t(1-t) v'' + (C - t U~) v' - T~ v = 0,
// where C = X (x) I, U~ = U (x) I and T~ is diagonal.  Construction fails
// loudly if the assembled diagonal does not reproduce the family's tabulated
// entry list (that list is the convention anchor for the vec bookkeeping).
struct KronSystem {
  int size;  // N^2
  long n;
  Matrix c, u_t;
  std::vector<Rational> t_diag;
};

KronSystem build_kron_system(const FamilyBundle& fb, long n);

// Exact polynomial coefficients 0..terms-1 of the series solution with value
// v0 at t = 0, by the rational three-term recurrence
//   (i+1)(C + iI) v_{i+1} = (T~ + i U~ + i(i-1)I) v_i.
std::vector<std::vector<Rational>> hg_series_apply(const KronSystem& sys,
                                                   const std::vector<Rational>& v0, int terms);

struct AnnihilationResult {
  bool ok = true;
  long failed_n = -1;
  int failed_term = -1;
};
// Series on vec(P_n^*(0)) truncates: coefficients n+1..n+extra vanish.
AnnihilationResult annihilation_check(const FamilyBundle& fb, const PolyFamily& hyp_family,
                                      long n, int extra);

// High-precision factorization U~ = I + A + B, T~ = AB with A block upper
// triangular and diagonal blocks; entries are quadratic irrationals, handled
// in MPFR at the requested precision.
struct ABFactorization {
  int prec_bits = 0;
  std::vector<std::vector<std::string>> a, b;  // decimal text of the entries
  std::vector<std::string> branch;             // per diagonal slot/block choice
  std::string residual_sum;                    // ||A + B + I - U~||_inf
  std::string residual_prod;                   // ||AB - T~||_inf
  double log10_sum = 0, log10_prod = 0;
  // log10 of ||(A+iI)(B+iI) - (T~ + i U~ + i(i-1)I)||_inf for i = 0..5
  std::vector<double> log10_shifted;
  bool residual_below(double exp10) const;  // both residuals < 10^exp10
  bool a_block_zero(int bi, int bj, int nblk) const;
};

ABFactorization solve_ab_factorization(const KronSystem& sys, int prec_bits);

}  // namespace mvop

#endif
