#ifndef MVOP_FAMILIES_UTIL_HPP
#define MVOP_FAMILIES_UTIL_HPP

#include "mvop/families.hpp"

namespace mvop {
namespace detail {

// t(1-t) F2 d^2 + (C1 - t L1) d + C0 with constant matrices.
MatDiffOp second_order_op(const Matrix& c1, const Matrix& l1, const Matrix& c0);

// -n^2 - lin*n + cst as a polynomial in n.
inline Poly n_quad(const Rational& lin, const Rational& cst) {
  return Poly(std::vector<Rational>{cst, -lin, Rational(-1)});
}

// Pairwise-distinct eigenvalue lists and disjoint spectra across degrees.
void check_genericity(const std::vector<Poly>& diag_entries, long bound);

Matrix one_step_pstar_zero(const Rational& a, const Rational& b, const Rational& k, long n);
Matrix one_step_closed_form_coeff(const Rational& a, const Rational& b, const Rational& k, long n,
                               long l);
std::vector<Rational> one_step_coef_values(const Rational& a, const Rational& b,
                                           const Rational& k);
Matrix two_step_pstar_zero(const Rational& a, const Rational& b, const Rational& k1,
                           const Rational& k2, long n);
Matrix two_step_closed_form_coeff(const Rational& a, const Rational& b, const Rational& k1,
                               const Rational& k2, long n, long l);

}  // namespace detail
}  // namespace mvop

#endif
