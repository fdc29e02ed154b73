#ifndef MVOP_DIFFOP_HPP
#define MVOP_DIFFOP_HPP

#include <optional>
#include <string>
#include <vector>

#include "mvop/rat_fn.hpp"

namespace mvop {

// Matrix differential operator sum_j F_j(t) d^j/dt^j acting from the left on
// matrix-valued functions.  Coefficients are matrices of rational functions;
// operators in hypergeometric form have polynomial F_j with deg F_j <= j.
class MatDiffOp {
 public:
  MatDiffOp() : size_(0) {}
  explicit MatDiffOp(int size) : size_(size) {}
  MatDiffOp(int size, std::vector<MatRatFn> coeffs);

  static MatDiffOp identity(int size);
  static MatDiffOp derivative(int size, int order = 1);
  static MatDiffOp from_polys(int size, const std::vector<MatrixPoly>& coeffs);

  int size() const { return size_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  MatRatFn coeff(int j) const {
    return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[j] : MatRatFn::zero(size_);
  }
  // Polynomial coefficient list; throws if any coefficient has a denominator.
  std::vector<MatrixPoly> poly_coeffs() const;

  MatDiffOp operator+(const MatDiffOp& o) const;
  MatDiffOp operator-(const MatDiffOp& o) const;
  MatDiffOp operator*(const Rational& s) const;
  friend MatDiffOp operator*(const Rational& s, const MatDiffOp& op) { return op * s; }
  bool operator==(const MatDiffOp& o) const;

  std::string describe() const;

 private:
  void normalize();
  int size_;
  std::vector<MatRatFn> c_;  // by derivative order
};

// sum_j F_j(t) P^(j)(t); polynomial result for hypergeometric operators.
MatRatFn apply(const MatDiffOp& op, const MatrixPoly& p);
MatrixPoly apply_poly(const MatDiffOp& op, const MatrixPoly& p);

// Leibniz-expanded composition: apply(compose(a,b), p) = apply(a, apply(b,p)).
MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b);

MatDiffOp commutator(const MatDiffOp& a, const MatDiffOp& b);

// The operator F -> psi^{-1} op(psi F); psi must have nonzero determinant.
MatDiffOp conjugate_by(const MatDiffOp& op, const MatrixPoly& psi);
MatDiffOp conjugate_by(const MatDiffOp& op, const MatRatFn& psi);

struct HypergeometricCheck {
  bool ok = true;
  int violating_order = -1;
  std::string reason;
};
HypergeometricCheck is_hypergeometric_form(const MatDiffOp& op);

// For a second-order operator t(1-t) d^2 + (X - tU) d + V with V constant:
// the triangular eigenvalue matrix -n(n-1)I - nU + V attached to degree n.
Matrix gamma_n(const MatDiffOp& op, long n);

}  // namespace mvop

#endif
