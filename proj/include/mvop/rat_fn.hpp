#ifndef MVOP_RAT_FN_HPP
#define MVOP_RAT_FN_HPP

#include "mvop/matrix_poly.hpp"

namespace mvop {

// Matrix of rational functions kept over one common scalar denominator.
// Canonical form: the monic gcd of the denominator with all numerator
// entries is divided out, and the denominator is monic.
class MatRatFn {
 public:
  MatRatFn() : den_(Rational(1)) {}
  explicit MatRatFn(MatrixPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  MatRatFn(MatrixPoly num, Poly den);

  static MatRatFn zero(int size) { return MatRatFn(MatrixPoly(size)); }

  int size() const { return num_.size(); }
  const MatrixPoly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // The polynomial content; throws when the canonical denominator is not 1.
  const MatrixPoly& as_polynomial() const;

  MatRatFn operator+(const MatRatFn& o) const;
  MatRatFn operator-(const MatRatFn& o) const;
  MatRatFn operator*(const MatRatFn& o) const;
  MatRatFn operator-() const;
  MatRatFn operator*(const Rational& s) const;
  bool operator==(const MatRatFn& o) const;  // cross multiplication

  MatRatFn derivative() const;
  Matrix eval(const Rational& t) const;  // throws on a denominator zero

 private:
  void canonicalize();
  MatrixPoly num_;
  Poly den_;
};

// Adjugate and determinant by cofactor expansion (sizes here are 3 and 4).
void adjugate(const MatrixPoly& m, MatrixPoly& adj, Poly& det);

// Exact inverse; throws on identically singular input.
MatRatFn inverse_fn(const MatRatFn& m);

}  // namespace mvop

#endif
