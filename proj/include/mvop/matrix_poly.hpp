#ifndef MVOP_MATRIX_POLY_HPP
#define MVOP_MATRIX_POLY_HPP

#include <vector>

#include "mvop/matrix.hpp"
#include "mvop/poly.hpp"

namespace mvop {

// Square-matrix-valued polynomial in t, coefficients ascending, normalized.
class MatrixPoly {
 public:
  MatrixPoly() : size_(0) {}
  explicit MatrixPoly(int size) : size_(size) {}
  MatrixPoly(int size, std::vector<Matrix> coeffs) : size_(size), c_(std::move(coeffs)) {
    normalize();
  }

  static MatrixPoly constant(const Matrix& m);
  static MatrixPoly identity(int size) { return constant(Matrix::identity(size)); }
  // c * t^deg * I and  M * t^deg
  static MatrixPoly monomial(const Matrix& m, int deg);
  static MatrixPoly scalar(int size, const Poly& p);

  int size() const { return size_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Matrix coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Matrix::zero(size_, size_);
  }
  const std::vector<Matrix>& coeffs() const { return c_; }
  Matrix leading() const { return c_.empty() ? Matrix::zero(size_, size_) : c_.back(); }

  // Entry (i,j) as a scalar polynomial.
  Poly entry(int i, int j) const;
  static MatrixPoly from_entries(int size, const std::vector<std::vector<Poly>>& e);

  MatrixPoly transpose() const;
  Matrix eval(const Rational& t) const;
  MatrixPoly derivative() const;

  MatrixPoly& operator+=(const MatrixPoly& o);
  MatrixPoly& operator-=(const MatrixPoly& o);
  MatrixPoly operator-() const;
  friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { a += b; return a; }
  friend MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { a -= b; return a; }
  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
  friend MatrixPoly operator*(const Poly& s, const MatrixPoly& a);
  friend MatrixPoly operator*(const MatrixPoly& a, const Rational& s);
  friend MatrixPoly operator*(const Rational& s, MatrixPoly a);
  bool operator==(const MatrixPoly& o) const { return size_ == o.size_ && c_ == o.c_; }

  std::string str() const;

 private:
  void normalize();
  int size_;
  std::vector<Matrix> c_;
};

}  // namespace mvop

#endif
