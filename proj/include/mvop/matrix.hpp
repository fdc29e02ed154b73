#ifndef MVOP_MATRIX_HPP
#define MVOP_MATRIX_HPP

#include <string>
#include <vector>

#include "mvop/poly.hpp"
#include "mvop/rational.hpp"

namespace mvop {

// Dense matrix of exact rationals, row-major.  Most of the library works
// with square matrices; the linear solvers accept rectangular ones.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  // Row-major initializer on longs, for literals in constructors and tests.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator-() const;
  friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
  friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator*(Matrix a, const Rational& s) { a *= s; return a; }
  friend Matrix operator*(const Rational& s, Matrix a) { a *= s; return a; }

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Kronecker product; with row-major vec, vec(A P B^T) = (A (x) B) vec(P).
Matrix kron(const Matrix& a, const Matrix& b);

// Row-major stacking of a matrix into a column.
std::vector<Rational> vec(const Matrix& m);
Matrix unvec(const std::vector<Rational>& v, int rows, int cols);

// Exact determinant (fraction-free elimination).
Rational determinant(Matrix m);

// Exact inverse; throws ComputeError when singular.
Matrix inverse(const Matrix& m);

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion.
Poly char_poly(const Matrix& m);

// Resultant of two polynomials (Sylvester determinant); nonzero iff they
// share no root.
Rational resultant(const Poly& a, const Poly& b);

}  // namespace mvop

#endif
