#include "mvop/matrix_poly.hpp"

#include <sstream>

namespace mvop {

void MatrixPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  for (const auto& m : c_)
    if (m.rows() != size_ || m.cols() != size_) throw ComputeError("matrix poly size mismatch");
}

MatrixPoly MatrixPoly::constant(const Matrix& m) {
  if (!m.is_square()) throw ComputeError("matrix poly needs square coefficients");
  return MatrixPoly(m.rows(), {m});
}

MatrixPoly MatrixPoly::monomial(const Matrix& m, int deg) {
  std::vector<Matrix> c(deg + 1, Matrix::zero(m.rows(), m.cols()));
  c[deg] = m;
  return MatrixPoly(m.rows(), std::move(c));
}

MatrixPoly MatrixPoly::scalar(int size, const Poly& p) {
  std::vector<Matrix> c;
  c.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i) * Matrix::identity(size));
  return MatrixPoly(size, std::move(c));
}

Poly MatrixPoly::entry(int i, int j) const {
  std::vector<Rational> v(c_.size());
  for (size_t d = 0; d < c_.size(); ++d) v[d] = c_[d].at(i, j);
  return Poly(std::move(v));
}

MatrixPoly MatrixPoly::from_entries(int size, const std::vector<std::vector<Poly>>& e) {
  int deg = -1;
  for (const auto& row : e)
    for (const auto& p : row) deg = std::max(deg, p.degree());
  std::vector<Matrix> c(deg + 1, Matrix::zero(size, size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int d = 0; d <= e[i][j].degree(); ++d) c[d].at(i, j) = e[i][j].coeff(d);
  return MatrixPoly(size, std::move(c));
}

MatrixPoly MatrixPoly::transpose() const {
  std::vector<Matrix> c;
  c.reserve(c_.size());
  for (const auto& m : c_) c.push_back(m.transpose());
  return MatrixPoly(size_, std::move(c));
}

Matrix MatrixPoly::eval(const Rational& t) const {
  Matrix acc = Matrix::zero(size_, size_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

MatrixPoly MatrixPoly::derivative() const {
  if (c_.size() <= 1) return MatrixPoly(size_);
  std::vector<Matrix> c;
  c.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Rational(static_cast<long>(i)));
  return MatrixPoly(size_, std::move(c));
}

MatrixPoly& MatrixPoly::operator+=(const MatrixPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  if (size_ != o.size_) throw ComputeError("matrix poly size mismatch in +");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Matrix::zero(size_, size_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

MatrixPoly& MatrixPoly::operator-=(const MatrixPoly& o) {
  *this += -o;
  return *this;
}

MatrixPoly MatrixPoly::operator-() const {
  MatrixPoly r = *this;
  for (auto& m : r.c_) m = -m;
  return r;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
  if (a.is_zero() || b.is_zero()) return MatrixPoly(a.size_ ? a.size_ : b.size_);
  if (a.size_ != b.size_) throw ComputeError("matrix poly size mismatch in *");
  std::vector<Matrix> c(a.c_.size() + b.c_.size() - 1, Matrix::zero(a.size_, a.size_));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return MatrixPoly(a.size_, std::move(c));
}

MatrixPoly operator*(const Poly& s, const MatrixPoly& a) {
  if (s.is_zero() || a.is_zero()) return MatrixPoly(a.size_);
  std::vector<Matrix> c(s.degree() + a.c_.size(), Matrix::zero(a.size_, a.size_));
  for (int i = 0; i <= s.degree(); ++i) {
    if (s.coeff(i) == 0) continue;
    for (size_t j = 0; j < a.c_.size(); ++j) c[i + j] += a.c_[j] * s.coeff(i);
  }
  return MatrixPoly(a.size_, std::move(c));
}

MatrixPoly operator*(const MatrixPoly& a, const Rational& s) {
  MatrixPoly r = a;
  for (auto& m : r.c_) m *= s;
  r.normalize();
  return r;
}

MatrixPoly operator*(const Rational& s, MatrixPoly a) { return a * s; }

std::string MatrixPoly::str() const {
  std::ostringstream os;
  os << "deg " << degree() << " matrix poly, size " << size_;
  return os.str();
}

}  // namespace mvop
