#include "mvop/matrix.hpp"

#include <sstream>

namespace mvop {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ComputeError("ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ComputeError("matrix size mismatch in +");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ComputeError("matrix size mismatch in -");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ComputeError("matrix size mismatch in *");
  Matrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j) == 0) continue;
        m.at(i, j) += aik * b.at(k, j);
      }
    }
  return m;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return m;
}

std::vector<Rational> vec(const Matrix& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Matrix unvec(const std::vector<Rational>& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols) throw ComputeError("unvec size mismatch");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v[static_cast<size_t>(i) * cols + j];
  return m;
}

Rational determinant(Matrix m) {
  if (!m.is_square()) throw ComputeError("determinant of non-square matrix");
  int n = m.rows();
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      Rational f = m.at(r, col) * inv;
      for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ComputeError("inverse of non-square matrix");
  int n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (work.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw ComputeError("singular matrix has no inverse");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        swap(work.at(piv, j), work.at(col, j));
        swap(inv.at(piv, j), inv.at(col, j));
      }
    Rational d = Rational(1) / work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Rational f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw ComputeError("char_poly of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier: c_n = 1, M_1 = A, c_{n-k} = -tr(A M_k)/k,
  // M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    c[n - k] = -tr / Rational(k);
    for (int i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
  }
  return Poly(std::move(c));
}

Rational resultant(const Poly& a, const Poly& b) {
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return Rational(0);
  if (da == 0) return a.leading() == 0 ? Rational(0) : Rational(1);  // deg-0 vs anything
  if (db == 0) {
    Rational r(1);
    for (int i = 0; i < da; ++i) r *= b.leading();
    return r;
  }
  int n = da + db;
  Matrix s(n, n);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) s.at(i, i + j) = a.coeff(da - j);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) s.at(db + i, i + j) = b.coeff(db - j);
  return determinant(s);
}

}  // namespace mvop
