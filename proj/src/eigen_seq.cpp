#include "mvop/eigen_seq.hpp"

namespace mvop {

EigenSeq EigenSeq::diagonal(const std::vector<Poly>& d) {
  EigenSeq s(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) s.e_[i][i] = d[i];
  return s;
}

EigenSeq EigenSeq::constant(const Matrix& m) {
  EigenSeq s(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s.e_[i][j] = Poly(m.at(i, j));
  return s;
}

EigenSeq EigenSeq::unit(int size, int i, int j, const Poly& p) {
  EigenSeq s(size);
  s.e_[i][j] = p;
  return s;
}

Matrix EigenSeq::eval(long n) const {
  Matrix m(size_, size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) m.at(i, j) = e_[i][j].eval(Rational(n));
  return m;
}

bool EigenSeq::is_zero() const {
  for (const auto& row : e_)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

int EigenSeq::max_degree() const {
  int d = -1;
  for (const auto& row : e_)
    for (const auto& p : row) d = std::max(d, p.degree());
  return d;
}

EigenSeq EigenSeq::operator+(const EigenSeq& o) const {
  if (size_ != o.size_) throw ComputeError("eigen sequence size mismatch");
  EigenSeq s(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) s.e_[i][j] = e_[i][j] + o.e_[i][j];
  return s;
}

EigenSeq EigenSeq::operator-(const EigenSeq& o) const {
  if (size_ != o.size_) throw ComputeError("eigen sequence size mismatch");
  EigenSeq s(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) s.e_[i][j] = e_[i][j] - o.e_[i][j];
  return s;
}

EigenSeq EigenSeq::operator*(const EigenSeq& o) const {
  if (size_ != o.size_) throw ComputeError("eigen sequence size mismatch");
  EigenSeq s(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      Poly acc;
      for (int k = 0; k < size_; ++k) acc += e_[i][k] * o.e_[k][j];
      s.e_[i][j] = acc;
    }
  return s;
}

EigenSeq EigenSeq::operator*(const Rational& c) const {
  EigenSeq s(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) s.e_[i][j] = e_[i][j] * c;
  return s;
}

}  // namespace mvop
