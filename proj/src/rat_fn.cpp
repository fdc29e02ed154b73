#include "mvop/rat_fn.hpp"

namespace mvop {

MatRatFn::MatRatFn(MatrixPoly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ComputeError("zero denominator in matrix rational function");
  canonicalize();
}

void MatRatFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = den_;
  for (int i = 0; i < num_.size() && g.degree() > 0; ++i)
    for (int j = 0; j < num_.size() && g.degree() > 0; ++j) {
      Poly e = num_.entry(i, j);
      if (!e.is_zero()) g = Poly::gcd(g, e);
    }
  if (g.degree() > 0) {
    std::vector<std::vector<Poly>> entries(num_.size(), std::vector<Poly>(num_.size()));
    for (int i = 0; i < num_.size(); ++i)
      for (int j = 0; j < num_.size(); ++j) entries[i][j] = Poly::divexact(num_.entry(i, j), g);
    num_ = MatrixPoly::from_entries(num_.size(), entries);
    den_ = Poly::divexact(den_, g);
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    den_ *= Rational(1) / lead;
    num_ = num_ * (Rational(1) / lead);
  }
}

const MatrixPoly& MatRatFn::as_polynomial() const {
  if (!is_polynomial())
    throw ComputeError("matrix rational function is not polynomial (denominator " +
                       den_.str() + ")");
  return num_;
}

MatRatFn MatRatFn::operator+(const MatRatFn& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Poly g = Poly::gcd(den_, o.den_);
  Poly qa = Poly::divexact(o.den_, g);
  Poly qb = Poly::divexact(den_, g);
  return MatRatFn(qa * num_ + qb * o.num_, den_ * qa);
}

MatRatFn MatRatFn::operator-(const MatRatFn& o) const { return *this + (-o); }

MatRatFn MatRatFn::operator-() const {
  MatRatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

MatRatFn MatRatFn::operator*(const MatRatFn& o) const {
  if (is_zero() || o.is_zero()) return zero(size() ? size() : o.size());
  return MatRatFn(num_ * o.num_, den_ * o.den_);
}

MatRatFn MatRatFn::operator*(const Rational& s) const {
  if (s == 0) return zero(size());
  MatRatFn r = *this;
  r.num_ = r.num_ * s;
  return r;
}

bool MatRatFn::operator==(const MatRatFn& o) const {
  return (den_ == o.den_ && num_ == o.num_) || (o.den_ * num_ == den_ * o.num_);
}

MatRatFn MatRatFn::derivative() const {
  if (is_zero()) return *this;
  if (is_polynomial()) return MatRatFn(num_.derivative());
  return MatRatFn(den_ * num_.derivative() - den_.derivative() * num_, den_ * den_);
}

Matrix MatRatFn::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (d == 0) throw ComputeError("rational function evaluated at a pole");
  return num_.eval(t) * (Rational(1) / d);
}

void adjugate(const MatrixPoly& m, MatrixPoly& adj, Poly& det) {
  const int n = m.size();
  std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i][j] = m.entry(i, j);
  auto minor_det = [&](auto&& self, const std::vector<int>& rs,
                       const std::vector<int>& cs) -> Poly {
    if (rs.size() == 1) return e[rs[0]][cs[0]];
    Poly acc;
    for (size_t k = 0; k < cs.size(); ++k) {
      if (e[rs[0]][cs[k]].is_zero()) continue;
      std::vector<int> rs2(rs.begin() + 1, rs.end());
      std::vector<int> cs2;
      for (size_t t = 0; t < cs.size(); ++t)
        if (t != k) cs2.push_back(cs[t]);
      Poly term = e[rs[0]][cs[k]] * self(self, rs2, cs2);
      if (k % 2) acc -= term;
      else acc += term;
    }
    return acc;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  det = minor_det(minor_det, all, all);
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rs, cs;
      for (int r = 0; r < n; ++r)
        if (r != j) rs.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != i) cs.push_back(c);
      Poly mm = minor_det(minor_det, rs, cs);
      if ((i + j) % 2) mm = -mm;
      a[i][j] = mm;
    }
  adj = MatrixPoly::from_entries(n, a);
}

MatRatFn inverse_fn(const MatRatFn& m) {
  MatrixPoly adj;
  Poly det;
  adjugate(m.num(), adj, det);
  if (det.is_zero()) throw ComputeError("inverse of a singular matrix function");
  return MatRatFn(m.den() * adj, det);
}

}  // namespace mvop
