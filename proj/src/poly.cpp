#include "mvop/poly.hpp"

#include <sstream>

namespace mvop {

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, int deg) {
  if (c == 0) return Poly();
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) { c_.clear(); return *this; }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::pow(int e) const {
  Poly r{Rational(1)};
  Poly base = *this;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) r *= base;
    if (k > 1) base *= base;
  }
  return r;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw ComputeError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  const Rational lb = b.leading();
  std::vector<Rational> quot;
  if (static_cast<int>(rem.size()) - 1 >= db)
    quot.assign(rem.size() - db, Rational(0));
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    if (rem[d] == 0) continue;
    Rational f = rem[d] / lb;
    quot[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.c_[i];
  }
  q = Poly(std::move(quot));
  r = Poly(std::move(rem));
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(a, b, q, r);
  if (!r.is_zero()) throw ComputeError("inexact polynomial division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = Rational(1) / a.leading();
  a *= inv;
  return a;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational ac = abs(c);
    if (i == 0 || ac != 1) os << to_string(ac);
    if (i > 0) {
      if (ac != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace mvop
