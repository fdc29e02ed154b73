#ifndef MVOP_POLY_HPP
#define MVOP_POLY_HPP

#include <string>
#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

// Univariate polynomial over Rational, coefficients ascending, normalized
// (no trailing zeros; the zero polynomial has an empty coefficient list).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) { if (c != 0) c_.push_back(c); }
  explicit Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly variable();                 // t
  static Poly monomial(const Rational& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly& operator*=(const Rational& s);
  friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
  friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  Poly pow(int e) const;

  // Quotient and remainder; divisor must be nonzero.
  static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Exact division; throws if the remainder is nonzero.
  static Poly divexact(const Poly& a, const Poly& b);
  // Monic gcd.
  static Poly gcd(Poly a, Poly b);

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

}  // namespace mvop

#endif
