#ifndef MVOP_RATIONAL_HPP
#define MVOP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mvop {

// Exact rational scalar.  Backed by GMP; always canonical (lowest terms,
// positive denominator), all arithmetic exact.
using Rational = mpq_class;
using Integer = mpz_class;

// Raised on invalid or non-generic parameter choices; carries the name of
// the offending expression so callers can report it.
class ParameterError : public std::runtime_error {
 public:
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on internal contract violations (size mismatch, singular matrix,
// pole in a closed-form expression, ...).
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p/q" or "p" with optional sign.  No decimal forms.
Rational rational_from_string(const std::string& s);

// Canonical text form: "p" or "p/q".
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);

// Requires is_integer(x) and fits in long.
long to_long(const Rational& x);

// Shifted factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1; zero for n < 0.
Rational pochhammer(const Rational& a, long n);

Integer factorial(long n);

// Generalized binomial coefficient (a choose m) = (a-m+1)_m / m!, m >= 0.
Rational binomial(const Rational& a, long m);

// The two-argument mpq constructor does not reduce; this helper does.
inline Rational rat(long num, long den = 1) {
  Rational x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace mvop

#endif
