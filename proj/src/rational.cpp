#include "mvop/rational.hpp"

namespace mvop {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ParameterError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw ParameterError("bad rational literal '" + s + "' (use p or p/q)");
  }
  Rational x;
  if (x.set_str(s, 10) != 0) throw ParameterError("bad rational literal '" + s + "'");
  if (x.get_den() == 0) throw ParameterError("zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

long to_long(const Rational& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw ComputeError("rational " + to_string(x) + " is not a small integer");
  return x.get_num().get_si();
}

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) return Rational(0);
  Rational acc(1);
  Rational f = a;
  for (long i = 0; i < n; ++i) {
    acc *= f;
    f += 1;
  }
  return acc;
}

Integer factorial(long n) {
  if (n < 0) throw ComputeError("factorial of negative integer");
  Integer acc;
  mpz_fac_ui(acc.get_mpz_t(), static_cast<unsigned long>(n));
  return acc;
}

Rational binomial(const Rational& a, long m) {
  if (m < 0) return Rational(0);
  return pochhammer(a - (m - 1), m) / Rational(factorial(m));
}

}  // namespace mvop
