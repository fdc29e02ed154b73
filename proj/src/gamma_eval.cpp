#include "mvop/gamma_eval.hpp"

#include <algorithm>
#include <map>

namespace mvop {

namespace {

struct FamilyAccumulator {
  Rational value{1};
  int pole_order = 0;
};

// Gamma(m) for integer m: (m-1)! when m >= 1; otherwise a simple pole with
// residue scale (-1)^q / q! at m = -q.
void integer_gamma(const Rational& arg, int exponent, FamilyAccumulator& acc) {
  long m = to_long(arg);
  if (m >= 1) {
    Rational f{factorial(m - 1)};
    acc.value *= (exponent > 0) ? f : Rational(1) / f;
  } else {
    long q = -m;
    Rational res = Rational(factorial(q));
    if (q % 2) res = -res;  // (-1)^q
    // Gamma(-q + eps) ~ 1 / ((-1)^q q! eps)
    if (exponent > 0) {
      acc.pole_order += 1;
      acc.value *= Rational(1) / res;
    } else {
      acc.pole_order -= 1;
      acc.value *= res;
    }
  }
}

}  // namespace

Rational GammaProduct::value(bool prefactor_is_zero) const {
  std::map<int, std::vector<Term>> families;
  for (const auto& t : terms_) families[t.family].push_back(t);

  Rational total{1};
  int positive_poles = 0, negative_poles = 0;
  for (auto& [fam, terms] : families) {
    FamilyAccumulator acc;
    const bool integral = is_integer(terms.front().arg);
    for (const auto& t : terms)
      if (is_integer(t.arg) != integral)
        throw ComputeError("gamma family mixes integer and non-integer arguments");
    if (integral) {
      for (const auto& t : terms) integer_gamma(t.arg, t.exponent, acc);
    } else {
      int balance = 0;
      for (const auto& t : terms) balance += t.exponent;
      if (balance != 0)
        throw ComputeError("gamma arguments do not pair up; value is not rational");
      Rational ref = terms.front().arg;
      for (const auto& t : terms) ref = std::min(ref, t.arg);
      for (const auto& t : terms) {
        Rational d = t.arg - ref;
        if (!is_integer(d)) throw ComputeError("gamma family difference is not an integer");
        Rational shift = pochhammer(ref, to_long(d));  // nonzero: no integer in range
        acc.value *= (t.exponent > 0) ? shift : Rational(1) / shift;
      }
    }
    if (acc.pole_order > 0) positive_poles += acc.pole_order;
    if (acc.pole_order < 0) negative_poles -= acc.pole_order;
    total *= acc.value;
  }

  if (positive_poles > 0 && negative_poles > 0)
    throw ComputeError("gamma poles cancel across families; limit is direction-dependent");
  if (positive_poles > 0) {
    if (prefactor_is_zero) return Rational(0);
    throw ComputeError("unresolved gamma pole");
  }
  if (negative_poles > 0) return Rational(0);
  return total;
}

}  // namespace mvop
