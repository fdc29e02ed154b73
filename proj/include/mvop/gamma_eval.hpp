#ifndef MVOP_GAMMA_EVAL_HPP
#define MVOP_GAMMA_EVAL_HPP

#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

// Formal product of Euler Gamma factors, each with exponent +/-1.  Arguments
// carry a family id: two arguments belong to the same family when their
// difference stays a fixed integer as the parameters move, which pins how
// pole residues pair up when arguments land on nonpositive integers.  The
// evaluator rewrites each family as Pochhammer products, so the value is an
// exact rational; reciprocal Gamma vanishes at nonpositive integers.
class GammaProduct {
 public:
  void num(const Rational& arg, int family) { terms_.push_back({arg, family, +1}); }
  void den(const Rational& arg, int family) { terms_.push_back({arg, family, -1}); }

  // prefactor_is_zero: an exact zero rational prefactor annihilates any
  // surviving pole.  Unresolvable poles (or a transcendental leftover from
  // an unpaired non-integer argument) raise ComputeError.
  Rational value(bool prefactor_is_zero = false) const;

 private:
  struct Term {
    Rational arg;
    int family;
    int exponent;
  };
  std::vector<Term> terms_;
};

}  // namespace mvop

#endif
