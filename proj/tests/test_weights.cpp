#include <doctest.h>

#include <random>

#include "mvop/families.hpp"
#include "mvop/gamma_eval.hpp"
#include "mvop/weights.hpp"

using namespace mvop;

namespace {

std::mt19937_64 rng(902);

MatrixPoly random_poly(int n, int deg) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<Matrix> c;
  for (int d = 0; d <= deg; ++d) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rat(num(rng), den(rng));
    c.push_back(std::move(m));
  }
  return MatrixPoly(n, std::move(c));
}

}  // namespace

TEST_CASE("normalized moments") {
  CHECK(normalized_moment(Rational(0), Rational(0), 1, 0) == rat(1, 2));
  CHECK(normalized_moment(Rational(0), Rational(0), 1, 1) == rat(1, 6));
  CHECK(normalized_moment(Rational(3), Rational(5), 1, 0) == rat(2, 5));
  // Pochhammer-ratio identity against small-integer direct integrals of
  // t^m (1-t)^p over [0,1]: those are m! p! / (m+p+1)!
  for (long m = 0; m <= 4; ++m)
    for (long p = 0; p <= 4; ++p) {
      Rational direct = Rational(factorial(m)) * Rational(factorial(p)) /
                        Rational(factorial(m + p + 1));
      CHECK(normalized_moment(Rational(0), Rational(0), m, p) == direct);
    }
  CHECK_THROWS_AS(normalized_moment(Rational(-2), Rational(0), 0, 0), ParameterError);
}

TEST_CASE("inner product: sesquilinearity and transpose symmetry") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  const auto& w = fb.w_tilde;
  Matrix zeroth = inner_product(MatrixPoly::identity(3), MatrixPoly::identity(3), w);
  CHECK(zeroth == zeroth.transpose());
  // positive definiteness of the zeroth moment matrix
  for (int k = 1; k <= 3; ++k) {
    Matrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = zeroth.at(i, j);
    CHECK(determinant(lead) > 0);
  }
  for (int trial = 0; trial < 6; ++trial) {
    MatrixPoly p = random_poly(3, 3), q = random_poly(3, 2), r = random_poly(3, 3);
    Rational s = rat(5, 3);
    Matrix lhs = inner_product(p * s + q, r, w);
    Matrix rhs = inner_product(p, r, w) * s + inner_product(q, r, w);
    CHECK(lhs == rhs);
    CHECK(inner_product(p, q, w) == inner_product(q, p, w).transpose());
  }
  // (P,P) has positive diagonal for monomials
  for (int d = 0; d <= 4; ++d) {
    MatrixPoly p = MatrixPoly::monomial(Matrix::identity(3), d);
    Matrix g = inner_product(p, p, w);
    for (int i = 0; i < 3; ++i) CHECK(g.at(i, i) > 0);
  }
}

TEST_CASE("skew bracket bookkeeping") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  MatrixPoly id = MatrixPoly::identity(3);
  CHECK(skew_bracket(id, id, fb.w_tilde) == inner_product(id, id, fb.w_tilde).transpose());
  // for a scalar diagonal weight the bracket is the transposed form
  JacobiMatrixWeight diag(Rational(1), Rational(2), MatrixPoly::identity(2));
  for (int trial = 0; trial < 5; ++trial) {
    MatrixPoly p = random_poly(2, 2), q = random_poly(2, 2);
    CHECK(skew_bracket(p, q, diag) ==
          inner_product(p.transpose(), q.transpose(), diag).transpose());
  }
}

TEST_CASE("weight conjugation") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  JacobiMatrixWeight same = conjugate_weight(fb.w_original, MatrixPoly::identity(3));
  CHECK(same.density() == fb.w_original.density());
  // conjugating by the transposed conjugator gives a symmetric polynomial density
  CHECK(fb.w_tilde.density().transpose() == fb.w_tilde.density());
  CHECK_THROWS_AS(conjugate_weight(fb.w_original, MatrixPoly::identity(2)), ComputeError);
}

TEST_CASE("positivity probe") {
  CHECK(positivity_probe(JacobiMatrixWeight(Rational(1), Rational(1), MatrixPoly::identity(3))));
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  CHECK(positivity_probe(fb.w_original));
  CHECK(positivity_probe(fb.w_tilde));
  // an indefinite density fails
  MatrixPoly bad = MatrixPoly::constant(Matrix::from_rows({{1, 2}, {2, 1}}));
  CHECK_FALSE(positivity_probe(JacobiMatrixWeight(Rational(0), Rational(0), bad)));
  CHECK_THROWS_AS(positivity_probe(fb.w_tilde, {Rational(2)}), ParameterError);
}

TEST_CASE("weight factorization identity") {
  FamilyBundle one = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  auto r1 = verify_weight_ode(one.w_tilde, one.ode_a, one.ode_b);
  CHECK(r1.ok);
  CHECK(r1.residual.is_zero());
  FamilyBundle two =
      build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(2), Rational(4)}, 12);
  auto r2 = verify_weight_ode(two.w_tilde, two.ode_a, two.ode_b);
  CHECK(r2.ok);
  // zero residue matrices against a nonconstant density must fail
  auto bad = verify_weight_ode(one.w_tilde, Matrix::zero(3, 3), Matrix::zero(3, 3));
  CHECK_FALSE(bad.ok);
}

TEST_CASE("symmetry check: scalar case and conjugated pair") {
  // classical scalar operator t(1-t) d^2 + (a+1 - (a+b+2)t) d
  Rational a(3), b(5);
  JacobiMatrixWeight w(a, b, MatrixPoly::identity(1));
  Poly t = Poly::variable();
  MatDiffOp d = MatDiffOp::from_polys(
      1, {MatrixPoly(1), MatrixPoly::scalar(1, Poly(a + 1) - (a + b + 2) * t),
          MatrixPoly::scalar(1, t - t * t)});
  CHECK(symmetry_check(d, w, 6).symmetric);

  FamilyBundle fb = build_one_step(OneStepParams{a, b, Rational(2)}, 12);
  CHECK(symmetry_check(fb.d1, fb.w_tilde, 4).symmetric);
  // perturbing one entry of the zero-order coefficient breaks symmetry and
  // yields a witness with both sides
  MatDiffOp broken = fb.d1;
  Matrix bump = Matrix::zero(3, 3);
  bump.at(0, 1) = 1;
  broken = broken + MatDiffOp(3, {MatRatFn(MatrixPoly::constant(bump))});
  auto res = symmetry_check(broken, fb.w_tilde, 3);
  CHECK_FALSE(res.symmetric);
  REQUIRE(res.witness.has_value());
  CHECK_FALSE(res.witness->lhs == res.witness->rhs);
  CHECK_THROWS_AS(symmetry_check(fb.d_original, fb.w_original, 2), ComputeError);
}

TEST_CASE("gamma product evaluator") {
  // Gamma(5)/Gamma(2) = 24, one family
  GammaProduct g1;
  g1.num(Rational(5), 0);
  g1.den(Rational(2), 0);
  CHECK(g1.value() == 24);
  // reciprocal of a pole vanishes
  GammaProduct g2;
  g2.num(Rational(3), 0);
  g2.den(Rational(0), 0);
  CHECK(g2.value() == 0);
  // pole over pole in one family: Gamma(-3+e)/Gamma(-5+e) = 5!/3! = 20
  GammaProduct g3;
  g3.num(Rational(-3), 1);
  g3.den(Rational(-5), 1);
  CHECK(g3.value() == 20);
  // surviving pole is an error unless an exact zero prefactor kills it
  GammaProduct g4;
  g4.num(Rational(-2), 0);
  CHECK_THROWS_AS(g4.value(false), ComputeError);
  CHECK(g4.value(true) == 0);
  // non-integer arguments must pair within their family
  GammaProduct g5;
  g5.num(rat(7, 2), 0);
  CHECK_THROWS_AS(g5.value(), ComputeError);
  GammaProduct g6;
  g6.num(rat(7, 2), 0);
  g6.den(rat(3, 2), 0);
  CHECK(g6.value() == rat(15, 4));  // (3/2)(5/2)
}
