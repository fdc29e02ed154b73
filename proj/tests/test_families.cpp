#include <doctest.h>

#include <algorithm>

#include "mvop/diffop.hpp"
#include "mvop/families.hpp"

using namespace mvop;

TEST_CASE("one-step constructor values") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  CHECK(fb.v_hyp == Matrix::from_rows({{0, 0, 0}, {0, -8, 0}, {0, 0, -18}}));
  CHECK(fb.lambda_d1.eval(1) == Matrix::from_rows({{-12, 0, 0}, {0, -21, 0}, {0, 0, -32}}));
  CHECK(fb.lambda_d2.eval(0) == Matrix::from_rows({{0, 0, 0}, {0, 8, 0}, {0, 0, 18}}));
  // Kronecker diagonal: t4 = t1 + (a+b-k+2)
  for (long n = 0; n <= 10; ++n) {
    Rational t1 = fb.t_list[0].eval(Rational(n));
    Rational t4 = fb.t_list[3].eval(Rational(n));
    CHECK(t4 - t1 == Rational(8));
    // first diagonal entry -n^2 - n(a+b+3)
    CHECK(t1 == -Rational(n) * n - Rational(n) * 11);
  }
  // eigenvalue-ideal identities relating the two generators
  for (long n = 0; n <= 10; ++n) {
    Matrix l1 = fb.lambda_d1.eval(n), l2 = fb.lambda_d2.eval(n);
    CHECK(l2.at(0, 0) == l1.at(0, 0));
    CHECK(2 * l2.at(1, 1) - l1.at(1, 1) == Rational(3) * 8);   // (k+1)(a+b-k+2)
    CHECK(l2.at(2, 2) == Rational(2) * 9);                     // k(a+b-k+3)
  }
}

TEST_CASE("one-step parameter validation") {
  CHECK_THROWS_AS(build_one_step(OneStepParams{Rational(-2), Rational(5), Rational(2)}, 8),
                  ParameterError);
  CHECK_THROWS_AS(build_one_step(OneStepParams{Rational(3), Rational(5), Rational(0)}, 8),
                  ParameterError);
  CHECK_THROWS_AS(build_one_step(OneStepParams{Rational(3), Rational(5), Rational(6)}, 8),
                  ParameterError);
  CHECK_THROWS_AS(build_one_step(OneStepParams{Rational(3), Rational(5), rat(3, 2)}, 8),
                  ParameterError);
  // rational alpha, beta are fine
  CHECK_NOTHROW(build_one_step(OneStepParams{rat(7, 2), rat(11, 2), Rational(2)}, 12));
}

TEST_CASE("one-step tabulated constant terms") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  Matrix p1 = pstar_zero(fb, 1);
  CHECK(p1.at(0, 0) == rat(-5, 12));
  CHECK(p1.at(2, 2) == rat(-108, 7));
  CHECK(p1.at(1, 0) == 0);  // upper triangular
  CHECK_THROWS_AS(pstar_zero(fb, 0), ParameterError);
}

TEST_CASE("one-step closed-form coefficients") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  Matrix a00 = closed_form_coeff(fb, 0, 0);
  CHECK(a00.at(0, 0) == 1);
  // Gamma(l) pole in the denominator kills the (2,1) entry at l = 0
  for (long n = 1; n <= 4; ++n) {
    CHECK(closed_form_coeff(fb, n, 0).at(1, 0) == 0);
    CHECK(closed_form_coeff(fb, n, 0).at(2, 0) == 0);
    CHECK(closed_form_coeff(fb, n, 0).at(2, 1) == 0);
  }
  CHECK_THROWS_AS(closed_form_coeff(fb, 2, 3), ParameterError);
}

TEST_CASE("two-step constructor values") {
  FamilyBundle fb =
      build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(2), Rational(4)}, 12);
  CHECK(fb.v_hyp ==
        Matrix::from_rows({{0, 0, 0, 0}, {0, -9, 0, 0}, {0, 0, -6, 0}, {0, 0, 0, -16}}));
  // d1 eigenvalues come in the operator's own diagonal order: (t1,t3,t2,t4)
  Matrix l1 = fb.lambda_d1.eval(1);
  CHECK(l1.at(0, 0) == fb.t_list[0].eval(Rational(1)));
  CHECK(l1.at(1, 1) == fb.t_list[2].eval(Rational(1)));
  CHECK(l1.at(2, 2) == fb.t_list[1].eval(Rational(1)));
  CHECK(l1.at(3, 3) == fb.t_list[3].eval(Rational(1)));
  // order-four eigenvalues concentrate in one matrix unit
  Matrix le = fb.lambda_e->eval(1);
  CHECK(le.at(1, 2) == 960);
  Rational total(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) total += abs(le.at(i, j));
  CHECK(total == 960);
  // constant term (2,3) entry vanishes identically
  for (long n = 1; n <= 8; ++n) CHECK(pstar_zero(fb, n).at(1, 2) == 0);
  // leading coefficients of the order-four generators vanish to order 2 at 0
  CHECK(fb.g4->coeff(0).is_zero());
  CHECK(fb.g4->coeff(1).is_zero());
  CHECK(fb.h4->coeff(0).is_zero());
  CHECK(fb.h4->coeff(1).is_zero());
  // first row of the F leading coefficient is zero
  for (int j = 0; j < 4; ++j) CHECK(fb.h4->entry(0, j).is_zero());
}

TEST_CASE("two-step parameter validation") {
  CHECK_THROWS_AS(
      build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(4), Rational(2)}, 8),
      ParameterError);
  CHECK_THROWS_AS(
      build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(2), Rational(7)}, 8),
      ParameterError);
  CHECK_THROWS_AS(
      build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(2), Rational(2)}, 8),
      ParameterError);
  CHECK_NOTHROW(
      build_two_step(TwoStepParams{rat(7, 2), rat(11, 2), Rational(2), Rational(4)}, 12));
}

TEST_CASE("lambda_sequence lookup") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  CHECK(lambda_sequence(fb, "d1") == fb.lambda_d1);
  CHECK(lambda_sequence(fb, "hyp") == fb.lambda_hyp);
  CHECK_THROWS_AS(lambda_sequence(fb, "e"), ParameterError);
  CHECK_THROWS_AS(lambda_sequence(fb, "nope"), ParameterError);
}

TEST_CASE("out-of-range parameters are rejected loudly") {
  CHECK_THROWS_AS(build_one_step(OneStepParams{rat(-1, 1), Rational(5), Rational(2)}, 8),
                  ParameterError);
}

TEST_CASE("triangular eigenvalue matrices carry the tabulated spectra") {
  FamilyBundle one = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  FamilyBundle two =
      build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(2), Rational(4)}, 12);
  for (const FamilyBundle& fb : {one, two})
    for (long n = 0; n <= 10; ++n) {
      Matrix g = gamma_n(fb.d_hyp, n);
      // upper triangular, so the diagonal is the spectrum
      for (int i = 0; i < fb.size; ++i)
        for (int j = 0; j < i; ++j) CHECK(g.at(i, j) == 0);
      std::vector<Rational> spec, want;
      for (int i = 0; i < fb.size; ++i) {
        spec.push_back(g.at(i, i));
        want.push_back(fb.t_list[i].eval(Rational(n)));
      }
      std::sort(spec.begin(), spec.end());
      std::sort(want.begin(), want.end());
      CHECK(spec == want);
    }
}
