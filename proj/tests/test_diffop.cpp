#include <doctest.h>

#include <random>

#include "mvop/diffop.hpp"
#include "mvop/families.hpp"

using namespace mvop;

namespace {

std::mt19937_64 rng(411);

Matrix random_matrix(int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rat(num(rng), den(rng));
  return m;
}

MatrixPoly random_poly(int n, int deg) {
  std::vector<Matrix> c;
  for (int d = 0; d <= deg; ++d) c.push_back(random_matrix(n));
  return MatrixPoly(n, std::move(c));
}

MatDiffOp random_op(int n, int order, int degmax) {
  std::vector<MatRatFn> c;
  for (int j = 0; j <= order; ++j) c.emplace_back(random_poly(n, degmax));
  return MatDiffOp(n, std::move(c));
}

}  // namespace

TEST_CASE("apply basics") {
  MatDiffOp id = MatDiffOp::identity(2);
  MatrixPoly p = random_poly(2, 3);
  CHECK(apply(id, p) == MatRatFn(p));

  // first derivative only: t^2 I -> 2t I
  MatDiffOp ddt = MatDiffOp::derivative(2, 1);
  MatrixPoly t2 = MatrixPoly::scalar(2, Poly::variable() * Poly::variable());
  MatrixPoly want = MatrixPoly::scalar(2, Poly(Rational(2)) * Poly::variable());
  CHECK(apply(ddt, t2) == MatRatFn(want));

  CHECK_THROWS_AS(apply(MatDiffOp::identity(3), random_poly(2, 1)), ComputeError);
}

TEST_CASE("compose: identities and associativity with apply") {
  MatDiffOp id = MatDiffOp::identity(2);
  MatDiffOp op = random_op(2, 2, 2);
  CHECK(compose(op, id) == op);
  CHECK(compose(id, op) == op);

  MatDiffOp d1 = MatDiffOp::derivative(2, 1);
  CHECK(compose(d1, d1) == MatDiffOp::derivative(2, 2));

  for (int trial = 0; trial < 4; ++trial) {
    MatDiffOp a = random_op(2, 2, 1), b = random_op(2, 1, 2);
    MatrixPoly p = random_poly(2, 6);
    MatRatFn lhs = apply(compose(a, b), p);
    MatRatFn rhs = apply(a, apply(b, p).as_polynomial());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("commutator is bilinear and antisymmetric") {
  MatDiffOp a = random_op(2, 2, 2), b = random_op(2, 1, 1), c = random_op(2, 1, 1);
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(a, b) == commutator(b, a) * Rational(-1));
  Rational s = rat(3, 2);
  MatDiffOp lhs = commutator(a, b * s + c);
  MatDiffOp rhs = commutator(a, b) * s + commutator(a, c);
  CHECK(lhs == rhs);
}

TEST_CASE("hypergeometric-form operators preserve polynomial degree") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  for (int m = 0; m <= 8; ++m) {
    MatrixPoly p = random_poly(3, m);
    MatrixPoly dp = apply_poly(fb.d1, p);
    CHECK(dp.degree() <= m);
  }
  CHECK(is_hypergeometric_form(fb.d1).ok);
  auto bad = is_hypergeometric_form(fb.d_original);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violating_order == 0);
  CHECK(is_hypergeometric_form(MatDiffOp(3)).ok);  // zero operator
}

TEST_CASE("conjugation: identity, closed form, round trip") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  CHECK(conjugate_by(fb.d1, MatrixPoly::identity(3)) == fb.d1);
  MatDiffOp conj = conjugate_by(fb.d_original, fb.psi_star);
  CHECK(conj == fb.d1);

  MatRatFn psi{fb.psi_star};
  MatDiffOp back = conjugate_by(conj, inverse_fn(psi));
  CHECK(back == fb.d_original);

  MatrixPoly singular(3, {Matrix::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 0, 1}})});
  CHECK_THROWS_AS(conjugate_by(fb.d1, singular), ComputeError);
}

TEST_CASE("gamma_n shape and values") {
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 12);
  Matrix g0 = gamma_n(fb.d_hyp, 0);
  CHECK(g0 == fb.v_hyp);
  Matrix g1 = gamma_n(fb.d_hyp, 1);
  Matrix want = -Rational(1) * fb.u_hyp + fb.v_hyp;
  CHECK(g1 == want);
  // triangular spectrum at n=1: {-12, -21, -32}
  CHECK(g1.at(0, 0) == -12);
  CHECK(g1.at(1, 1) == -21);
  CHECK(g1.at(2, 2) == -32);
  CHECK_THROWS_AS(gamma_n(MatDiffOp::identity(3), 1), ComputeError);
}
