#include <doctest.h>

#include <random>

#include "mvop/linalg.hpp"
#include "mvop/matrix.hpp"
#include "mvop/poly.hpp"
#include "mvop/rational.hpp"

using namespace mvop;

namespace {

std::mt19937_64 rng(20240901);

Rational small_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return rat(num(rng), den(rng));
}

Matrix random_matrix(int r, int c) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = small_rational();
  return m;
}

}  // namespace

TEST_CASE("rational parsing and pochhammer") {
  CHECK(rational_from_string("3/4") == rat(3, 4));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(to_string(rat(-3, 9)) == "-1/3");
  CHECK_THROWS_AS(rational_from_string("1.5"), ParameterError);
  CHECK_THROWS_AS(rational_from_string("1/0"), ParameterError);

  CHECK(pochhammer(Rational(5), 0) == 1);
  CHECK(pochhammer(Rational(5), -1) == 0);
  CHECK(pochhammer(Rational(5), -2) == 0);
  CHECK(pochhammer(Rational(5), -7) == 0);
  CHECK(pochhammer(Rational(2), 3) == 24);
  // recursion (a)_n = (a)_{n-1} (a+n-1)
  for (long n = 1; n <= 8; ++n) {
    Rational a(7, 3);
    CHECK(pochhammer(a, n) == pochhammer(a, n - 1) * (a + n - 1));
  }
  CHECK(binomial(rat(11, 2), 3) == rat(11 * 9 * 7, 48));
}

TEST_CASE("polynomial arithmetic") {
  Poly t = Poly::variable();
  Poly p = t * t - 3 * t + Poly(Rational(2));
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(1)) == 0);
  CHECK(p.eval(rat(1, 2)) == rat(3, 4));
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == 2 * t - Poly(Rational(3)));

  // degree of a product is the sum of degrees (field, no zero divisors)
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> ca(4), cb(3);
    for (auto& c : ca) c = small_rational();
    for (auto& c : cb) c = small_rational();
    Poly a(ca), b(cb);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).degree() == a.degree() + b.degree());
  }

  Poly g = Poly::gcd(p, t - Poly(Rational(1)));
  CHECK(g == t - Poly(Rational(1)));
  Poly q = Poly::divexact(p, t - Poly(Rational(2)));
  CHECK(q == t - Poly(Rational(1)));
}

TEST_CASE("kron and vec conventions") {
  Matrix i2 = Matrix::identity(2);
  CHECK(kron(i2, i2) == Matrix::identity(4));
  Matrix a = Matrix::from_rows({{0, 1}, {0, 0}});
  Matrix k = kron(a, i2);
  CHECK(k.at(0, 2) == 1);
  CHECK(k.at(1, 3) == 1);
  Rational total(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) total += abs(k.at(i, j));
  CHECK(total == 2);

  CHECK(kron(a, Matrix::identity(1)) == a);

  // vec is row-major stacking
  Matrix m = Matrix::from_rows({{1, 0}, {0, 1}});
  CHECK(vec(m) == std::vector<Rational>{1, 0, 0, 1});

  Matrix d = Matrix::from_rows({{2, 0}, {0, 3}});
  Matrix ones = Matrix::from_rows({{1, 1}, {1, 1}});
  CHECK(vec(d * ones) == std::vector<Rational>{2, 2, 3, 3});

  Matrix lam = Matrix::from_rows({{5, 0}, {0, 7}});
  CHECK(vec(m * lam) == std::vector<Rational>{5, 0, 0, 7});
}

TEST_CASE("vec kron compatibility on random samples") {
  for (int trial = 0; trial < 16; ++trial) {
    int n = 2 + trial % 2;
    Matrix mm = random_matrix(n, n), pp = random_matrix(n, n), ll = random_matrix(n, n);
    Matrix id = Matrix::identity(n);
    auto vp = vec(pp);
    // column vector as (n^2 x 1) matrix
    Matrix col(n * n, 1);
    for (int i = 0; i < n * n; ++i) col.at(i, 0) = vp[i];
    Matrix left = kron(mm, id) * col;
    CHECK(vec(mm * pp) == vec(left.transpose()));  // row-major of a column
    Matrix right = kron(id, ll.transpose()) * col;
    CHECK(vec(pp * ll) == vec(right.transpose()));
  }
}

TEST_CASE("determinant, inverse, char poly, resultant") {
  Matrix a = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(determinant(a) == 1);
  CHECK(inverse(a) * a == Matrix::identity(2));
  Poly cp = char_poly(a);
  // x^2 - 3x + 1
  CHECK(cp == Poly(std::vector<Rational>{1, -3, 1}));

  Poly t = Poly::variable();
  Poly p = (t - Poly(Rational(1))) * (t - Poly(Rational(2)));
  Poly q = (t - Poly(Rational(3))) * (t - Poly(Rational(4)));
  CHECK(resultant(p, q) != 0);
  Poly q2 = (t - Poly(Rational(2))) * (t - Poly(Rational(5)));
  CHECK(resultant(p, q2) == 0);
}

TEST_CASE("solve_exact basics") {
  Matrix i3 = Matrix::identity(3);
  std::vector<Rational> b{1, 2, 3};
  auto x = solve_exact(i3, b);
  REQUIRE(x);
  CHECK(*x == b);

  Matrix d = Matrix::from_rows({{2, 0}, {0, 4}});
  auto y = solve_exact(d, {1, 1});
  REQUIRE(y);
  CHECK(*y == std::vector<Rational>{rat(1, 2), rat(1, 4)});

  // random invertible: residual check
  for (int trial = 0; trial < 6; ++trial) {
    Matrix m = random_matrix(6, 6);
    if (determinant(m) == 0) continue;
    std::vector<Rational> rhs(6);
    for (auto& v : rhs) v = small_rational();
    auto sol = solve_exact(m, rhs);
    REQUIRE(sol);
    Matrix col(6, 1);
    for (int i = 0; i < 6; ++i) col.at(i, 0) = (*sol)[i];
    Matrix prod = m * col;
    for (int i = 0; i < 6; ++i) CHECK(prod.at(i, 0) == rhs[i]);
  }

  // inconsistent system
  std::vector<std::vector<Rational>> rows{{1, 1}, {1, 1}};
  SolveOutcome bad = solve_linear(rows, 2, {1, 2});
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("nullspace: basics and rank-nullity") {
  CHECK(nullspace(Matrix::identity(4)).dim() == 0);
  CHECK(nullspace(Matrix::zero(3, 5)).dim() == 5);

  Matrix a = Matrix::from_rows({{1, 1}});
  NullspaceResult ns = nullspace(a);
  REQUIRE(ns.dim() == 1);
  CHECK(ns.basis[0][0] + ns.basis[0][1] == 0);

  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_matrix(4 + trial % 3, 5);
    NullspaceResult r = nullspace(m);
    CHECK(r.rank() + r.dim() == 5);
    for (const auto& v : r.basis) {
      Matrix col(5, 1);
      for (int i = 0; i < 5; ++i) col.at(i, 0) = v[i];
      CHECK((m * col).is_zero());
    }
  }
}

TEST_CASE("elimination engines agree") {
  for (int trial = 0; trial < 8; ++trial) {
    int rows_n = 12 + trial, cols_n = 9;
    std::vector<std::vector<Rational>> rows(rows_n, std::vector<Rational>(cols_n));
    for (auto& row : rows)
      for (auto& x : row) x = (rng() % 3 == 0) ? Rational(0) : small_rational();
    NullspaceResult a = nullspace(rows, cols_n, LinEngine::Reference);
    NullspaceResult b = nullspace(rows, cols_n, LinEngine::Parallel);
    NullspaceResult c = nullspace(rows, cols_n, LinEngine::Modular);
    CHECK(a.pivot_cols == b.pivot_cols);
    CHECK(a.pivot_cols == c.pivot_cols);
    CHECK(a.basis == b.basis);
    CHECK(a.basis == c.basis);
  }
}
