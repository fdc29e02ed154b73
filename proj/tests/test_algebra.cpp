#include <doctest.h>

#include "mvop/algebra.hpp"

using namespace mvop;

namespace {

struct OneStepFixture {
  FamilyBundle fb;
  PolyFamily fam;
  OneStepFixture()
      : fb(build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 29)),
        fam(generate_family(fb, "d1", 27, Normalization::ClosedForm)) {}
};

struct TwoStepFixture {
  FamilyBundle fb;
  PolyFamily fam;
  TwoStepFixture()
      : fb(build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(2), Rational(4)}, 29)),
        fam(generate_family(fb, "d1", 27, Normalization::ClosedForm)) {}
};

OneStepFixture& one() {
  static OneStepFixture f;
  return f;
}
TwoStepFixture& two() {
  static TwoStepFixture f;
  return f;
}

}  // namespace

TEST_CASE("operator space dimensions at low order") {
  OperatorSpace sp1 = operator_space(one().fb, one().fam, 1);
  CHECK(sp1.dim() == 1);  // identity only, no odd-order operators
  CHECK(sp1.new_dims == std::vector<int>{1, 0});

  OperatorSpace sp2 = operator_space(one().fb, one().fam, 2);
  CHECK(sp2.dim() == 3);
  CHECK(sp2.new_dims == std::vector<int>{1, 0, 2});
  CHECK(sp2.stabilized);

  OperatorSpace tw = operator_space(two().fb, two().fam, 2);
  CHECK(tw.dim() == 4);
  CHECK(tw.new_dims == std::vector<int>{1, 0, 3});
}

TEST_CASE("lambda of operator") {
  auto& f = one();
  auto id = lambda_of_operator(f.fb, f.fam, MatDiffOp::identity(3));
  CHECK(id.in_algebra);
  CHECK(id.lambda == EigenSeq::constant(Matrix::identity(3)));

  auto l1 = lambda_of_operator(f.fb, f.fam, f.fb.d1);
  CHECK(l1.in_algebra);
  CHECK(l1.lambda == f.fb.lambda_d1);
  auto l2 = lambda_of_operator(f.fb, f.fam, f.fb.d2);
  CHECK(l2.in_algebra);
  CHECK(l2.lambda == f.fb.lambda_d2);

  MatDiffOp broken = f.fb.d1;
  Matrix bump = Matrix::zero(3, 3);
  bump.at(2, 0) = 1;
  broken = broken + MatDiffOp(3, {MatRatFn(MatrixPoly::constant(bump))});
  CHECK_FALSE(lambda_of_operator(f.fb, f.fam, broken).in_algebra);
}

TEST_CASE("eigenvalue map is multiplicative on generator pairs") {
  auto& f = two();
  GeneratorSet gens = generator_set(f.fb, f.fam);
  std::vector<std::string> names = {"i", "d1", "d2", "d3", "e", "f"};
  for (const auto& a : names)
    for (const auto& b : names) {
      MatDiffOp ab = compose(gens.ops.at(a), gens.ops.at(b));
      auto lab = lambda_of_operator(f.fb, f.fam, ab);
      REQUIRE(lab.in_algebra);
      for (long n = 0; n <= 10; ++n)
        CHECK(lab.lambda.eval(n) == gens.lambdas.at(a).eval(n) * gens.lambdas.at(b).eval(n));
    }
}

TEST_CASE("one-step relations") {
  auto& f = one();
  GeneratorSet gens = generator_set(f.fb, f.fam);
  for (auto& [name, expr] : relation_exprs(f.fb, "all")) {
    auto rep = relation_check(gens, expr, name, 12);
    CHECK(rep.ok());
    CHECK(rep.operator_checked);  // both are order <= 6 here
  }
  auto pp = partial_products_nonzero(f.fb);
  CHECK(pp.ok);
}

TEST_CASE("order-six membership coefficients are recovered, not assumed") {
  // D1 D2^2 lies in the order-6 space: solve for its coordinates in the
  // basis {I, D1, D2, D1^2, D2^2, D1D2, D1^3, D2^3, D1^2D2} and compare
  // with the constructor's closed-form values.
  auto& f = one();
  GeneratorSet gens = generator_set(f.fb, f.fam);
  const MatDiffOp &d1 = gens.ops.at("d1"), &d2 = gens.ops.at("d2");
  std::vector<MatDiffOp> basis = {MatDiffOp::identity(3),
                                  d1,
                                  d2,
                                  compose(d1, d1),
                                  compose(d2, d2),
                                  compose(d1, d2),
                                  compose(d1, compose(d1, d1)),
                                  compose(d2, compose(d2, d2)),
                                  compose(d1, compose(d1, d2))};
  MatDiffOp target = compose(d1, compose(d2, d2));
  // flatten operators on a common coefficient grid
  auto flatten = [&](const MatDiffOp& op) {
    std::vector<Rational> v;
    for (int j = 0; j <= 6; ++j) {
      MatrixPoly c = op.coeff(j).is_zero() ? MatrixPoly(3) : op.coeff(j).as_polynomial();
      for (int d = 0; d <= 6; ++d)
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s) v.push_back(c.coeff(d).at(r, s));
    }
    return v;
  };
  std::vector<std::vector<Rational>> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  std::vector<Rational> rhs = flatten(target);
  std::vector<std::vector<Rational>> rows(rhs.size(), std::vector<Rational>(basis.size()));
  for (size_t i = 0; i < rhs.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) rows[i][j] = cols[j][i];
  SolveOutcome sol = solve_linear(rows, static_cast<int>(basis.size()), rhs);
  REQUIRE(sol.consistent);
  CHECK(sol.kernel_dim == 0);
  CHECK(sol.x == one_step_relation_coeffs(f.fb));
}

TEST_CASE("independence of the even-order spanning sets") {
  auto& f = one();
  GeneratorSet gens = generator_set(f.fb, f.fam);
  const MatDiffOp &d1 = gens.ops.at("d1"), &d2 = gens.ops.at("d2");
  for (int i = 2; i <= 3; ++i) {
    MatDiffOp p1 = MatDiffOp::identity(3), p2 = p1, mixed = p1;
    for (int k = 0; k < i; ++k) p1 = compose(p1, d1);
    for (int k = 0; k < i; ++k) p2 = compose(p2, d2);
    for (int k = 0; k < i - 1; ++k) mixed = compose(mixed, d1);
    mixed = compose(mixed, d2);
    // rank of the 3-column coefficient matrix must be 3
    auto flatten = [&](const MatDiffOp& op) {
      std::vector<Rational> v;
      for (int j = 0; j <= op.order(); ++j) {
        MatrixPoly c = op.coeff(j).is_zero() ? MatrixPoly(3) : op.coeff(j).as_polynomial();
        for (int d = 0; d <= 2 * i; ++d)
          for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) v.push_back(c.coeff(d).at(r, s));
      }
      return v;
    };
    std::vector<std::vector<Rational>> cols = {flatten(p1), flatten(p2), flatten(mixed)};
    size_t len = std::max({cols[0].size(), cols[1].size(), cols[2].size()});
    std::vector<std::vector<Rational>> rows(len, std::vector<Rational>(3, Rational(0)));
    for (int j = 0; j < 3; ++j)
      for (size_t r = 0; r < cols[j].size(); ++r) rows[r][j] = cols[j][r];
    NullspaceResult ns = nullspace(rows, 3, LinEngine::Reference);
    CHECK(ns.dim() == 0);
  }
}

TEST_CASE("one-step commutators vanish through order six") {
  auto& f = one();
  OperatorSpace sp = operator_space(f.fb, f.fam, 6);
  CHECK(sp.new_dims == std::vector<int>{1, 0, 2, 0, 3, 0, 3});
  for (size_t i = 0; i < sp.basis.size(); ++i)
    for (size_t j = i + 1; j < sp.basis.size(); ++j)
      CHECK(commutator(sp.basis[i], sp.basis[j]).is_zero());
}

TEST_CASE("two-step relations and recovered generators") {
  auto& f = two();
  GeneratorSet gens = generator_set(f.fb, f.fam);
  for (auto& [name, expr] : relation_exprs(f.fb, "all")) {
    auto rep = relation_check(gens, expr, name, 12);
    CHECK_MESSAGE(rep.ok(), name);
  }
  CHECK(gens.ops.at("e").coeff(4).as_polynomial() == *f.fb.g4);
  CHECK(gens.ops.at("f").coeff(4).as_polynomial() == *f.fb.h4);
  // d2, d3 are reproduced by their eigenvalue sequences
  CHECK(solve_by_eigenvalue(f.fb, f.fam, f.fb.lambda_d2, 2) == f.fb.d2);
  CHECK(solve_by_eigenvalue(f.fb, f.fam, *f.fb.lambda_d3, 2) == *f.fb.d3);
  // E and F do not commute with d1, witnessing the non-commutative part
  CHECK_FALSE(commutator(gens.ops.at("e"), gens.ops.at("d1")).is_zero());
  CHECK_FALSE(commutator(gens.ops.at("f"), gens.ops.at("d1")).is_zero());
}

TEST_CASE("two-step commutant of the defining operator") {
  auto& f = two();
  OperatorSpace sp = operator_space(f.fb, f.fam, 2);
  CommutantResult cr = commutant(sp, f.fb.d1);
  CHECK(cr.dim == 4);
  CommutantResult ci = commutant(sp, MatDiffOp::identity(4));
  CHECK(ci.dim == sp.dim());
}

TEST_CASE("generator words span the computed spaces (finite evidence)") {
  {
    auto& f = one();
    GeneratorSet gens = generator_set(f.fb, f.fam);
    OperatorSpace sp = operator_space(f.fb, f.fam, 4);
    GeneratedSpanEvidence ev = generated_span_evidence(gens, sp);
    CHECK(ev.matches);
    CHECK(ev.space_dims == std::vector<int>{1, 1, 3, 3, 6});
  }
  {
    auto& f = two();
    GeneratorSet gens = generator_set(f.fb, f.fam);
    OperatorSpace sp = operator_space(f.fb, f.fam, 4);
    GeneratedSpanEvidence ev = generated_span_evidence(gens, sp);
    CHECK(ev.matches);
    CHECK(ev.space_dims == std::vector<int>{1, 1, 4, 4, 10});
  }
}

TEST_CASE("solve_by_eigenvalue failure modes") {
  auto& f = one();
  // an eigenvalue sequence no order-1 operator can produce
  CHECK_THROWS_AS(solve_by_eigenvalue(f.fb, f.fam, f.fb.lambda_d2, 1), ComputeError);
}
