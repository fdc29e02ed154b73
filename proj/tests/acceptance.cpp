// Acceptance suite: every exact statement the library is contracted to
// reproduce, one pass/fail line per criterion, run at the default integer
// parameters and at a second rational set.  Exit code 0 iff everything
// passes.

#include <chrono>
#include <cstdio>
#include <string>

#include "mvop/algebra.hpp"
#include "mvop/hypergeom.hpp"

using namespace mvop;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(const std::string& name, bool ok, double seconds) {
  std::printf("%s  %-58s (%.1fs)\n", ok ? "PASS" : "FAIL", name.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Timer {
  Clock::time_point t0 = Clock::now();
  double secs() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

struct FamilyData {
  FamilyBundle fb;
  PolyFamily fam;   // conjugated-operator family, closed-form normalization
  PolyFamily hyp;   // diagonal-constant-term family, anchored on the constant-term table
  GeneratorSet gens;
  std::string tag;

  FamilyData(FamilyBundle bundle, const std::string& t)
      : fb(std::move(bundle)),
        fam(generate_family(fb, "d1", 32, Normalization::ClosedForm)),
        hyp(generate_family(fb, "hyp", 10, Normalization::PStarZero)),
        gens(generator_set(fb, fam)),
        tag(t) {}
};

void dims_table(const FamilyData& fd) {
  Timer t;
  const bool one = fd.fb.kind == FamilyKind::OneStep;
  const int maxorder = one ? 8 : 6;
  OperatorSpace sp = operator_space(fd.fb, fd.fam, maxorder);
  std::vector<int> want = one ? std::vector<int>{1, 0, 2, 0, 3, 0, 3, 0, 3}
                              : std::vector<int>{1, 0, 3, 0, 6, 0, 6};
  criterion("1 dimension table " + fd.tag, sp.new_dims == want && sp.stabilized, t.secs());
}

void factorization_relation(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (auto& [name, expr] : relation_exprs(fd.fb, "fact")) {
    auto rep = relation_check(fd.gens, expr, name, 10);
    ok = ok && rep.ok() && rep.operator_checked;
  }
  ok = ok && partial_products_nonzero(fd.fb).ok;
  criterion("2 cubic factorization + partial products " + fd.tag, ok, t.secs());
}

void order_six_relation(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (auto& [name, expr] : relation_exprs(fd.fb, "coef")) {
    auto rep = relation_check(fd.gens, expr, name, 12);
    ok = ok && rep.ok() && rep.operator_checked;
  }
  // membership: the order-6 space contains the mixed product
  OperatorSpace sp6 = operator_space(fd.fb, fd.fam, 6);
  MatDiffOp mixed = compose(fd.gens.ops.at("d1"),
                            compose(fd.gens.ops.at("d2"), fd.gens.ops.at("d2")));
  bool member = lambda_of_operator(fd.fb, fd.fam, mixed).in_algebra && sp6.dim() == 9;
  criterion("3 order-six combination + membership " + fd.tag, ok && member, t.secs());
}

void two_step_relations(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (auto& [name, expr] : relation_exprs(fd.fb, "two-step-list")) {
    auto rep = relation_check(fd.gens, expr, name, 12);
    ok = ok && rep.ok();
  }
  for (auto& [name, expr] : relation_exprs(fd.fb, "fe")) {
    auto rep = relation_check(fd.gens, expr, name, 12);
    ok = ok && rep.ok();
  }
  criterion("4 generator relation list + FE " + fd.tag, ok, t.secs());
}

void symmetry(const FamilyData& fd) {
  Timer t;
  bool ok = symmetry_check(fd.fb.d1, fd.fb.w_tilde, 8).symmetric &&
            symmetry_check(fd.fb.d2, fd.fb.w_tilde, 8).symmetric;
  if (fd.fb.kind == FamilyKind::TwoStep) {
    ok = ok && symmetry_check(*fd.fb.d3, fd.fb.w_tilde, 8).symmetric;
    auto se = symmetry_check(fd.gens.ops.at("e"), fd.fb.w_tilde, 8);
    auto sf = symmetry_check(fd.gens.ops.at("f"), fd.fb.w_tilde, 8);
    ok = ok && !se.symmetric && se.witness.has_value() && !sf.symmetric &&
         sf.witness.has_value();
  }
  criterion("5 operator symmetry for the conjugated weight " + fd.tag, ok, t.secs());
}

void orthogonality(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (long m = 0; m <= 6 && ok; ++m)
    for (long n = m + 1; n <= 6 && ok; ++n)
      ok = inner_product(fd.fam.at(m).transpose(), fd.fam.at(n).transpose(), fd.fb.w_tilde)
               .is_zero();
  PolyFamily monic_fam = generate_family(fd.fb, "d1", 5, Normalization::Monic);
  PolyFamily oracle = monic_orthogonal(fd.fb.w_tilde, 5);
  for (long n = 0; n <= 5 && ok; ++n) ok = (monic_fam.at(n) == oracle.at(n));
  criterion("6 orthogonality + monic oracle " + fd.tag, ok, t.secs());
}

void eigen_equations(const FamilyData& fd) {
  Timer t;
  PolyFamily fam8{Normalization::ClosedForm,
                  {fd.fam.pstar.begin(), fd.fam.pstar.begin() + 9}};
  bool ok = verify_eigen_equation(fam8, fd.fb.d1, fd.fb.lambda_d1).ok &&
            verify_eigen_equation(fam8, fd.fb.d2, fd.fb.lambda_d2).ok;
  if (fd.fb.kind == FamilyKind::TwoStep)
    ok = ok && verify_eigen_equation(fam8, *fd.fb.d3, *fd.fb.lambda_d3).ok;
  PolyFamily hyp8{Normalization::PStarZero,
                  {fd.hyp.pstar.begin(), fd.hyp.pstar.begin() + 9}};
  ok = ok && verify_eigen_equation(hyp8, fd.fb.d_hyp, fd.fb.lambda_hyp).ok;
  criterion("7 eigen equations through degree 8 " + fd.tag, ok, t.secs());
}

void closed_form_oracle(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (long n = 0; n <= 6; ++n)
    for (long l = 0; l <= n; ++l) {
      Matrix shown = closed_form_coeff(fd.fb, n, l);
      Matrix got = fd.fam.at(n).coeff(static_cast<int>(n - l));
      if (!(shown == got)) {
        ok = false;
        for (int r = 0; r < fd.fb.size; ++r)
          for (int c = 0; c < fd.fb.size; ++c)
            if (!(shown.at(r, c) == got.at(r, c)))
              std::printf("      closed-form slip at n=%ld l=%ld entry (%d,%d): %s vs %s\n", n,
                          l, r + 1, c + 1, to_string(shown.at(r, c)).c_str(),
                          to_string(got.at(r, c)).c_str());
      }
    }
  criterion("8 closed-form coefficient tables, n <= 6 " + fd.tag, ok, t.secs());
}

void constant_terms(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (long n = 1; n <= 6; ++n) {
    Matrix shown = pstar_zero(fd.fb, n);
    ok = ok && (fd.hyp.at(n).coeff(0) == shown.transpose());
    if (fd.fb.kind == FamilyKind::TwoStep) ok = ok && shown.at(1, 2) == 0;
    // triangularity of the table
    for (int r = 0; r < fd.fb.size; ++r)
      for (int c = 0; c < r; ++c) ok = ok && shown.at(r, c) == 0;
  }
  criterion("9 tabulated constant terms, n = 1..6 " + fd.tag, ok, t.secs());
}

void reconstruction(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (long n = 0; n <= 6 && ok; ++n) {
    KronSystem sys = build_kron_system(fd.fb, n);
    auto coeffs =
        hg_series_apply(sys, vec(fd.hyp.at(n).coeff(0)), static_cast<int>(n) + 5);
    for (long d = 0; d <= n && ok; ++d)
      ok = (coeffs[d] == vec(fd.hyp.at(n).coeff(static_cast<int>(d))));
    for (size_t i = n + 1; i < coeffs.size() && ok; ++i)
      for (const auto& x : coeffs[i])
        if (x != 0) ok = false;
  }
  criterion("10 series reconstruction + truncation, n <= 6 " + fd.tag, ok, t.secs());
}

void ab_factorization(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  for (long n = 0; n <= 4; ++n) {
    KronSystem sys = build_kron_system(fd.fb, n);
    ABFactorization ab = solve_ab_factorization(sys, 256);
    ok = ok && ab.residual_below(-60.0);
    if (fd.fb.kind == FamilyKind::TwoStep) ok = ok && ab.a_block_zero(1, 2, 4);
    for (double lg : ab.log10_shifted) ok = ok && lg < -60.0;
  }
  criterion("11 explicit factorization residuals, n = 0..4 " + fd.tag, ok, t.secs());
}

void ef_recovery(const FamilyData& fd) {
  Timer t;
  bool ok = fd.gens.ops.at("e").coeff(4).as_polynomial() == *fd.fb.g4 &&
            fd.gens.ops.at("f").coeff(4).as_polynomial() == *fd.fb.h4;
  criterion("12 order-four generator recovery " + fd.tag, ok, t.secs());
}

void conjugation_and_ode(const FamilyData& fd) {
  Timer t;
  bool ok = conjugate_by(fd.fb.d_original, fd.fb.psi_star) == fd.fb.d1 &&
            verify_weight_ode(fd.fb.w_tilde, fd.fb.ode_a, fd.fb.ode_b).ok;
  criterion("13 conjugation closed form + weight factorization " + fd.tag, ok, t.secs());
}

void structure(const FamilyData& fd) {
  Timer t;
  bool ok = true;
  if (fd.fb.kind == FamilyKind::TwoStep) {
    OperatorSpace sp = operator_space(fd.fb, fd.fam, 2);
    ok = ok && commutant(sp, fd.fb.d1).dim == 4;
  } else {
    OperatorSpace sp = operator_space(fd.fb, fd.fam, 6);
    for (size_t i = 0; i < sp.basis.size() && ok; ++i)
      for (size_t j = i + 1; j < sp.basis.size() && ok; ++j)
        ok = commutator(sp.basis[i], sp.basis[j]).is_zero();
  }
  for (auto& [na, la] : fd.gens.lambdas)
    for (auto& [nb, lb] : fd.gens.lambdas) {
      MatDiffOp ab = compose(fd.gens.ops.at(na), fd.gens.ops.at(nb));
      auto lab = lambda_of_operator(fd.fb, fd.fam, ab);
      ok = ok && lab.in_algebra;
      for (long n = 0; n <= 10 && ok; ++n)
        ok = (lab.lambda.eval(n) == la.eval(n) * lb.eval(n));
    }
  criterion("14 commutant / commutativity / multiplicativity " + fd.tag, ok, t.secs());
}

void run_family(FamilyData fd) {
  dims_table(fd);
  if (fd.fb.kind == FamilyKind::OneStep) {
    factorization_relation(fd);
    order_six_relation(fd);
  } else {
    two_step_relations(fd);
    ef_recovery(fd);
  }
  symmetry(fd);
  orthogonality(fd);
  eigen_equations(fd);
  closed_form_oracle(fd);
  constant_terms(fd);
  reconstruction(fd);
  ab_factorization(fd);
  conjugation_and_ode(fd);
  structure(fd);
}

}  // namespace

int main() {
  Timer total;
  std::printf("== one-step, alpha=3 beta=5 k=2\n");
  run_family(FamilyData(build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 34),
                        "[one-step 3,5,2]"));
  std::printf("== one-step, alpha=7/2 beta=11/2 k=2\n");
  run_family(FamilyData(build_one_step(OneStepParams{rat(7, 2), rat(11, 2), Rational(2)}, 34),
                        "[one-step 7/2,11/2,2]"));
  std::printf("== two-step, alpha=2 beta=6 k1=2 k2=4\n");
  run_family(FamilyData(
      build_two_step(TwoStepParams{Rational(2), Rational(6), Rational(2), Rational(4)}, 34),
      "[two-step 2,6,2,4]"));
  std::printf("== two-step, alpha=7/2 beta=11/2 k1=2 k2=4\n");
  run_family(FamilyData(
      build_two_step(TwoStepParams{rat(7, 2), rat(11, 2), Rational(2), Rational(4)}, 34),
      "[two-step 7/2,11/2,2,4]"));
  std::printf("== %d failure(s), total %.1fs\n", failures, total.secs());
  return failures ? 1 : 0;
}
