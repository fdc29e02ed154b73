#include "families_util.hpp"

namespace mvop {

std::string FamilyBundle::params_text() const {
  if (kind == FamilyKind::OneStep)
    return "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " k=" + to_string(k1);
  return "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " k1=" + to_string(k1) +
         " k2=" + to_string(k2);
}

Matrix pstar_zero(const FamilyBundle& fb, long n) {
  if (fb.kind == FamilyKind::OneStep)
    return detail::one_step_pstar_zero(fb.alpha, fb.beta, fb.k1, n);
  return detail::two_step_pstar_zero(fb.alpha, fb.beta, fb.k1, fb.k2, n);
}

Matrix closed_form_coeff(const FamilyBundle& fb, long n, long l) {
  if (fb.kind == FamilyKind::OneStep)
    return detail::one_step_closed_form_coeff(fb.alpha, fb.beta, fb.k1, n, l);
  return detail::two_step_closed_form_coeff(fb.alpha, fb.beta, fb.k1, fb.k2, n, l);
}

std::vector<Rational> one_step_relation_coeffs(const FamilyBundle& fb) {
  if (fb.kind != FamilyKind::OneStep)
    throw ParameterError("relation coefficients s1..s9 exist for the one-step family only");
  return detail::one_step_coef_values(fb.alpha, fb.beta, fb.k1);
}

EigenSeq lambda_sequence(const FamilyBundle& fb, const std::string& name) {
  if (name == "d1") return fb.lambda_d1;
  if (name == "d2") return fb.lambda_d2;
  if (name == "hyp") return fb.lambda_hyp;
  if (name == "d3" && fb.lambda_d3) return *fb.lambda_d3;
  if (name == "e" && fb.lambda_e) return *fb.lambda_e;
  if (name == "f" && fb.lambda_f) return *fb.lambda_f;
  throw ParameterError("unknown operator name '" + name + "' for this family");
}

namespace detail {

MatDiffOp second_order_op(const Matrix& c1, const Matrix& l1, const Matrix& c0) {
  int n = c1.rows();
  Poly t = Poly::variable();
  MatrixPoly f2 = MatrixPoly::scalar(n, t - t * t);
  MatrixPoly f1(n, {c1, -l1});
  MatrixPoly f0 = MatrixPoly::constant(c0);
  return MatDiffOp::from_polys(n, {f0, f1, f2});
}

void check_genericity(const std::vector<Poly>& diag, long bound) {
  const int sz = static_cast<int>(diag.size());
  std::vector<std::vector<Rational>> vals(bound + 1, std::vector<Rational>(sz));
  for (long n = 0; n <= bound; ++n)
    for (int i = 0; i < sz; ++i) vals[n][i] = diag[i].eval(Rational(n));
  for (long n = 0; n <= bound; ++n)
    for (int i = 0; i < sz; ++i)
      for (int j = i + 1; j < sz; ++j)
        if (vals[n][i] == vals[n][j])
          throw ParameterError("genericity violation: repeated eigenvalue at n=" +
                               std::to_string(n));
  for (long n = 1; n <= bound; ++n)
    for (long j = 0; j < n; ++j)
      for (int i1 = 0; i1 < sz; ++i1)
        for (int i2 = 0; i2 < sz; ++i2)
          if (vals[j][i1] == vals[n][i2])
            throw ParameterError("genericity violation: spectra of degrees " +
                                 std::to_string(j) + " and " + std::to_string(n) + " meet");
}

}  // namespace detail
}  // namespace mvop
