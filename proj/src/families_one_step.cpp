#include "families_util.hpp"
#include "mvop/gamma_eval.hpp"

namespace mvop {

namespace {

// Gamma-argument families for the closed-form coefficients: 0 holds the
// plain integer arguments in n and l, 1 the -alpha-n shifts, 2 the
// -alpha-beta-2n shifts.
enum { FamInt = 0, FamAlpha = 1, FamAlphaBeta = 2 };

// Weight diagonal: the degeneration of the two-step binomial pattern with
// the two step positions merged.  This is the unique (up to scale) diagonal
// making the conjugated operator symmetric; exactness of that statement is
// asserted by the symmetry tests.
struct OneStepData {
  Rational a, b, k;

  Rational w1() const { return binomial(b, to_long(k) - 1) * binomial(b + 1, to_long(k) - 1) / k; }
  Rational w2() const {
    return 2 * binomial(b, to_long(k)) * binomial(b + 1, to_long(k) - 1) / (k + 1);
  }
  Rational w3() const { return binomial(b, to_long(k)) * binomial(b + 1, to_long(k)) / (k + 1); }
};

Rational sign_l(long l, const Rational& v) { return (l % 2) ? -v : v; }

}  // namespace

FamilyBundle build_one_step(const OneStepParams& p, long genericity_bound) {
  const Rational a = p.alpha, b = p.beta, k = p.k;
  if (!(a > -1 && b > -1)) throw ParameterError("need alpha > -1 and beta > -1");
  if (!is_integer(k) || !(k >= 1 && k <= b))
    throw ParameterError("need integer k with 1 <= k <= beta");

  OneStepData d{a, b, k};
  const Rational w1 = d.w1(), w2 = d.w2(), w3 = d.w3();
  if (w1 == 0 || w2 == 0 || w3 == 0)
    throw ParameterError("degenerate weight: one of w1, w2, w3 vanishes (w1=" + to_string(w1) +
                         ", w2=" + to_string(w2) + ", w3=" + to_string(w3) + ")");

  Poly t = Poly::variable();
  Poly one_minus_t = Poly(Rational(1)) - t;

  MatrixPoly m_orig = MatrixPoly::from_entries(
      3, {{w1 * t * t, Poly(), Poly()}, {Poly(), w2 * t, Poly()}, {Poly(), Poly(), Poly(w3)}});
  JacobiMatrixWeight w_original(a, b, m_orig);

  // conjugator Psi^*
  MatrixPoly psi_star = MatrixPoly::from_entries(
      3, {{Poly(Rational(1)), Poly(), Poly()},
          {Poly(Rational(1)), one_minus_t, Poly()},
          {Poly(Rational(1)), 2 * one_minus_t, one_minus_t * one_minus_t}});
  JacobiMatrixWeight w_tilde = conjugate_weight(w_original, psi_star.transpose());

  // original operator, zero-order term over 1 - t
  MatDiffOp d_original;
  {
    MatrixPoly f2 = MatrixPoly::scalar(3, t * one_minus_t);
    Matrix c1 = Matrix::from_rows({{a + 3, 0, 0}, {0, a + 2, 0}, {0, 0, a + 1}});
    Matrix l1 = Matrix::from_rows({{a + b + 4, 0, 0}, {0, a + b + 3, 0}, {0, 0, a + b + 2}});
    MatrixPoly f1(3, {c1, -l1});
    Matrix n0 = Matrix::from_rows(
        {{-2 * (b - k + 1), 2 * (b - k + 1), 0}, {0, -(b - k + 2), b - k + 2}, {0, 0, 0}});
    Matrix n1 = Matrix::from_rows({{0, 0, 0}, {k + 1, -(k + 1), 0}, {0, 2 * k, -2 * k}});
    MatRatFn f0(MatrixPoly(3, {n0, n1}), one_minus_t);
    d_original = MatDiffOp(3, {f0, MatRatFn(f1), MatRatFn(f2)});
  }

  // conjugated operator (hypergeometric form)
  MatDiffOp d1 = detail::second_order_op(
      Matrix::from_rows({{a + 3, 0, 0}, {-1, a + 2, 0}, {0, -2, a + 1}}),
      Matrix::from_rows({{a + b + 4, 0, 0}, {0, a + b + 5, 0}, {0, 0, a + b + 6}}),
      Matrix::from_rows({{0, 2 * (b - k + 1), 0},
                         {0, -(a + b - k + 2), b - k + 2},
                         {0, 0, -2 * (a + b - k + 3)}}));

  // weight ODE residues
  Matrix ode_a = Matrix::from_rows(
      {{1, rat(-1, 2), 0}, {0, rat(1, 2), -1}, {0, 0, 0}});
  Matrix ode_b = Matrix::from_rows(
      {{0, rat(-1, 2), 0}, {0, -1, -1}, {0, 0, -2}});

  // diagonal-constant-term form
  const Rational s2 = a + b - k + 2, s3 = a + b - k + 3, s4 = a + b - k + 4;
  Matrix v_hyp = Matrix::from_rows({{0, 0, 0}, {0, -s2, 0}, {0, 0, -2 * s3}});
  Matrix u_hyp = Matrix::from_rows(
      {{a + b + 4, -1, 2 / s2}, {0, a + b + 5, -2 * s3 / s2}, {0, 0, a + b + 6}});
  Rational c_1 = a * b * b + 10 * a * b + 18 * a + 2 * b * b + 14 * b + 16 + 2 * a * a * b +
                 8 * a * a - 2 * k * a * b - 10 * k * a - 4 * k * b - 14 * k + a * a * a -
                 2 * k * a * a + k * k * a + 2 * k * k;
  Rational c_2 = a * b + 5 * a + 3 * b + 8 + a * a - k * a - 3 * k;
  Matrix x_hyp = Matrix::from_rows({{(a + 1) * s4 / s2, (a + 1) * s4 / (s2 * s3), 0},
                                    {2 * (b - k + 1) / s2, c_1 / (s2 * s4), 2 * (a + 2) / s4},
                                    {0, (b - k + 2) * s2 / (s3 * s4), c_2 / s4}});
  MatDiffOp d_hyp = detail::second_order_op(x_hyp, u_hyp, v_hyp);

  auto tq = detail::n_quad;
  std::vector<Poly> tl = {
      tq(a + b + 3, 0),        tq(a + b + 4, -s2),     tq(a + b + 5, -2 * s3),
      tq(a + b + 3, s2),       tq(a + b + 4, 0),       tq(a + b + 5, -s4),
      tq(a + b + 3, 2 * s3),   tq(a + b + 4, s4),      tq(a + b + 5, 0)};
  detail::check_genericity({tl[0], tl[1], tl[2]}, genericity_bound);

  EigenSeq lambda_d1 = EigenSeq::diagonal({tl[0], tl[1], tl[2]});
  EigenSeq lambda_d2 = EigenSeq::diagonal(
      {tl[0], (tq(a + b + 4, 0) + Poly(k * s2)) * rat(1, 2), Poly(k * s3)});

  // Second generator; the (2,1) leading entry and the (3,3) first-order
  // entry are pinned by the unique operator attached to this eigenvalue
  // sequence, re-derived in the tests.
  MatDiffOp d2;
  {
    MatrixPoly f2 = MatrixPoly::from_entries(
        3, {{t * one_minus_t, Poly(), Poly()},
            {-t * rat(1, 2), t * one_minus_t * rat(1, 2), Poly()},
            {Poly(), -t, Poly()}});
    Matrix c1 = Matrix::from_rows({{s4, b - k + 1, 0},
                                   {-s4 / 2, (a + 4) / Rational(2), (b - k + 2) / Rational(2)},
                                   {0, -(a + b - k + 5), -(b - k + 2)}});
    Matrix l1 = Matrix::from_rows({{a + b + 4, b - k + 1, 0},
                                   {0, (a + b + 5) / Rational(2), (b - k + 2) / Rational(2)},
                                   {0, 0, 0}});
    MatrixPoly f1(3, {c1, -l1});
    Matrix c0 = Matrix::from_rows({{0, -k * (b - k + 1), 0},
                                   {0, k * s2 / 2, -k * (b - k + 2) / 2},
                                   {0, 0, k * s3}});
    d2 = MatDiffOp::from_polys(3, {MatrixPoly::constant(c0), f1, f2});
  }

  FamilyBundle fb{FamilyKind::OneStep,
                  3,
                  a,
                  b,
                  k,
                  Rational(0),
                  genericity_bound,
                  w_original,
                  w_tilde,
                  psi_star,
                  d_original,
                  d1,
                  d2,
                  std::nullopt,
                  x_hyp,
                  u_hyp,
                  v_hyp,
                  d_hyp,
                  ode_a,
                  ode_b,
                  tl,
                  EigenSeq::diagonal({tl[0], tl[1], tl[2]}),
                  lambda_d1,
                  lambda_d2,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt};
  if (!positivity_probe(fb.w_original) || !positivity_probe(fb.w_tilde))
    throw ParameterError("weight fails the positivity probe on (0,1)");
  return fb;
}

namespace detail {

Matrix one_step_pstar_zero(const Rational& a, const Rational& b, const Rational& k, long n) {
  if (n < 1) throw ParameterError("constant-term table requires n >= 1");
  Rational en(n);
  const Rational s2 = a + b - k + 2, s3 = a + b - k + 3, s4 = a + b - k + 4;
  auto sgn_n = [&](const Rational& v) { return (n % 2) ? -v : v; };
  Rational p11 = sgn_n((s2 + en) * (s3 + en) * pochhammer(a + 1, n) /
                       (s3 * s2 * pochhammer(a + b + en + 3, n)));
  Rational p12 = sgn_n(2 * en * (b - k + 1) * (s3 + en) * pochhammer(a + 2, n - 1) /
                       ((k + en + 1) * s4 * s2 * pochhammer(a + b + en + 4, n - 1)));
  // the n(n-1) prefactor kills n < 2 before the negative-index ratio forms
  Rational p13 =
      n < 2 ? Rational(0)
            : sgn_n(en * (en - 1) * (b - k + 1) * (b - k + 2) * pochhammer(a + 3, n - 2) /
                    ((k + en) * (k + en + 1) * s3 * s4 * pochhammer(a + b + en + 5, n - 2)));
  Rational p22 = -sgn_n(s2 * (s4 + en) * pochhammer(a + 2, n) /
                        (en * s4 * pochhammer(a + b + en + 4, n)));
  Rational p23 = -sgn_n((b - k + 2) * s2 * pochhammer(a + 3, n - 1) /
                        ((k + en) * s4 * pochhammer(a + b + en + 5, n - 1)));
  Rational p33 = sgn_n(s2 * s3 * pochhammer(a + 3, n) /
                       (en * (en + 1) * pochhammer(a + b + en + 5, n)));
  return Matrix::from_rows({{p11, p12, p13}, {0, p22, p23}, {0, 0, p33}});
}

Matrix one_step_closed_form_coeff(const Rational& a, const Rational& b, const Rational& k, long n,
                               long l) {
  if (l < 0 || l > n) throw ParameterError("closed-form coefficient requires 0 <= l <= n");
  Rational en(n), el(l);

  auto core = [&](int shift_ab, int shift_a, int shift_l_low) {
    // Gamma(n+1) Gamma(l-2-a-n) Gamma(shift_ab - b - a - 2n) over
    // Gamma(l+1) Gamma(n-l+1) Gamma(shift_a - a - n) Gamma(l + shift_l_low - b - a - 2n)
    GammaProduct gp;
    gp.num(en + 1, FamInt);
    gp.num(el - 2 - a - en, FamAlpha);
    gp.num(Rational(shift_ab) - b - a - 2 * en, FamAlphaBeta);
    gp.den(el + 1, FamInt);
    gp.den(en - el + 1, FamInt);
    gp.den(Rational(shift_a) - a - en, FamAlpha);
    gp.den(el + Rational(shift_l_low) - b - a - 2 * en, FamAlphaBeta);
    return gp;
  };

  Rational x11;
  {
    Rational poly = 5 * en * en + 2 * en + 2 * k - 2 * el + 2 * el * en * en + 2 * el * en -
                    3 * k * el * el + 5 * k * el + k * k * el * el - 3 * k * k * el +
                    7 * en * k + 2 * k * k + 2 * el * el - el * b * b - 3 * el * b +
                    3 * el * el * b + 4 * k * el * b + 3 * k * k * en + en * a * a + 3 * en * a +
                    5 * en * en * a + k * k * en * en + 7 * k * en * en + 2 * k * en * en * en +
                    en * en * a * a + 2 * en * en * en * a - 2 * k * el * en * en -
                    2 * k * k * en * el + 4 * a * k * en * en + 2 * a * k * k * en +
                    2 * a * a * k * en + 2 * el * en * en * b - 2 * a * k * en * el +
                    2 * a * el * en * b + 2 * k * en * el * b + en * en * en * en +
                    2 * en * el * b + 8 * a * k * en + 2 * a * el * en + 4 * en * en * en +
                    2 * a * k * el + 3 * a * k * k + 3 * a * k + a * a * k * k -
                    2 * a * k * k * el + a * a * k + el * el * b * b - 2 * k * el * el * b +
                    2 * a * k * el * b;
    GammaProduct gp = core(-2, 0, -2);
    x11 = sign_l(l, poly * gp.value(poly == 0) / ((k + en + 1) * (k + en)));
  }

  Rational x12;
  {
    Rational poly = en * a + a * k + el * b + 2 * el + en * k - k * el + 2 * k + en * en + 2 * en;
    GammaProduct gp = core(-3, -1, -3);
    x12 = -sign_l(l, poly * gp.value(poly == 0) / (k + en));
  }

  Rational x13;
  {
    GammaProduct gp = core(-4, -2, -4);
    x13 = sign_l(l, gp.value());
  }

  Rational x21;
  {
    Rational poly = en * a + a * k + el * b + 2 * el - b - 2 + en * k - k * el + 2 * k +
                    en * en + en;
    GammaProduct gp;
    gp.num(-2 - b - a - 2 * en, FamAlphaBeta);
    gp.num(el - 2 - a - en, FamAlpha);
    gp.num(en + 1, FamInt);
    gp.den(en - el + 1, FamInt);
    gp.den(el - 3 - b - a - 2 * en, FamAlphaBeta);
    gp.den(-a - en, FamAlpha);
    gp.den(el, FamInt);
    x21 = sign_l(l, poly * gp.value(poly == 0) / ((k + en) * (k + en + 1)));
  }

  Rational x22;
  {
    Rational poly = -4 * el * en * k + 4 * en * en + 4 * en + 4 * k + 12 * el - el * en * en +
                    4 * el * en + 2 * k * el * el - 10 * k * el + k * k * el + 2 * en * k -
                    2 * k * k - 4 * el * el + 2 * k * b + 2 * el * b * b + 10 * el * b -
                    2 * el * el * b + 2 * el * a * b + a * k * b - 3 * k * el * b +
                    en * en * b - k * k * en + en * a * a + 2 * en * b + 4 * en * a +
                    2 * en * en * a + 3 * en * el * b + k * en * b + a * k * en - a * el * en +
                    en * a * b + en * en * en - 3 * a * k * el - a * k * k + 4 * a * k +
                    4 * el * a + a * a * k;
    GammaProduct gp = core(-3, -1, -3);
    x22 = sign_l(l, poly * gp.value(poly == 0) / (2 * (b + 1 - k) * (k + en)));
  }

  Rational x23;
  {
    Rational poly = b + 3 + a - k + en - el;
    GammaProduct gp = core(-4, -2, -4);
    x23 = -sign_l(l, poly * gp.value(poly == 0) / (b + 1 - k));
  }

  Rational x31;
  {
    GammaProduct gp;
    gp.num(en + 1, FamInt);
    gp.num(el - 2 - a - en, FamAlpha);
    gp.num(-2 - b - a - 2 * en, FamAlphaBeta);
    gp.den(el - 1, FamInt);
    gp.den(en - el + 1, FamInt);
    gp.den(-a - en, FamAlpha);
    gp.den(el - 4 - b - a - 2 * en, FamAlphaBeta);
    x31 = sign_l(l, gp.value() / ((k + en) * (k + en + 1)));
  }

  Rational x32;
  {
    Rational poly = b + 3 + a - k + en - el;
    GammaProduct gp;
    gp.num(-b - 3 - a - 2 * en, FamAlphaBeta);
    gp.num(el - 2 - a - en, FamAlpha);
    gp.num(en + 1, FamInt);
    gp.den(el - 4 - b - a - 2 * en, FamAlphaBeta);
    gp.den(en - el + 1, FamInt);
    gp.den(-a - en - 1, FamAlpha);
    gp.den(el, FamInt);
    x32 = sign_l(l, poly * gp.value(poly == 0) / ((k + en) * (b + 1 - k)));
  }

  Rational x33;
  {
    Rational poly = (b + 4 + a - k + en - el) * (b + 3 + a - k + en - el);
    GammaProduct gp = core(-4, -2, -4);
    x33 = sign_l(l, poly * gp.value(poly == 0) / ((b + 1 - k) * (b + 2 - k)));
  }

  return Matrix::from_rows({{x11, x12, x13}, {x21, x22, x23}, {x31, x32, x33}});
}

std::vector<Rational> one_step_coef_values(const Rational& a, const Rational& b,
                                           const Rational& k) {
  const Rational s2 = a + b - k + 2, s3 = a + b - k + 3;
  Rational s_1 = 0;
  Rational s_2 = -rat(1, 3) * k * (k + 1) * s3 * s2;
  Rational s_3 = rat(1, 3) * k * (k + 1) * s3 * s2;
  Rational s_4 = -rat(1, 3) * k * s3;
  Rational s_5 = rat(-2, 3) - rat(1, 3) * a - k * (b + 1) + k * k - k * a -
                 rat(1, 3) * b - rat(4, 3) * k;
  Rational s_6 = rat(2, 3) + rat(1, 3) * a + rat(4, 3) * k * (b + 1) -
                 rat(4, 3) * k * k + rat(4, 3) * k * a + rat(1, 3) * b + 2 * k;
  Rational s_7 = 0, s_8 = rat(2, 3), s_9 = rat(1, 3);
  return {s_1, s_2, s_3, s_4, s_5, s_6, s_7, s_8, s_9};
}

}  // namespace detail
}  // namespace mvop
