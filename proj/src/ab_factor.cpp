#include <mpfr.h>

#include <cmath>

#include "mvop/hypergeom.hpp"

// Explicit factorization U~ = I + A + B, T~ = AB.  Because every block of A
// is diagonal, the system splits per diagonal slot into an upper triangular
// factorization whose diagonal entries solve scalar quadratics
//   x^2 - (U_ii - 1) x + T~(i, slot) = 0
// (rational roots -n and n + U_ii - 1 on the slot's own block) and whose
// off-diagonal entries follow by back substitution.  The roots are generally
// irrational, so this path runs in MPFR at a configurable precision.

namespace mvop {

namespace {

class Mpf {
 public:
  explicit Mpf(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpf(const Mpf& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mpf& operator=(const Mpf& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Mpf() { mpfr_clear(v_); }

  static Mpf from(const Rational& q, mpfr_prec_t prec) {
    Mpf x(prec);
    mpfr_set_q(x.v_, q.get_mpq_t(), MPFR_RNDN);
    return x;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  bool is_zero() const { return mpfr_zero_p(v_); }

 private:
  mpfr_t v_;
};

void add(Mpf& r, const Mpf& a, const Mpf& b) { mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN); }
void sub(Mpf& r, const Mpf& a, const Mpf& b) { mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN); }
void mul(Mpf& r, const Mpf& a, const Mpf& b) { mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN); }
void div(Mpf& r, const Mpf& a, const Mpf& b) { mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN); }

std::string text(const Mpf& x) {
  if (x.is_zero()) return "0";
  char* s = nullptr;
  mpfr_asprintf(&s, "%.40Re", x.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace

bool ABFactorization::residual_below(double exp10) const {
  return log10_sum < exp10 && log10_prod < exp10;
}

bool ABFactorization::a_block_zero(int bi, int bj, int nblk) const {
  int slots = static_cast<int>(a.size()) / nblk;
  for (int s = 0; s < slots; ++s)
    if (a[bi * slots + s][bj * slots + s] != "0") return false;
  return true;
}

ABFactorization solve_ab_factorization(const KronSystem& sys, int prec_bits) {
  const int nn = sys.size;
  int nblk = 1;
  while (nblk * nblk < nn) ++nblk;
  const mpfr_prec_t prec = prec_bits;

  // recover the base matrix U from its Kronecker square
  Matrix u(nblk, nblk);
  for (int i = 0; i < nblk; ++i)
    for (int j = 0; j < nblk; ++j) u.at(i, j) = sys.u_t.at(i * nblk, j * nblk);

  std::vector<std::vector<Mpf>> amat(nn, std::vector<Mpf>(nn, Mpf(prec)));
  ABFactorization out;
  out.prec_bits = prec_bits;

  for (int s = 0; s < nblk; ++s) {
    std::vector<Mpf> gamma(nblk, Mpf(prec));
    for (int i = 0; i < nblk; ++i) {
      Rational trace = u.at(i, i) - 1;
      Rational tval = sys.t_diag[static_cast<size_t>(i) * nblk + s];
      if (i == s) {
        // rational branch: roots -n and n + U_ii - 1
        gamma[i] = Mpf::from(Rational(-sys.n), prec);
        out.branch.push_back("block " + std::to_string(i + 1) + " slot " + std::to_string(s + 1) +
                             ": -n");
      } else {
        Rational disc = trace * trace - 4 * tval;
        if (disc < 0)
          throw ComputeError("ab factorization: negative discriminant, complex branch needed");
        Mpf root(prec);
        mpfr_set_q(root.get(), disc.get_mpq_t(), MPFR_RNDN);
        mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
        Mpf tr = Mpf::from(trace, prec);
        Mpf g(prec);
        sub(g, tr, root);
        mpfr_div_ui(g.get(), g.get(), 2, MPFR_RNDN);
        gamma[i] = g;
        out.branch.push_back("block " + std::to_string(i + 1) + " slot " + std::to_string(s + 1) +
                             ": smaller root");
      }
      amat[i * nblk + s][i * nblk + s] = gamma[i];
    }
    // back substitution for the off-diagonal entries,
    //   a_ij (U_jj - 1 - g_i - g_j) = -g_i U_ij - sum_m a_im (U_mj - a_mj)
    for (int j = 1; j < nblk; ++j)
      for (int i = j - 1; i >= 0; --i) {
        Mpf acc(prec), tmp(prec), tmp2(prec);
        mul(acc, gamma[i], Mpf::from(-u.at(i, j), prec));
        for (int m = i + 1; m < j; ++m) {
          const Mpf& aim = amat[i * nblk + s][m * nblk + s];
          sub(tmp, Mpf::from(u.at(m, j), prec), amat[m * nblk + s][j * nblk + s]);
          mul(tmp2, aim, tmp);
          sub(acc, acc, tmp2);
        }
        Mpf den = Mpf::from(u.at(j, j) - 1, prec);
        sub(den, den, gamma[i]);
        sub(den, den, gamma[j]);
        if (den.is_zero()) throw ComputeError("ab factorization: vanishing fill denominator");
        div(amat[i * nblk + s][j * nblk + s], acc, den);
      }
  }

  // B = U~ - A - I and the residual norms
  std::vector<std::vector<Mpf>> bmat(nn, std::vector<Mpf>(nn, Mpf(prec)));
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nn; ++c) {
      Mpf x = Mpf::from(sys.u_t.at(r, c) - (r == c ? 1 : 0), prec);
      sub(x, x, amat[r][c]);
      bmat[r][c] = x;
    }

  Mpf res_sum(prec), res_prod(prec), acc(prec), tmp(prec);
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nn; ++c) {
      // A + B + I - U~ (identically zero by construction, still measured)
      Mpf x = amat[r][c];
      add(x, x, bmat[r][c]);
      sub(x, x, Mpf::from(sys.u_t.at(r, c) - (r == c ? 1 : 0), prec));
      mpfr_abs(x.get(), x.get(), MPFR_RNDN);
      if (mpfr_cmp(x.get(), res_sum.get()) > 0) res_sum = x;

      mpfr_set_zero(acc.get(), 1);
      for (int m = 0; m < nn; ++m) {
        if (amat[r][m].is_zero()) continue;
        mul(tmp, amat[r][m], bmat[m][c]);
        add(acc, acc, tmp);
      }
      if (r == c) sub(acc, acc, Mpf::from(sys.t_diag[r], prec));
      mpfr_abs(acc.get(), acc.get(), MPFR_RNDN);
      if (mpfr_cmp(acc.get(), res_prod.get()) > 0) res_prod = acc;
    }

  out.a.assign(nn, {});
  out.b.assign(nn, {});
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nn; ++c) {
      out.a[r].push_back(text(amat[r][c]));
      out.b[r].push_back(text(bmat[r][c]));
    }
  out.residual_sum = text(res_sum);
  out.residual_prod = text(res_prod);
  auto log10_of = [&](const Mpf& x) {
    if (x.is_zero()) return -1.0e9;
    Mpf lg(prec);
    mpfr_log10(lg.get(), x.get(), MPFR_RNDN);
    return mpfr_get_d(lg.get(), MPFR_RNDN);
  };
  out.log10_sum = log10_of(res_sum);
  out.log10_prod = log10_of(res_prod);

  // shifted products (A+iI)(B+iI) against T~ + i U~ + i(i-1) I
  for (int shift = 0; shift <= 5; ++shift) {
    Mpf worst(prec);
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < nn; ++c) {
        mpfr_set_zero(acc.get(), 1);
        for (int m = 0; m < nn; ++m) {
          Mpf am = amat[r][m];
          if (r == m) mpfr_add_ui(am.get(), am.get(), shift, MPFR_RNDN);
          if (am.is_zero()) continue;
          Mpf bm = bmat[m][c];
          if (m == c) mpfr_add_ui(bm.get(), bm.get(), shift, MPFR_RNDN);
          mul(tmp, am, bm);
          add(acc, acc, tmp);
        }
        Rational want = Rational(shift) * sys.u_t.at(r, c);
        if (r == c) want += sys.t_diag[r] + Rational(shift) * (shift - 1);
        sub(acc, acc, Mpf::from(want, prec));
        mpfr_abs(acc.get(), acc.get(), MPFR_RNDN);
        if (mpfr_cmp(acc.get(), worst.get()) > 0) worst = acc;
      }
    out.log10_shifted.push_back(log10_of(worst));
  }
  return out;
}

}  // namespace mvop
