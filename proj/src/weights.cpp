#include "mvop/weights.hpp"

#include <omp.h>

namespace mvop {

JacobiMatrixWeight::JacobiMatrixWeight(Rational alpha, Rational beta, MatrixPoly m)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), m_(std::move(m)),
      cache_(std::make_shared<Cache>()) {
  if (!(alpha_ > -1 && beta_ > -1))
    throw ParameterError("weight parameters require alpha, beta > -1");
  if (!(m_.transpose() == m_)) throw ComputeError("weight density must be symmetric");
}

Rational normalized_moment(const Rational& alpha, const Rational& beta, long m, long p) {
  if (!(alpha > -1 && beta > -1)) throw ParameterError("moment requires alpha, beta > -1");
  if (m < 0 || p < 0) throw ParameterError("moment indices must be nonnegative");
  return pochhammer(alpha + 1, m) * pochhammer(beta + 1, p) / pochhammer(alpha + beta + 2, m + p);
}

Rational JacobiMatrixWeight::scalar_moment(long d) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->memo.find(d);
  if (it != cache_->memo.end()) return it->second;
  Rational v = normalized_moment(alpha_, beta_, d, 0);
  cache_->memo.emplace(d, v);
  return v;
}

namespace {

// Moment-weighted coefficient sum of a matrix polynomial against t^shift.
Matrix weighted_sum(const MatrixPoly& z, long shift, const JacobiMatrixWeight& w) {
  Matrix acc = Matrix::zero(z.size(), z.size());
  for (int d = 0; d <= z.degree(); ++d) acc += z.coeff(d) * w.scalar_moment(d + shift);
  return acc;
}

}  // namespace

Matrix inner_product(const MatrixPoly& p, const MatrixPoly& q, const JacobiMatrixWeight& w) {
  if (p.size() != w.size() || q.size() != w.size())
    throw ComputeError("inner product size mismatch");
  MatrixPoly r = p * w.density() * q.transpose();
  return weighted_sum(r, 0, w);
}

Matrix skew_bracket(const MatrixPoly& p, const MatrixPoly& q, const JacobiMatrixWeight& w) {
  return inner_product(p.transpose(), q.transpose(), w).transpose();
}

SymmetryResult symmetry_check(const MatDiffOp& op, const JacobiMatrixWeight& w, int degmax) {
  const int n = w.size();
  auto check = is_hypergeometric_form(op);
  if (!check.ok)
    throw ComputeError("symmetry check requires a polynomial (hypergeometric form) operator");

  // op applied to every monomial t^a E_ij, and the two moment tables
  //   z[a][ij][b] = sum_d mom(d+b) ((op t^a E_ij)^T M)_d
  //   y[b][kl][a] = sum_d mom(d+a) (M (op t^b E_kl))_d
  const int nm = degmax + 1;
  std::vector<std::vector<MatrixPoly>> applied(nm, std::vector<MatrixPoly>(n * n));
  for (int a = 0; a < nm; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix e = Matrix::zero(n, n);
        e.at(i, j) = 1;
        applied[a][i * n + j] = apply_poly(op, MatrixPoly::monomial(e, a));
      }

  std::vector<std::vector<std::vector<Matrix>>> ztab(nm), ytab(nm);
  for (int a = 0; a < nm; ++a) {
    ztab[a].assign(n * n, {});
    ytab[a].assign(n * n, {});
  }
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int a = 0; a < nm; ++a)
    for (int ij = 0; ij < n * n; ++ij) {
      MatrixPoly zm = applied[a][ij].transpose() * w.density();
      MatrixPoly ym = w.density() * applied[a][ij];
      std::vector<Matrix> zrow(nm), yrow(nm);
      for (int b = 0; b < nm; ++b) {
        zrow[b] = weighted_sum(zm, b, w);
        yrow[b] = weighted_sum(ym, b, w);
      }
      ztab[a][ij] = std::move(zrow);
      ytab[a][ij] = std::move(yrow);
    }

  for (int a = 0; a < nm; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < nm; ++b)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              // <op t^aE_ij, t^bE_kl> = (z E_kl)^T,  <t^aE_ij, op t^bE_kl> = (E_ji y)^T
              const Matrix& z = ztab[a][i * n + j][b];
              const Matrix& y = ytab[b][k * n + l][a];
              bool equal = true;
              for (int r = 0; r < n && equal; ++r)
                for (int s = 0; s < n && equal; ++s) {
                  const Rational lhs = (s == l) ? z.at(r, k) : Rational(0);
                  const Rational rhs = (r == j) ? y.at(i, s) : Rational(0);
                  if (lhs != rhs) equal = false;
                }
              if (!equal) {
                Matrix lhs = Matrix::zero(n, n), rhs = Matrix::zero(n, n);
                for (int r = 0; r < n; ++r)
                  for (int s = 0; s < n; ++s) {
                    if (s == l) lhs.at(r, s) = z.at(r, k);
                    if (r == j) rhs.at(r, s) = y.at(i, s);
                  }
                // transpose to present the bracket itself
                return SymmetryResult{false,
                                      SymmetryWitness{a, i, j, b, k, l, lhs.transpose(),
                                                      rhs.transpose()}};
              }
            }
  return SymmetryResult{};
}

JacobiMatrixWeight conjugate_weight(const JacobiMatrixWeight& w, const MatrixPoly& psi) {
  if (psi.size() != w.size()) throw ComputeError("conjugate_weight size mismatch");
  return JacobiMatrixWeight(w.alpha(), w.beta(), psi * w.density() * psi.transpose());
}

bool positivity_probe(const JacobiMatrixWeight& w, const std::vector<Rational>& points) {
  for (const auto& t : points) {
    if (!(t > 0 && t < 1)) throw ParameterError("positivity probe point outside (0,1)");
    Matrix m = w.density().eval(t);
    for (int k = 1; k <= w.size(); ++k) {
      Matrix lead(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
      if (!(determinant(lead) > 0)) return false;
    }
  }
  return true;
}

WeightOdeResult verify_weight_ode(const JacobiMatrixWeight& w_tilde, const Matrix& a,
                                  const Matrix& b) {
  const MatrixPoly& m = w_tilde.density();
  Poly t = Poly::variable();
  Poly one_minus_t = Poly(Rational(1)) - t;
  MatrixPoly mix = one_minus_t * MatrixPoly::constant(a) + t * MatrixPoly::constant(b);
  MatrixPoly residual = (t * one_minus_t) * m.derivative() - mix * m - m * mix.transpose();
  return WeightOdeResult{residual.is_zero(), residual};
}

}  // namespace mvop
