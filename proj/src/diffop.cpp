#include "mvop/diffop.hpp"

#include <sstream>

namespace mvop {

MatDiffOp::MatDiffOp(int size, std::vector<MatRatFn> coeffs) : size_(size), c_(std::move(coeffs)) {
  normalize();
}

void MatDiffOp::normalize() {
  for (const auto& f : c_)
    if (!f.is_zero() && f.size() != size_) throw ComputeError("operator coefficient size mismatch");
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

MatDiffOp MatDiffOp::identity(int size) {
  return MatDiffOp(size, {MatRatFn(MatrixPoly::identity(size))});
}

MatDiffOp MatDiffOp::derivative(int size, int order) {
  std::vector<MatRatFn> c(order + 1, MatRatFn::zero(size));
  c[order] = MatRatFn(MatrixPoly::identity(size));
  return MatDiffOp(size, std::move(c));
}

MatDiffOp MatDiffOp::from_polys(int size, const std::vector<MatrixPoly>& coeffs) {
  std::vector<MatRatFn> c;
  c.reserve(coeffs.size());
  for (const auto& p : coeffs) c.emplace_back(p);
  return MatDiffOp(size, std::move(c));
}

std::vector<MatrixPoly> MatDiffOp::poly_coeffs() const {
  std::vector<MatrixPoly> out;
  out.reserve(c_.size());
  for (const auto& f : c_) out.push_back(f.is_zero() ? MatrixPoly(size_) : f.as_polynomial());
  return out;
}

MatDiffOp MatDiffOp::operator+(const MatDiffOp& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (size_ != o.size_) throw ComputeError("operator size mismatch in +");
  std::vector<MatRatFn> c(std::max(c_.size(), o.c_.size()), MatRatFn::zero(size_));
  for (size_t j = 0; j < c.size(); ++j) {
    if (j < c_.size()) c[j] = c[j] + c_[j];
    if (j < o.c_.size()) c[j] = c[j] + o.c_[j];
  }
  return MatDiffOp(size_, std::move(c));
}

MatDiffOp MatDiffOp::operator-(const MatDiffOp& o) const { return *this + (o * Rational(-1)); }

MatDiffOp MatDiffOp::operator*(const Rational& s) const {
  std::vector<MatRatFn> c;
  c.reserve(c_.size());
  for (const auto& f : c_) c.push_back(f * s);
  return MatDiffOp(size_, std::move(c));
}

bool MatDiffOp::operator==(const MatDiffOp& o) const {
  if (size_ != o.size_ || c_.size() != o.c_.size()) return false;
  for (size_t j = 0; j < c_.size(); ++j)
    if (!(c_[j] == o.c_[j])) return false;
  return true;
}

std::string MatDiffOp::describe() const {
  std::ostringstream os;
  os << "order " << order() << " operator on " << size_ << "x" << size_ << " functions";
  return os.str();
}

MatRatFn apply(const MatDiffOp& op, const MatrixPoly& p) {
  if (op.is_zero() || p.is_zero()) return MatRatFn::zero(op.size() ? op.size() : p.size());
  if (op.size() != p.size()) throw ComputeError("apply: operator/function size mismatch");
  MatRatFn acc = MatRatFn::zero(op.size());
  MatrixPoly deriv = p;
  for (int j = 0; j <= op.order(); ++j) {
    if (!op.coeff(j).is_zero() && !deriv.is_zero())
      acc = acc + op.coeff(j) * MatRatFn(deriv);
    deriv = deriv.derivative();
  }
  return acc;
}

MatrixPoly apply_poly(const MatDiffOp& op, const MatrixPoly& p) {
  return apply(op, p).as_polynomial();
}

MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b) {
  if (a.is_zero() || b.is_zero()) return MatDiffOp(a.size() ? a.size() : b.size());
  if (a.size() != b.size()) throw ComputeError("compose: size mismatch");
  const int n = a.size();
  std::vector<MatRatFn> out(a.order() + b.order() + 1, MatRatFn::zero(n));
  // F d^j (G d^k) = F sum_i C(j,i) G^{(j-i)} d^{i+k}
  for (int j = 0; j <= a.order(); ++j) {
    const MatRatFn& fj = a.coeff(j);
    if (fj.is_zero()) continue;
    for (int k = 0; k <= b.order(); ++k) {
      MatRatFn g = b.coeff(k);
      if (g.is_zero()) continue;
      // i runs down from j so derivatives of g accumulate once
      Rational binom(1);
      for (int i = j; i >= 0; --i) {
        if (!g.is_zero()) out[i + k] = out[i + k] + (fj * g) * binom;
        if (i > 0) {
          binom = binom * Rational(i) / Rational(j - i + 1);
          g = g.derivative();
        }
      }
    }
  }
  return MatDiffOp(n, std::move(out));
}

MatDiffOp commutator(const MatDiffOp& a, const MatDiffOp& b) {
  return compose(a, b) - compose(b, a);
}

MatDiffOp conjugate_by(const MatDiffOp& op, const MatRatFn& psi) {
  if (op.size() != psi.size()) throw ComputeError("conjugate_by: size mismatch");
  const int n = op.size();
  MatRatFn psi_inv = inverse_fn(psi);

  // coefficients of F -> op(psi F): G_i = sum_{j>=i} C(j,i) F_j psi^{(j-i)}
  std::vector<MatRatFn> g(op.order() + 1, MatRatFn::zero(n));
  for (int j = 0; j <= op.order(); ++j) {
    const MatRatFn& fj = op.coeff(j);
    if (fj.is_zero()) continue;
    MatRatFn d = psi;
    Rational binom(1);
    for (int i = j; i >= 0; --i) {
      g[i] = g[i] + (fj * d) * binom;
      if (i > 0) {
        binom = binom * Rational(i) / Rational(j - i + 1);
        d = d.derivative();
      }
    }
  }
  for (auto& gi : g) gi = psi_inv * gi;
  return MatDiffOp(n, std::move(g));
}

MatDiffOp conjugate_by(const MatDiffOp& op, const MatrixPoly& psi) {
  return conjugate_by(op, MatRatFn(psi));
}

HypergeometricCheck is_hypergeometric_form(const MatDiffOp& op) {
  HypergeometricCheck res;
  for (int j = 0; j <= op.order(); ++j) {
    const MatRatFn& f = op.coeff(j);
    if (f.is_zero()) continue;
    if (!f.is_polynomial()) {
      res.ok = false;
      res.violating_order = j;
      res.reason = "coefficient has denominator " + f.den().str();
      return res;
    }
    if (f.num().degree() > j) {
      res.ok = false;
      res.violating_order = j;
      res.reason = "coefficient degree " + std::to_string(f.num().degree()) +
                   " exceeds derivative order";
      return res;
    }
  }
  return res;
}

Matrix gamma_n(const MatDiffOp& op, long n) {
  if (op.order() != 2) throw ComputeError("gamma_n: operator must have order 2");
  const int sz = op.size();
  auto c2 = op.coeff(2), c1 = op.coeff(1), c0 = op.coeff(0);
  if (!c2.is_polynomial() || !c1.is_polynomial() || !c0.is_polynomial())
    throw ComputeError("gamma_n: operator not in hypergeometric form");
  Poly t_one_minus_t = Poly::variable() - Poly::variable() * Poly::variable();
  if (!(c2.as_polynomial() == MatrixPoly::scalar(sz, t_one_minus_t)))
    throw ComputeError("gamma_n: leading coefficient is not t(1-t) I");
  if (c1.as_polynomial().degree() > 1 || c0.as_polynomial().degree() > 0)
    throw ComputeError("gamma_n: operator does not have the required shape");
  Matrix u = -c1.as_polynomial().coeff(1);
  Matrix v = c0.as_polynomial().coeff(0);
  Rational nn(n);
  return (-nn * (nn - 1)) * Matrix::identity(sz) - nn * u + v;
}

}  // namespace mvop
