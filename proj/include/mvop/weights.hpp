#ifndef MVOP_WEIGHTS_HPP
#define MVOP_WEIGHTS_HPP

#include <memory>
#include <mutex>
#include <map>
#include <optional>
#include <vector>

#include "mvop/diffop.hpp"
#include "mvop/matrix_poly.hpp"

namespace mvop {

// Weight of Jacobi type W(t) = t^alpha (1-t)^beta M(t) on [0,1], M a
// symmetric matrix polynomial, parameters exact with alpha, beta > -1.
// All integrals are normalized by the scalar Beta(alpha+1, beta+1) so every
// moment is rational; orthogonality and symmetry statements are homogeneous
// and unaffected.
class JacobiMatrixWeight {
 public:
  JacobiMatrixWeight(Rational alpha, Rational beta, MatrixPoly m);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const MatrixPoly& density() const { return m_; }
  int size() const { return m_.size(); }

  // Normalized moment of t^d against the scalar factor.
  Rational scalar_moment(long d) const;

 private:
  Rational alpha_, beta_;
  MatrixPoly m_;
  struct Cache {
    std::mutex mu;
    std::map<long, Rational> memo;
  };
  std::shared_ptr<Cache> cache_;
};

// B(alpha+m+1, beta+p+1) / B(alpha+1, beta+1) as an exact rational.
Rational normalized_moment(const Rational& alpha, const Rational& beta, long m, long p);

// (P, Q) = int P W Q^* dt, normalized.
Matrix inner_product(const MatrixPoly& p, const MatrixPoly& q, const JacobiMatrixWeight& w);

// <P, Q> = (P^*, Q^*)^*.
Matrix skew_bracket(const MatrixPoly& p, const MatrixPoly& q, const JacobiMatrixWeight& w);

struct SymmetryWitness {
  int a, i, j;  // left monomial  t^a E_ij
  int b, k, l;  // right monomial t^b E_kl
  Matrix lhs, rhs;
};
struct SymmetryResult {
  bool symmetric = true;
  std::optional<SymmetryWitness> witness;
};

// Exact check of <op P, Q> = <P, op Q> over all matrix monomials up to the
// given degree; returns the first violating pair.
SymmetryResult symmetry_check(const MatDiffOp& op, const JacobiMatrixWeight& w, int degmax);

JacobiMatrixWeight conjugate_weight(const JacobiMatrixWeight& w, const MatrixPoly& psi);

// Leading principal minors of M(t) positive at each probe point.
bool positivity_probe(const JacobiMatrixWeight& w, const std::vector<Rational>& points = {
                          rat(1, 4), rat(1, 2), rat(3, 4)});

// Exact residual of t(1-t) M' = ((1-t)A + tB) M + M ((1-t)A + tB)^T, the
// polynomial form of the weight factorization through T' = (A/t + B/(1-t)) T.
struct WeightOdeResult {
  bool ok = false;
  MatrixPoly residual;
};
WeightOdeResult verify_weight_ode(const JacobiMatrixWeight& w_tilde, const Matrix& a,
                                  const Matrix& b);

}  // namespace mvop

#endif
