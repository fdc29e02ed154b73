#ifndef MVOP_FAMILIES_HPP
#define MVOP_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mvop/diffop.hpp"
#include "mvop/eigen_seq.hpp"
#include "mvop/weights.hpp"

namespace mvop {

enum class FamilyKind { OneStep, TwoStep };

struct OneStepParams {
  Rational alpha, beta, k;
};

struct TwoStepParams {
  Rational alpha, beta, k1, k2;
};

// All named objects of one family: the original operator and weight, the
// conjugator and conjugated pair, the diagonal-constant-term hypergeometric
// data, the second (and third) generators, eigenvalue sequences, and the
// residue matrices of the weight ODE.  Everything is validated on
// construction: parameter ranges, weight positivity, and genericity of the
// eigenvalue lists up to `genericity_bound`.
struct FamilyBundle {
  FamilyKind kind;
  int size;
  Rational alpha, beta, k1, k2;  // one-step stores k in k1
  long genericity_bound;

  JacobiMatrixWeight w_original;
  JacobiMatrixWeight w_tilde;
  MatrixPoly psi_star;
  MatDiffOp d_original;
  MatDiffOp d1;  // conjugated operator, hypergeometric form
  MatDiffOp d2;
  std::optional<MatDiffOp> d3;

  Matrix x_hyp, u_hyp, v_hyp;  // D = t(1-t) d^2 + (X - tU) d + V, V diagonal
  MatDiffOp d_hyp;
  Matrix ode_a, ode_b;

  // Kronecker-square eigenvalue list (size^2 polynomials in n, the diagonal
  // of the vectorized zero-order term).
  std::vector<Poly> t_list;

  EigenSeq lambda_hyp;  // natural diagonal order
  EigenSeq lambda_d1;   // family's own diagonal order
  EigenSeq lambda_d2;
  std::optional<EigenSeq> lambda_d3, lambda_e, lambda_f;
  std::optional<MatrixPoly> g4, h4;  // closed-form 4th-order leading coefficients

  std::string params_text() const;
};

FamilyBundle build_one_step(const OneStepParams& p, long genericity_bound = 16);
FamilyBundle build_two_step(const TwoStepParams& p, long genericity_bound = 16);

// Tabulated constant term of the degree-n member (n >= 1) of the diagonal-V
// family; upper triangular, two-step entry (2,3) identically zero.
Matrix pstar_zero(const FamilyBundle& fb, long n);

// Closed-form coefficient A_l^n (coefficient of t^{n-l}) of the conjugated
// family, evaluated from the Gamma-ratio expressions.
Matrix closed_form_coeff(const FamilyBundle& fb, long n, long l);

// One-step order-six relation coefficients s_1..s_9.
std::vector<Rational> one_step_relation_coeffs(const FamilyBundle& fb);

// Eigenvalue sequence by operator name ("d1", "d2", "d3", "e", "f", "hyp").
EigenSeq lambda_sequence(const FamilyBundle& fb, const std::string& name);

}  // namespace mvop

#endif
