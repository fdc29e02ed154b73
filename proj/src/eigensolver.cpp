#include "mvop/eigensolver.hpp"

#include <omp.h>

namespace mvop {

Matrix sylvester_solve(const Matrix& g, const Matrix& l, const Matrix& r) {
  if (!g.is_square() || !l.is_square() || r.rows() != g.rows() || r.cols() != l.rows())
    throw ComputeError("sylvester_solve: size mismatch");
  if (resultant(char_poly(g), char_poly(l)) == 0)
    throw ComputeError("sylvester_solve: spectra overlap, no unique solution");
  // vec(G X) = (G (x) I) vec X, vec(X L) = (I (x) L^T) vec X
  int n = g.rows(), m = l.rows();
  Matrix sys = kron(g, Matrix::identity(m)) - kron(Matrix::identity(n), l.transpose());
  auto x = solve_exact(sys, vec(r), LinEngine::Parallel);
  if (!x) throw ComputeError("sylvester_solve: inconsistent system");
  return unvec(*x, n, m);
}

namespace {

struct HypData {
  Matrix x, u, v;  // t(1-t) d^2 + (X - tU) d + V
};

HypData op_data(const FamilyBundle& fb, const std::string& opname) {
  const MatDiffOp& op = (opname == "d1") ? fb.d1 : (opname == "hyp") ? fb.d_hyp : fb.d1;
  if (opname != "d1" && opname != "hyp")
    throw ParameterError("generate_family supports operators 'd1' and 'hyp'");
  auto coeffs = op.poly_coeffs();
  Matrix x = coeffs[1].coeff(0);
  Matrix u = -coeffs[1].coeff(1);
  Matrix v = coeffs[0].coeff(0);
  return HypData{x, u, v};
}

Matrix gamma_of(const HypData& h, long n) {
  Rational nn(n);
  return (-nn * (nn - 1)) * Matrix::identity(h.v.rows()) - nn * h.u + h.v;
}

// Eigenvector matrix of the triangular Gamma_n, pivot-normalized: column i
// spans ker(Gamma_n - lambda_i), scaled so entry (i,i) = 1.
Matrix leading_eigenvectors(const Matrix& gamma, const std::vector<Rational>& lambda) {
  const int sz = gamma.rows();
  Matrix lead(sz, sz);
  for (int i = 0; i < sz; ++i) {
    Matrix shifted = gamma;
    for (int d = 0; d < sz; ++d) shifted.at(d, d) -= lambda[i];
    NullspaceResult ns = nullspace(shifted, LinEngine::Reference);
    if (ns.dim() != 1)
      throw ComputeError("leading coefficient: eigenvalue multiplicity is not one");
    std::vector<Rational> col = ns.basis[0];
    if (col[i] == 0) throw ComputeError("leading coefficient: unexpected eigenvector pivot");
    Rational inv = Rational(1) / col[i];
    for (int d = 0; d < sz; ++d) lead.at(d, i) = col[d] * inv;
  }
  return lead;
}

}  // namespace

PolyFamily generate_family(const FamilyBundle& fb, const std::string& opname, long nmax,
                           Normalization normalization) {
  HypData h = op_data(fb, opname);
  const EigenSeq& lam = (opname == "hyp") ? fb.lambda_hyp : fb.lambda_d1;
  const int sz = fb.size;

  PolyFamily fam{normalization, {}};
  fam.pstar.resize(nmax + 1, MatrixPoly(sz));

  std::string error;
#pragma omp parallel for schedule(dynamic)
  for (long n = 0; n <= nmax; ++n) {
    try {
    Matrix lam_n = lam.eval(n);
    std::vector<Rational> lam_diag(sz);
    for (int i = 0; i < sz; ++i) lam_diag[i] = lam_n.at(i, i);

    std::vector<Matrix> coeff(n + 1, Matrix(sz, sz));  // ascending powers of t
    coeff[n] = leading_eigenvectors(gamma_of(h, n), lam_diag);
    for (long j = n - 1; j >= 0; --j) {
      // Gamma_j A_j - A_j Lambda_n = -(j+1)(X + j) A_{j+1}
      Matrix rhs = (Rational(-(j + 1)) *
                    (h.x + Rational(j) * Matrix::identity(sz))) * coeff[j + 1];
      coeff[j] = sylvester_solve(gamma_of(h, j), lam_n, rhs);
    }

    // column scalings on top of the pivot-normalized leading coefficient
    if (normalization == Normalization::ClosedForm || normalization == Normalization::PStarZero) {
      Matrix target;
      Matrix base;
      if (normalization == Normalization::ClosedForm) {
        target = closed_form_coeff(fb, n, 0);
        base = coeff[n];
      } else {
        // the constant-term table is in the adjoint orientation, hence transpose
        target = (n == 0) ? coeff[0] : pstar_zero(fb, n).transpose();
        base = coeff[0];
      }
      for (int c = 0; c < sz; ++c) {
        // proportionality scalar from the first nonzero base entry
        int pivot = -1;
        for (int r = 0; r < sz; ++r)
          if (base.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) throw ComputeError("normalization: zero column in generated family");
        Rational scale = target.at(pivot, c) / base.at(pivot, c);
        if (scale == 0) throw ComputeError("normalization: anchor column vanishes");
        for (long d = 0; d <= n; ++d)
          for (int r = 0; r < sz; ++r) coeff[d].at(r, c) *= scale;
      }
    } else if (normalization == Normalization::Monic) {
      Matrix inv = inverse(coeff[n]);
      for (long d = 0; d <= n; ++d) coeff[d] = coeff[d] * inv;
    }
    fam.pstar[n] = MatrixPoly(sz, coeff);
    } catch (const std::exception& e) {
#pragma omp critical
      if (error.empty()) error = "degree " + std::to_string(n) + ": " + e.what();
    }
  }
  if (!error.empty()) throw ComputeError("generate_family: " + error);
  return fam;
}

PolyFamily monic_orthogonal(const JacobiMatrixWeight& w, long nmax) {
  const int sz = w.size();
  PolyFamily fam{Normalization::Monic, {}};
  fam.pstar.reserve(nmax + 1);
  std::vector<MatrixPoly> q;        // the orthogonal run (direct convention)
  std::vector<Matrix> gram_inv;     // inverses of (Q_m, Q_m)
  for (long n = 0; n <= nmax; ++n) {
    MatrixPoly p = MatrixPoly::monomial(Matrix::identity(sz), n);
    for (long m = 0; m < n; ++m) {
      Matrix c = inner_product(p, q[m], w) * gram_inv[m];
      p -= MatrixPoly::constant(c) * q[m];
    }
    Matrix g = inner_product(p, p, w);
    gram_inv.push_back(inverse(g));
    q.push_back(p);
    fam.pstar.push_back(p.transpose());
  }
  return fam;
}

EigenCheck verify_eigen_equation(const PolyFamily& fam, const MatDiffOp& op,
                                 const EigenSeq& lambda) {
  for (long n = 0; n < fam.count(); ++n) {
    MatRatFn lhs = apply(op, fam.at(n));
    MatRatFn rhs{fam.at(n) * MatrixPoly::constant(lambda.eval(n))};
    MatRatFn res = lhs - rhs;
    if (!res.is_zero()) return EigenCheck{false, n, res};
  }
  return EigenCheck{};
}

}  // namespace mvop
