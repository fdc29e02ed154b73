#include "mvop/hypergeom.hpp"

namespace mvop {

KronSystem build_kron_system(const FamilyBundle& fb, long n) {
  const int sz = fb.size;
  Matrix id = Matrix::identity(sz);
  KronSystem sys;
  sys.size = sz * sz;
  sys.n = n;
  sys.c = kron(fb.x_hyp, id);
  sys.u_t = kron(fb.u_hyp, id);

  // T~ = I (x) Lambda_n - V (x) I resolves the sign bookkeeping; the diagonal
  // must reproduce the family's entry list, entry for entry.
  Matrix lam = fb.lambda_hyp.eval(n);
  sys.t_diag.resize(sys.size);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      sys.t_diag[static_cast<size_t>(i) * sz + j] = lam.at(j, j) - fb.v_hyp.at(i, i);
  for (int idx = 0; idx < sys.size; ++idx) {
    Rational expected = fb.t_list[idx].eval(Rational(n));
    if (sys.t_diag[idx] != expected)
      throw ComputeError("kron system diagonal mismatch at position " + std::to_string(idx + 1) +
                         ": convention bug");
  }
  return sys;
}

std::vector<std::vector<Rational>> hg_series_apply(const KronSystem& sys,
                                                   const std::vector<Rational>& v0, int terms) {
  if (static_cast<int>(v0.size()) != sys.size) throw ComputeError("series vector size mismatch");
  std::vector<std::vector<Rational>> out;
  out.reserve(terms);
  out.push_back(v0);
  for (int i = 0; i + 1 < terms; ++i) {
    // rhs = (T~ + i U~ + i(i-1) I) v_i
    std::vector<Rational> rhs(sys.size, Rational(0));
    const auto& vi = out.back();
    Rational ii(i);
    for (int r = 0; r < sys.size; ++r) {
      Rational acc = (sys.t_diag[r] + ii * (ii - 1)) * vi[r];
      for (int c = 0; c < sys.size; ++c) {
        if (sys.u_t.at(r, c) == 0 || vi[c] == 0) continue;
        acc += ii * sys.u_t.at(r, c) * vi[c];
      }
      rhs[r] = acc;
    }
    Matrix lhs = sys.c;
    for (int r = 0; r < sys.size; ++r) lhs.at(r, r) += ii;
    lhs *= Rational(i + 1);
    auto next = solve_exact(lhs, rhs, LinEngine::Reference);
    if (!next) throw ComputeError("series recurrence: singular step matrix");
    out.push_back(std::move(*next));
  }
  return out;
}

AnnihilationResult annihilation_check(const FamilyBundle& fb, const PolyFamily& hyp_family,
                                      long n, int extra) {
  KronSystem sys = build_kron_system(fb, n);
  std::vector<Rational> v0 = vec(hyp_family.at(n).coeff(0));
  auto coeffs = hg_series_apply(sys, v0, static_cast<int>(n) + 1 + extra);
  for (size_t i = n + 1; i < coeffs.size(); ++i)
    for (const auto& x : coeffs[i])
      if (x != 0)
        return AnnihilationResult{false, n, static_cast<int>(i)};
  return AnnihilationResult{};
}

}  // namespace mvop
