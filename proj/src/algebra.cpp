#include "mvop/algebra.hpp"

#include <omp.h>

#include <algorithm>

namespace mvop {

namespace {

// Column layout of the unknown coefficient matrices F_{j,i} (j = derivative
// order, i = power of t, i <= j): blocks ordered by j ascending, so column
// prefixes correspond exactly to bounded-order operator subspaces.
struct Layout {
  int n, r;
  long block_off(int j) const { return static_cast<long>(n) * n * j * (j + 1) / 2; }
  long col(int j, int i, int row, int c) const {
    return block_off(j) + (static_cast<long>(i) * n + row) * n + c;
  }
  long cols() const { return block_off(r + 1); }
};

// d^j/dt^j then multiply by t^i bookkeeping: coefficient matrices of the
// family member and their inverse leading coefficient.
struct MemberData {
  std::vector<Matrix> a;  // coefficients of P_n^*
  Matrix an_inv;
};

MemberData member_data(const PolyFamily& fam, long n) {
  MemberData md;
  const MatrixPoly& p = fam.at(n);
  if (p.degree() != n) throw ComputeError("family member has wrong degree");
  md.a.reserve(n + 1);
  for (long d = 0; d <= n; ++d) md.a.push_back(p.coeff(static_cast<int>(d)));
  md.an_inv = inverse(md.a[n]);
  return md;
}

// rows of the homogeneous membership system for one degree n
std::vector<std::vector<Rational>> membership_rows(const Layout& lay, const MemberData& md,
                                                   long n) {
  const int nn = lay.n;
  std::vector<std::vector<Rational>> rows;
  if (n == 0) return rows;
  rows.reserve(static_cast<size_t>(n) * nn * nn);

  // Dcoef(j, s) = (s+j)!/s! * A_{s+j}
  auto dcoef_factor = [](long s, int j) {
    Rational f(1);
    for (int i = 1; i <= j; ++i) f *= Rational(s + i);
    return f;
  };
  std::vector<Matrix> wq(n);  // A_q * A_n^{-1}
  for (long q = 0; q < n; ++q) wq[q] = md.a[q] * md.an_inv;
  std::vector<Rational> cj(lay.r + 1, Rational(0));  // n!/(n-j)!
  for (int j = 0; j <= lay.r && j <= n; ++j) cj[j] = dcoef_factor(n - j, j);

  for (long q = 0; q < n; ++q)
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b) {
        std::vector<Rational> row(lay.cols(), Rational(0));
        for (int j = 0; j <= lay.r; ++j) {
          for (int i = 0; i <= j; ++i) {
            long s = q - i;
            if (s < 0 || s + j > n) continue;
            Rational f = dcoef_factor(s, j);
            const Matrix& as = md.a[s + j];
            for (int c = 0; c < nn; ++c) {
              if (as.at(c, b) == 0) continue;
              row[lay.col(j, i, a, c)] += f * as.at(c, b);
            }
          }
          if (j <= n && cj[j] != 0) {
            for (int c = 0; c < nn; ++c) {
              if (wq[q].at(a, c) == 0) continue;
              Rational f = -cj[j] * wq[q].at(a, c);
              for (int d = 0; d < nn; ++d) {
                if (md.a[n].at(d, b) == 0) continue;
                row[lay.col(j, j, c, d)] += f * md.a[n].at(d, b);
              }
            }
          }
        }
        rows.push_back(std::move(row));
      }
  return rows;
}

MatDiffOp unpack_operator(const Layout& lay, const std::vector<Rational>& v) {
  std::vector<MatrixPoly> coeffs;
  coeffs.reserve(lay.r + 1);
  for (int j = 0; j <= lay.r; ++j) {
    std::vector<Matrix> c(j + 1, Matrix(lay.n, lay.n));
    for (int i = 0; i <= j; ++i)
      for (int row = 0; row < lay.n; ++row)
        for (int col = 0; col < lay.n; ++col) c[i].at(row, col) = v[lay.col(j, i, row, col)];
    coeffs.emplace_back(lay.n, std::move(c));
  }
  return MatDiffOp::from_polys(lay.n, coeffs);
}

// Exact eigen re-verification of a candidate operator on degrees 0..bound.
bool verify_member(const MatDiffOp& op, const PolyFamily& fam, long bound) {
  for (long n = 0; n <= bound; ++n) {
    MatrixPoly dp = apply_poly(op, fam.at(n));
    if (dp.is_zero()) continue;
    if (dp.degree() > n) return false;
    Matrix lam = inverse(fam.at(n).leading()) * dp.coeff(static_cast<int>(n));
    if (!(dp == fam.at(n) * MatrixPoly::constant(lam))) return false;
  }
  return true;
}

std::vector<int> dims_from_free_cols(const Layout& lay, const std::vector<int>& free_cols) {
  std::vector<int> dims(lay.r + 1, 0);
  for (int f : free_cols) {
    int j = 0;
    while (lay.block_off(j + 1) <= f) ++j;
    dims[j]++;
  }
  return dims;
}

}  // namespace

OperatorSpace operator_space(const FamilyBundle& fb, const PolyFamily& fam, int order_bound,
                             long nmax) {
  if (nmax < 0) nmax = 2 * order_bound + 4;
  const long nstab = nmax + 4;
  const long verify_bound = std::max<long>(3 * order_bound + 8, nstab);
  if (fam.count() <= verify_bound)
    throw ComputeError("operator_space: family generated to degree " +
                       std::to_string(fam.count() - 1) + ", need " +
                       std::to_string(verify_bound));
  Layout lay{fb.size, order_bound};

  std::vector<std::vector<std::vector<Rational>>> per_n(nstab + 1);
#pragma omp parallel for schedule(dynamic)
  for (long n = 1; n <= nstab; ++n) per_n[n] = membership_rows(lay, member_data(fam, n), n);

  std::vector<std::vector<Rational>> rows, rows_stab;
  for (long n = 1; n <= nstab; ++n)
    for (auto& r : per_n[n]) {
      if (n <= nmax) rows.push_back(r);
      rows_stab.push_back(std::move(r));
    }

  NullspaceResult ns = nullspace(rows, lay.cols());
  NullspaceResult ns_stab = nullspace(rows_stab, lay.cols());

  OperatorSpace out;
  out.order_bound = order_bound;
  out.nmax_used = nmax;
  out.new_dims = dims_from_free_cols(lay, ns_stab.free_cols);
  out.stabilized = (ns.free_cols == ns_stab.free_cols);
  if (!out.stabilized)
    throw ComputeError("operator_space: dimensions not stabilized at nmax=" +
                       std::to_string(nmax) + "; raise nmax");
  out.verified_to = verify_bound;
  for (size_t k = 0; k < ns_stab.basis.size(); ++k) {
    MatDiffOp op = unpack_operator(lay, ns_stab.basis[k]);
    if (!verify_member(op, fam, verify_bound))
      throw ComputeError("operator_space: basis element failed exact re-verification");
    int j = 0;
    while (lay.block_off(j + 1) <= ns_stab.free_cols[k]) ++j;
    out.basis.push_back(std::move(op));
    out.basis_order.push_back(j);
  }
  return out;
}

LambdaOfOperator lambda_of_operator(const FamilyBundle& fb, const PolyFamily& fam,
                                    const MatDiffOp& op) {
  const int r = std::max(op.order(), 0);
  const long points = r + 1, spare = 4;
  LambdaOfOperator out;
  if (fam.count() < points + spare) throw ComputeError("family too short for interpolation");

  std::vector<Matrix> lam;
  for (long n = 0; n < points + spare; ++n) {
    MatrixPoly dp = apply_poly(op, fam.at(n));
    if (!dp.is_zero() && dp.degree() > n) return out;
    Matrix l = dp.is_zero() ? Matrix::zero(fb.size, fb.size)
                            : inverse(fam.at(n).leading()) * dp.coeff(static_cast<int>(n));
    if (!(MatRatFn(dp) == MatRatFn(fam.at(n) * MatrixPoly::constant(l)))) {
      out.failed_n = n;
      return out;
    }
    lam.push_back(l);
  }

  // Newton interpolation through n = 0..r, entrywise.
  EigenSeq seq(fb.size);
  for (int i = 0; i < fb.size; ++i)
    for (int j = 0; j < fb.size; ++j) {
      std::vector<Rational> dd(points);
      for (long p = 0; p < points; ++p) dd[p] = lam[p].at(i, j);
      for (long lev = 1; lev < points; ++lev)
        for (long p = points - 1; p >= lev; --p)
          dd[p] = (dd[p] - dd[p - 1]) / Rational(lev);
      Poly poly(dd[points - 1]);
      for (long p = points - 2; p >= 0; --p) {
        poly = poly * Poly(std::vector<Rational>{Rational(-p), Rational(1)});
        poly += Poly(dd[p]);
      }
      seq.at(i, j) = poly;
    }
  for (long n = points; n < points + spare; ++n)
    if (!(seq.eval(n) == lam[n])) {
      out.failed_n = n;
      return out;
    }
  out.in_algebra = true;
  out.lambda = seq;
  return out;
}

RelationReport relation_check(const GeneratorSet& gens, const GenExpr& expr,
                              const std::string& name, long n_check) {
  RelationReport rep;
  rep.name = name;

  EigenSeq lam_total(gens.size);
  int total_order = 0;
  for (const auto& term : expr) {
    EigenSeq acc = EigenSeq::constant(Matrix::identity(gens.size));
    int order = 0;
    for (const auto& g : term.word) {
      if (!gens.lambdas.count(g)) throw ParameterError("unknown generator '" + g + "'");
      acc = acc * gens.lambdas.at(g);
      order += gens.ops.at(g).order();
    }
    lam_total = lam_total + acc * term.coeff;
    total_order = std::max(total_order, order);
  }
  rep.lambda_ok = lam_total.is_zero();

  rep.points_ok = true;
  for (long n = 0; n <= n_check && rep.points_ok; ++n)
    if (!lam_total.eval(n).is_zero()) rep.points_ok = false;

  if (total_order <= 6) {
    rep.operator_checked = true;
    MatDiffOp sum(gens.size);
    for (const auto& term : expr) {
      MatDiffOp acc = MatDiffOp::identity(gens.size);
      for (const auto& g : term.word) acc = compose(acc, gens.ops.at(g));
      sum = sum + acc * term.coeff;
    }
    rep.operator_ok = sum.is_zero();
  }
  return rep;
}

namespace {

GenExpr word(const Rational& c, std::vector<std::string> names) {
  return GenExpr{GenTerm{c, std::move(names)}};
}

GenExpr add(GenExpr a, const GenExpr& b) {
  for (const auto& t : b) a.push_back(t);
  return a;
}

GenExpr scale(GenExpr a, const Rational& c) {
  for (auto& t : a) t.coeff *= c;
  return a;
}

GenExpr mul(const GenExpr& a, const GenExpr& b) {
  GenExpr out;
  for (const auto& ta : a)
    for (const auto& tb : b) {
      GenTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.word = ta.word;
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      out.push_back(std::move(t));
    }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, GenExpr>> relation_exprs(const FamilyBundle& fb,
                                                            const std::string& which) {
  const Rational a = fb.alpha, b = fb.beta, k1 = fb.k1, k2 = fb.k2;
  std::vector<std::pair<std::string, GenExpr>> out;
  if (fb.kind == FamilyKind::OneStep) {
    const Rational k = k1;
    if (which == "fact" || which == "all") {
      GenExpr f1 = add(word(1, {"d1"}), word(-1, {"d2"}));
      GenExpr f2 = add(word(1, {"d2"}), word(-k * (a + b - k + 3), {}));
      GenExpr f3 = add(add(word(1, {"d1"}), word(-2, {"d2"})),
                       word((1 + k) * (a + b - k + 2), {}));
      out.emplace_back("factorized-cubic", mul(mul(f1, f2), f3));
    }
    if (which == "coef" || which == "all") {
      auto s = one_step_relation_coeffs(fb);
      GenExpr e = word(s[0], {});
      e = add(e, word(s[1], {"d1"}));
      e = add(e, word(s[2], {"d2"}));
      e = add(e, word(s[3], {"d1", "d1"}));
      e = add(e, word(s[4], {"d2", "d2"}));
      e = add(e, word(s[5], {"d1", "d2"}));
      e = add(e, word(s[6], {"d1", "d1", "d1"}));
      e = add(e, word(s[7], {"d2", "d2", "d2"}));
      e = add(e, word(s[8], {"d1", "d1", "d2"}));
      e = add(e, word(-1, {"d1", "d2", "d2"}));
      out.emplace_back("order-six-combination", e);
    }
    return out;
  }

  const Rational dk1 = k1 - k2 - 1, dk2 = k1 - k2 - 2, dk0 = k1 - k2;
  if (which == "two-step-list" || which == "all") {
    out.emplace_back("d2-annihilates",
                     mul(word(1, {"d2"}), add(add(word(1, {"d1"}), word(1, {"d3"})),
                                              word(-k1 * (a + b - k1 + 3), {}))));
    GenExpr lhs = add(word(dk0, {"d2"}), word(dk1, {"d3"}));
    GenExpr rhs = add(add(word(-1, {"d1"}), word(dk1, {"d2"})),
                      add(word(dk2, {"d3"}), word((1 + k2) * (a + b - k2 + 2), {})));
    out.emplace_back("paired-quadratic", mul(lhs, rhs));
    out.emplace_back("d1e-ed3",
                     add(add(word(1, {"d1", "e"}), word(1, {"e", "d3"})),
                         word(-(k1 * (a + b - k1 + 2) + 1 + k2), {"e"})));
    out.emplace_back("e-d1-commutator",
                     add(add(word(1, {"e", "d1"}), word(-1, {"d1", "e"})),
                         word(-dk1, {"e"})));
    out.emplace_back("fd1-d3f",
                     add(add(word(1, {"f", "d1"}), word(1, {"d3", "f"})),
                         word(-(k1 * (a + b - k1 + 2) + 1 + k2), {"f"})));
    out.emplace_back("d1-f-commutator",
                     add(add(word(1, {"d1", "f"}), word(-1, {"f", "d1"})),
                         word(-dk1, {"f"})));
    out.emplace_back("d2e-vanishes", word(1, {"d2", "e"}));
    out.emplace_back("fd2-vanishes", word(1, {"f", "d2"}));
  }
  if (which == "fe" || which == "all") {
    GenExpr t1 = word(1, {"d2"});
    GenExpr t2 = add(word(dk0, {"d2"}), word(dk1 * (a + b - 2 * k1 + 3), {}));
    GenExpr t3 = add(word(-dk0, {"d2"}), word(-dk1 * dk1 * (a + b - k1 - k2 + 1), {}));
    GenExpr t4 = add(add(word(1, {"d2"}), word(1, {"d3"})),
                     word(-(a + b - k1 - k2 + 2), {}));
    GenExpr rhs = mul(mul(t1, t2), mul(t3, t4));
    GenExpr lhs = word(dk1 * dk1 * dk1 / (dk0 * dk0), {"f", "e"});
    out.emplace_back("fe-product", add(lhs, scale(rhs, -1)));
  }
  return out;
}

PartialProducts partial_products_nonzero(const FamilyBundle& fb) {
  if (fb.kind != FamilyKind::OneStep)
    throw ParameterError("partial products check is a one-step statement");
  const Rational a = fb.alpha, b = fb.beta, k = fb.k1;
  EigenSeq id = EigenSeq::constant(Matrix::identity(3));
  EigenSeq f1 = fb.lambda_d1 - fb.lambda_d2;
  EigenSeq f2 = fb.lambda_d2 - id * (k * (a + b - k + 3));
  EigenSeq f3 = fb.lambda_d1 - fb.lambda_d2 * Rational(2) + id * ((1 + k) * (a + b - k + 2));

  PartialProducts out;
  out.ok = true;
  auto witness = [&](const EigenSeq& s, const std::string& name) {
    if (s.is_zero()) {
      out.ok = false;
      out.detail.push_back(name + ": vanishes identically");
      return;
    }
    for (long n = 0; n <= 12; ++n)
      if (!s.eval(n).is_zero()) {
        out.detail.push_back(name + ": nonzero at n=" + std::to_string(n));
        return;
      }
    out.detail.push_back(name + ": nonzero only beyond n=12");
  };
  witness(f1, "factor-1");
  witness(f2, "factor-2");
  witness(f3, "factor-3");
  witness(f1 * f2, "product-12");
  witness(f1 * f3, "product-13");
  witness(f2 * f3, "product-23");
  EigenSeq triple = f1 * f2 * f3;
  if (!triple.is_zero()) {
    out.ok = false;
    out.detail.push_back("triple product: nonzero");
  } else {
    out.detail.push_back("triple product: vanishes identically");
  }
  return out;
}

MatDiffOp solve_by_eigenvalue(const FamilyBundle& fb, const PolyFamily& fam, const EigenSeq& l,
                              int order) {
  Layout lay{fb.size, order};
  const long nmax = 2 * order + 4;
  if (fam.count() <= nmax) throw ComputeError("solve_by_eigenvalue: family too short");
  const int nn = fb.size;

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto dcoef_factor = [](long s, int j) {
    Rational f(1);
    for (int i = 1; i <= j; ++i) f *= Rational(s + i);
    return f;
  };
  for (long n = 0; n <= nmax; ++n) {
    const MatrixPoly& p = fam.at(n);
    Matrix ln = l.eval(n);
    for (long q = 0; q <= n; ++q) {
      Matrix target = p.coeff(static_cast<int>(q)) * ln;
      for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b) {
          std::vector<Rational> row(lay.cols(), Rational(0));
          for (int j = 0; j <= order; ++j)
            for (int i = 0; i <= j; ++i) {
              long s = q - i;
              if (s < 0 || s + j > n) continue;
              Rational f = dcoef_factor(s, j);
              const Matrix& as = p.coeff(static_cast<int>(s + j));
              for (int c = 0; c < nn; ++c) {
                if (as.at(c, b) == 0) continue;
                row[lay.col(j, i, a, c)] += f * as.at(c, b);
              }
            }
          rows.push_back(std::move(row));
          rhs.push_back(target.at(a, b));
        }
    }
  }
  SolveOutcome sol = solve_linear(rows, lay.cols(), rhs);
  if (!sol.consistent)
    throw ComputeError("solve_by_eigenvalue: no operator with this eigenvalue sequence");
  if (sol.kernel_dim != 0)
    throw ComputeError("solve_by_eigenvalue: solution not unique (faithfulness violation)");
  return unpack_operator(lay, sol.x);
}

CommutantResult commutant(const OperatorSpace& space, const MatDiffOp& op) {
  CommutantResult out;
  if (space.basis.empty()) return out;
  const int n = op.size();
  std::vector<MatDiffOp> comms;
  comms.reserve(space.basis.size());
  int max_order = 0, max_deg = 0;
  for (const auto& bop : space.basis) {
    MatDiffOp c = commutator(bop, op);
    for (int j = 0; j <= c.order(); ++j)
      if (!c.coeff(j).is_zero())
        max_deg = std::max(max_deg, c.coeff(j).as_polynomial().degree());
    max_order = std::max(max_order, c.order());
    comms.push_back(std::move(c));
  }
  // flatten each commutator to a coordinate column; kernel = commutant
  long coords = static_cast<long>(max_order + 1) * (max_deg + 1) * n * n;
  std::vector<std::vector<Rational>> rows(coords,
                                          std::vector<Rational>(space.basis.size(), Rational(0)));
  for (size_t kk = 0; kk < comms.size(); ++kk) {
    long idx = 0;
    for (int j = 0; j <= max_order; ++j)
      for (int d = 0; d <= max_deg; ++d)
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) {
            MatRatFn f = comms[kk].coeff(j);
            rows[idx][kk] = f.is_zero() ? Rational(0) : f.as_polynomial().coeff(d).at(r, c);
            ++idx;
          }
  }
  NullspaceResult ns = nullspace(rows, static_cast<int>(space.basis.size()),
                                 LinEngine::Reference);
  out.dim = ns.dim();
  for (const auto& v : ns.basis) {
    MatDiffOp acc(n);
    for (size_t kk = 0; kk < space.basis.size(); ++kk)
      if (v[kk] != 0) acc = acc + space.basis[kk] * v[kk];
    out.basis.push_back(std::move(acc));
  }
  return out;
}

GeneratedSpanEvidence generated_span_evidence(const GeneratorSet& gens,
                                              const OperatorSpace& space) {
  const int n = gens.size;
  const int bound = space.order_bound;

  // every word over the non-identity generators with total order <= bound
  std::vector<std::pair<MatDiffOp, int>> words = {{MatDiffOp::identity(n), 0}};
  std::vector<std::string> letters;
  for (const auto& [name, op] : gens.ops)
    if (name != "i") letters.push_back(name);
  size_t frontier_begin = 0;
  while (true) {
    size_t frontier_end = words.size();
    bool grew = false;
    for (size_t w = frontier_begin; w < frontier_end; ++w)
      for (const auto& g : letters) {
        int order = words[w].second + gens.ops.at(g).order();
        if (order > bound) continue;
        words.emplace_back(compose(words[w].first, gens.ops.at(g)), order);
        grew = true;
      }
    frontier_begin = frontier_end;
    if (!grew) break;
  }

  auto flatten = [&](const MatDiffOp& op) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(bound + 1) * (bound + 1) * n * n);
    for (int j = 0; j <= bound; ++j) {
      MatrixPoly c = op.coeff(j).is_zero() ? MatrixPoly(n) : op.coeff(j).as_polynomial();
      for (int d = 0; d <= bound; ++d)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) v.push_back(c.coeff(d).at(r, s));
    }
    return v;
  };

  GeneratedSpanEvidence ev;
  ev.through_order = bound;
  int cum = 0;
  for (int r = 0; r <= bound; ++r) {
    cum += space.new_dims[r];
    ev.space_dims.push_back(cum);
    std::vector<std::vector<Rational>> cols;
    for (const auto& [op, order] : words)
      if (order <= r) cols.push_back(flatten(op));
    std::vector<std::vector<Rational>> rows(cols.front().size(),
                                            std::vector<Rational>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) rows[i][j] = cols[j][i];
    NullspaceResult ns = nullspace(rows, static_cast<int>(cols.size()));
    ev.word_span_dims.push_back(ns.rank());
  }
  ev.matches = (ev.word_span_dims == ev.space_dims);
  return ev;
}

GeneratorSet generator_set(const FamilyBundle& fb, const PolyFamily& fam) {
  GeneratorSet g;
  g.size = fb.size;
  g.ops.emplace("i", MatDiffOp::identity(fb.size));
  g.lambdas.emplace("i", EigenSeq::constant(Matrix::identity(fb.size)));
  g.ops.emplace("d1", fb.d1);
  g.lambdas.emplace("d1", fb.lambda_d1);
  g.ops.emplace("d2", fb.d2);
  g.lambdas.emplace("d2", fb.lambda_d2);
  if (fb.kind == FamilyKind::TwoStep) {
    g.ops.emplace("d3", *fb.d3);
    g.lambdas.emplace("d3", *fb.lambda_d3);
    g.ops.emplace("e", solve_by_eigenvalue(fb, fam, *fb.lambda_e, 4));
    g.lambdas.emplace("e", *fb.lambda_e);
    g.ops.emplace("f", solve_by_eigenvalue(fb, fam, *fb.lambda_f, 4));
    g.lambdas.emplace("f", *fb.lambda_f);
  }
  return g;
}

}  // namespace mvop
