#ifndef MVOP_ALGEBRA_HPP
#define MVOP_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "mvop/eigensolver.hpp"

namespace mvop {

// The space of differential operators of order <= order_bound having the
// family as eigenfunctions.  Unknown operator coefficients are eliminated
// against the invertible leading coefficients of the family, which turns
// membership into one homogeneous exact linear system; the reduced nullspace
// is the canonical basis, graded by operator order.
struct OperatorSpace {
  int order_bound = 0;
  long nmax_used = 0;
  long verified_to = 0;
  bool stabilized = false;
  std::vector<MatDiffOp> basis;
  std::vector<int> basis_order;
  std::vector<int> new_dims;  // new operators per order, 0..order_bound

  int dim() const { return static_cast<int>(basis.size()); }
};

// family must be generated at least to max(nmax + 4, 3*order_bound + 8).
// nmax < 0 selects the default 2*order_bound + 4.
OperatorSpace operator_space(const FamilyBundle& fb, const PolyFamily& fam, int order_bound,
                             long nmax = -1);

struct LambdaOfOperator {
  bool in_algebra = false;
  long failed_n = -1;
  EigenSeq lambda;
};
// Interpolates the eigenvalue sequence of op (degree <= order) and verifies
// the eigen equation exactly at every used degree plus spare points.
LambdaOfOperator lambda_of_operator(const FamilyBundle& fb, const PolyFamily& fam,
                                    const MatDiffOp& op);

// Formal sums of scalar-weighted words in named generators.
struct GenTerm {
  Rational coeff;
  std::vector<std::string> word;  // empty word = identity
};
using GenExpr = std::vector<GenTerm>;

struct GeneratorSet {
  std::map<std::string, MatDiffOp> ops;
  std::map<std::string, EigenSeq> lambdas;
  int size = 0;
};

struct RelationReport {
  std::string name;
  bool lambda_ok = false;     // symbolic eigenvalue-sequence identity
  bool points_ok = false;     // spot evaluation at n = 0..n_check
  bool operator_checked = false;
  bool operator_ok = false;   // direct composition, orders <= 6
  bool ok() const { return lambda_ok && points_ok && (!operator_checked || operator_ok); }
};
// Verifies expr = 0: symbolically in the eigenvalue representation (entries
// are polynomials in n, so this plus faithfulness is an operator identity),
// numerically at n = 0..n_check, and by direct composition when cheap.
RelationReport relation_check(const GeneratorSet& gens, const GenExpr& expr,
                              const std::string& name, long n_check);

// Named relation lists for each family, built from the bundle parameters.
std::vector<std::pair<std::string, GenExpr>> relation_exprs(const FamilyBundle& fb,
                                                            const std::string& which);

// One-step: each single factor and pairwise product of the cubic relation is
// nonzero while the triple product vanishes.
struct PartialProducts {
  bool ok = false;
  std::vector<std::string> detail;
};
PartialProducts partial_products_nonzero(const FamilyBundle& fb);

// Unique order-r operator with the prescribed eigenvalue sequence; throws
// when none exists, fails loudly when not unique.
MatDiffOp solve_by_eigenvalue(const FamilyBundle& fb, const PolyFamily& fam, const EigenSeq& l,
                              int order);

// Subspace of a computed operator space commuting with op.
struct CommutantResult {
  int dim = 0;
  std::vector<MatDiffOp> basis;
};
CommutantResult commutant(const OperatorSpace& space, const MatDiffOp& op);

// The generator set of each family: identity, d1, d2 (one-step) plus d3 and
// the recovered e, f (two-step).
GeneratorSet generator_set(const FamilyBundle& fb, const PolyFamily& fam);

// Evidence for the conjecture that the whole operator space is generated
// by the named operators: the span of all generator words of bounded order
// is compared with the computed space, order by order.  This is finite
// evidence, never a proof; report it as such.
struct GeneratedSpanEvidence {
  int through_order = 0;
  std::vector<int> word_span_dims;  // cumulative dims of the word span
  std::vector<int> space_dims;      // cumulative dims of the operator space
  bool matches = false;
};
GeneratedSpanEvidence generated_span_evidence(const GeneratorSet& gens,
                                              const OperatorSpace& space);

}  // namespace mvop

#endif
