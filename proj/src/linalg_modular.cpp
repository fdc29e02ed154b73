#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <map>

#include "mvop/linalg.hpp"

// Multi-modular nullspace: RREF mod several word-size primes, CRT on the
// reduced-echelon entries, rational reconstruction, then exact verification
// of every basis vector against the integer input rows.  A verified basis of
// size equal to the modular nullity is a proof of the exact answer (the
// modular rank can only underestimate the rational rank), so the output is
// unconditional even though primes are involved.

namespace mvop {
namespace detail {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

std::vector<u64> make_primes(int count) {
  static const Integer start = Integer(1) << 62;
  std::vector<u64> primes;
  Integer p = start;
  for (int i = 0; i < count; ++i) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    primes.push_back(p.get_ui());
  }
  return primes;
}

struct ModRref {
  u64 prime = 0;
  std::vector<int> pivots;
  // residue[i][k] = RREF entry at (pivot row i, free column k)
  std::vector<std::vector<u64>> residue;
  std::vector<int> free_cols;
};

ModRref rref_mod(const IntRows& m, u64 p) {
  const int nr = static_cast<int>(m.rows.size());
  const int nc = m.cols;
  std::vector<std::vector<u64>> a(nr, std::vector<u64>(nc));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) a[i][j] = mpz_fdiv_ui(m.rows[i][j].get_mpz_t(), p);

  ModRref out;
  out.prime = p;
  int pr = 0;
  for (int c = 0; c < nc && pr < nr; ++c) {
    int sel = -1;
    for (int r = pr; r < nr; ++r)
      if (a[r][c] != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pr) a[sel].swap(a[pr]);
    const u64 inv = invmod(a[pr][c], p);
    for (int j = c; j < nc; ++j) a[pr][j] = mulmod(a[pr][j], inv, p);
    for (int r = 0; r < nr; ++r) {
      if (r == pr || a[r][c] == 0) continue;
      const u64 f = a[r][c];
      for (int j = c; j < nc; ++j) {
        u64 sub = mulmod(f, a[pr][j], p);
        a[r][j] = a[r][j] >= sub ? a[r][j] - sub : a[r][j] + p - sub;
      }
    }
    out.pivots.push_back(c);
    ++pr;
  }
  std::vector<char> is_pivot(nc, 0);
  for (int c : out.pivots) is_pivot[c] = 1;
  for (int j = 0; j < nc; ++j)
    if (!is_pivot[j]) out.free_cols.push_back(j);
  out.residue.assign(out.pivots.size(), std::vector<u64>(out.free_cols.size()));
  for (size_t i = 0; i < out.pivots.size(); ++i)
    for (size_t k = 0; k < out.free_cols.size(); ++k) out.residue[i][k] = a[i][out.free_cols[k]];
  return out;
}

// Wang rational reconstruction of r mod M with |num|, den <= sqrt(M/2).
bool rational_reconstruct(const Integer& r, const Integer& modulus, Rational& out) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
  Integer n0 = modulus, n1 = r % modulus;
  if (n1 < 0) n1 += modulus;
  Integer t0 = 0, t1 = 1;
  while (n1 > bound) {
    Integer q = n0 / n1;
    Integer n2 = n0 - q * n1;
    n0 = n1;
    n1 = n2;
    Integer t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  Integer den = t1, num = n1;
  if (den < 0) { den = -den; num = -num; }
  if (den > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && den == 1)) {
    if (num == 0) { out = 0; return den == 1; }
    return false;
  }
  out = Rational(num) / Rational(den);
  return true;
}

bool verify_kernel_vector(const IntRows& m, const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Integer> w(v.size());
  for (size_t j = 0; j < v.size(); ++j) w[j] = v[j].get_num() * (den / v[j].get_den());
  int ok = 1;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
  for (long i = 0; i < static_cast<long>(m.rows.size()); ++i) {
    Integer acc(0);
    const auto& row = m.rows[i];
    for (int j = 0; j < m.cols; ++j) {
      if (sgn(row[j]) == 0 || sgn(w[j]) == 0) continue;
      acc += row[j] * w[j];
    }
    if (acc != 0) ok = 0;
  }
  return ok != 0;
}

}  // namespace

NullspaceResult nullspace_modular(const IntRows& m) {
  const int nc = m.cols;
  if (m.rows.empty()) {
    NullspaceResult out;
    out.cols = nc;
    for (int j = 0; j < nc; ++j) {
      out.free_cols.push_back(j);
      std::vector<Rational> v(nc, Rational(0));
      v[j] = 1;
      out.basis.push_back(std::move(v));
    }
    return out;
  }

  std::vector<ModRref> tables;
  int want = 3;
  const int max_primes = 384;
  while (true) {
    std::vector<u64> primes = make_primes(want);
    int have = static_cast<int>(tables.size());
    tables.resize(want);
    {
      std::vector<int> todo;
      for (int i = have; i < want; ++i) todo.push_back(i);
#pragma omp parallel for schedule(dynamic, 1)
      for (long k = 0; k < static_cast<long>(todo.size()); ++k)
        tables[todo[k]] = rref_mod(m, primes[todo[k]]);
    }

    // Consensus pivot set: maximal rank first (a bad prime can only lose
    // rank), then the most frequent.
    std::map<std::vector<int>, int> votes;
    size_t best_rank = 0;
    for (const auto& t : tables) best_rank = std::max(best_rank, t.pivots.size());
    for (const auto& t : tables)
      if (t.pivots.size() == best_rank) votes[t.pivots]++;
    const std::vector<int>* chosen = nullptr;
    int best_votes = -1;
    for (const auto& [pv, n] : votes)
      if (n > best_votes) { best_votes = n; chosen = &pv; }
    std::vector<const ModRref*> witnesses;
    for (const auto& t : tables)
      if (t.pivots == *chosen) witnesses.push_back(&t);

    // CRT across the agreeing primes, entry by entry.
    Integer modulus = 1;
    for (const ModRref* w : witnesses) modulus *= Integer(static_cast<unsigned long>(w->prime));
    const auto& free_cols = witnesses.front()->free_cols;
    const auto& pivots = *chosen;
    bool ok = true;
    std::vector<std::vector<Rational>> rref_rows(pivots.size(),
                                                 std::vector<Rational>(nc, Rational(0)));
    for (size_t i = 0; i < pivots.size() && ok; ++i) {
      for (size_t k = 0; k < free_cols.size() && ok; ++k) {
        Integer x(0), mcur(1);
        for (const ModRref* w : witnesses) {
          Integer p(static_cast<unsigned long>(w->prime));
          // Garner step: x <- x + mcur * ((r - x) / mcur mod p)
          u64 xr = mpz_fdiv_ui(x.get_mpz_t(), w->prime);
          u64 mr = mpz_fdiv_ui(mcur.get_mpz_t(), w->prime);
          u64 r = w->residue[i][k];
          u64 diff = r >= xr ? r - xr : r + w->prime - xr;
          u64 step = mulmod(diff, invmod(mr, w->prime), w->prime);
          x += mcur * Integer(static_cast<unsigned long>(step));
          mcur *= p;
        }
        Rational q;
        if (!rational_reconstruct(x, modulus, q)) { ok = false; break; }
        rref_rows[i][free_cols[k]] = q;
      }
    }

    if (ok) {
      NullspaceResult out;
      out.cols = nc;
      out.pivot_cols = pivots;
      out.free_cols = free_cols;
      for (size_t k = 0; k < free_cols.size(); ++k) {
        std::vector<Rational> v(nc, Rational(0));
        v[free_cols[k]] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
          if (pivots[i] < free_cols[k]) v[pivots[i]] = -rref_rows[i][free_cols[k]];
        out.basis.push_back(std::move(v));
      }
      bool verified = true;
      for (const auto& v : out.basis)
        if (!verify_kernel_vector(m, v)) { verified = false; break; }
      if (verified) return out;
    }

    if (want >= max_primes) break;
    want = std::min(max_primes, want * 2);
  }
  // Certification never converged; fall back to the exact reference path.
  return nullspace_fraction_free(m, true);
}

}  // namespace detail
}  // namespace mvop
