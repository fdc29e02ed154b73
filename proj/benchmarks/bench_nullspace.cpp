#include <chrono>
#include <cstdio>
#include <random>

#include "mvop/algebra.hpp"
#include "mvop/eigensolver.hpp"
#include "mvop/linalg.hpp"

// Timing comparison of the exact nullspace engines: serial fraction-free,
// OpenMP fraction-free, and the certified multi-modular kernel.  Random
// rational systems first, then the real operator-membership systems that
// dominate the dimension tables.  All engines must agree exactly.

using namespace mvop;

namespace {

using Clock = std::chrono::steady_clock;

double run(const std::vector<std::vector<Rational>>& rows, int cols, LinEngine e, int* dim) {
  auto t0 = Clock::now();
  NullspaceResult r = nullspace(rows, cols, e);
  *dim = r.dim();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<Rational>> random_system(int nrows, int ncols, int rank_deficit,
                                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  int inner = ncols - rank_deficit;
  std::vector<std::vector<Rational>> left(nrows, std::vector<Rational>(inner));
  std::vector<std::vector<Rational>> right(inner, std::vector<Rational>(ncols));
  for (auto& row : left)
    for (auto& x : row) x = rat(num(rng), den(rng));
  for (auto& row : right)
    for (auto& x : row) x = rat(num(rng), den(rng));
  std::vector<std::vector<Rational>> rows(nrows, std::vector<Rational>(ncols, Rational(0)));
  for (int i = 0; i < nrows; ++i)
    for (int k = 0; k < inner; ++k)
      for (int j = 0; j < ncols; ++j) rows[i][j] += left[i][k] * right[k][j];
  return rows;
}

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  std::printf("%-36s %10s %10s %10s\n", "system", "serial[s]", "openmp[s]", "modular[s]");

  for (int size : {40, 80, 120}) {
    auto rows = random_system(size + 20, size, 6, rng);
    int d1 = 0, d2 = 0, d3 = 0;
    double ts = run(rows, size, LinEngine::Reference, &d1);
    double tp = run(rows, size, LinEngine::Parallel, &d2);
    double tm = run(rows, size, LinEngine::Modular, &d3);
    std::printf("random %4dx%-4d (dim %d)           %10.3f %10.3f %10.3f\n", size + 20, size,
                d1, ts, tp, tm);
    if (d1 != d2 || d1 != d3) {
      std::printf("engine disagreement!\n");
      return 1;
    }
  }

  // real membership systems; the auto engine picks the modular kernel here,
  // which is what keeps the full dimension tables cheap
  FamilyBundle fb = build_one_step(OneStepParams{Rational(3), Rational(5), Rational(2)}, 30);
  PolyFamily fam = generate_family(fb, "d1", 28, Normalization::ClosedForm);
  for (int order : {4, 6}) {
    auto t0 = Clock::now();
    OperatorSpace sp = operator_space(fb, fam, order);
    double t = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("one-step membership, order %d: dim %2d %10.3f (auto: modular + exact verify)\n",
                order, sp.dim(), t);
  }
  return 0;
}
