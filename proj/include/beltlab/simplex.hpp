#pragma once

#include <vector>

#include "beltlab/matrix.hpp"

namespace beltlab {

enum class Rel { le, eq, ge };

struct LpRow {
  Vec a;
  Rel rel = Rel::le;
  Rat rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Vec x;
  Rat value;
};

// Exact two-phase primal simplex over the rationals with Bland's rule
// (lowest-index entering column, lowest-index basic variable on ratio ties),
// which guarantees termination. Maximizes objective . x subject to the rows
// and x >= 0. Problem sizes here are tiny; exactness beats speed.
inline LpSolution solve_lp(int nvars, std::vector<LpRow> rows, const Vec& objective) {
  require(static_cast<int>(objective.size()) == nvars, Errc::bad_input,
          "objective size mismatch");
  const int m = static_cast<int>(rows.size());
  for (auto& r : rows) {
    require(static_cast<int>(r.a.size()) == nvars, Errc::bad_input, "row size mismatch");
    if (r.rhs < 0) {
      for (auto& c : r.a) c = -c;
      r.rhs = -r.rhs;
      r.rel = r.rel == Rel::le ? Rel::ge : (r.rel == Rel::ge ? Rel::le : Rel::eq);
    }
  }

  int nslack = 0, nart = 0;
  for (const auto& r : rows) {
    if (r.rel != Rel::eq) ++nslack;
    if (r.rel != Rel::le) ++nart;
  }
  const int ncol = nvars + nslack + nart;
  const int art_start = nvars + nslack;

  std::vector<Vec> tab(m, Vec(ncol + 1, Rat(0)));
  std::vector<int> basis(m, -1);
  std::vector<bool> banned(ncol, false);
  {
    int slack = nvars, art = art_start;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < nvars; ++j) tab[i][j] = rows[i].a[j];
      tab[i][ncol] = rows[i].rhs;
      if (rows[i].rel == Rel::le) {
        tab[i][slack] = 1;
        basis[i] = slack++;
      } else if (rows[i].rel == Rel::ge) {
        tab[i][slack++] = -1;
        tab[i][art] = 1;
        basis[i] = art++;
      } else {
        tab[i][art] = 1;
        basis[i] = art++;
      }
    }
  }

  int nrows = m;
  auto pivot = [&](int r, int c) {
    const Rat p = tab[r][c];
    for (int j = 0; j <= ncol; ++j)
      if (tab[r][j] != 0) tab[r][j] /= p;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || tab[i][c] == 0) continue;
      const Rat f = tab[i][c];
      for (int j = 0; j <= ncol; ++j)
        if (tab[r][j] != 0) tab[i][j] -= f * tab[r][j];
    }
    basis[r] = c;
  };

  auto run = [&](const Vec& cost) -> bool {  // false = unbounded
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncol && enter < 0; ++j) {
        if (banned[j]) continue;
        Rat red = cost[j];
        for (int i = 0; i < nrows; ++i)
          if (cost[basis[i]] != 0 && tab[i][j] != 0) red -= cost[basis[i]] * tab[i][j];
        if (red > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < nrows; ++i) {
        if (tab[i][enter] <= 0) continue;
        const Rat ratio = tab[i][ncol] / tab[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  if (nart > 0) {
    Vec phase1(ncol, Rat(0));
    for (int j = art_start; j < ncol; ++j) phase1[j] = -1;
    const bool bounded = run(phase1);
    require_internal(bounded, "phase 1 cannot be unbounded");
    Rat p1(0);
    for (int i = 0; i < nrows; ++i)
      if (basis[i] >= art_start) p1 -= tab[i][ncol];
    if (p1 < 0) return {LpStatus::infeasible, {}, Rat(0)};
    // Drive artificials out of the basis; an all-zero row is redundant.
    for (int i = 0; i < nrows;) {
      if (basis[i] < art_start) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < art_start && col < 0; ++j)
        if (tab[i][j] != 0) col = j;
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        tab.erase(tab.begin() + i);
        basis.erase(basis.begin() + i);
        --nrows;
      }
    }
    for (int j = art_start; j < ncol; ++j) banned[j] = true;
  }

  Vec cost(ncol, Rat(0));
  for (int j = 0; j < nvars; ++j) cost[j] = objective[j];
  if (!run(cost)) return {LpStatus::unbounded, {}, Rat(0)};

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.x.assign(nvars, Rat(0));
  for (int i = 0; i < nrows; ++i)
    if (basis[i] < nvars) sol.x[basis[i]] = tab[i][ncol];
  sol.value = 0;
  for (int j = 0; j < nvars; ++j)
    if (objective[j] != 0) sol.value += objective[j] * sol.x[j];
  return sol;
}

}  // namespace beltlab
