#include "omega/simplex.hpp"

#include <stdexcept>

namespace omega {

// Dantzig pricing usually finishes quickly here; a long run of degenerate pivots
// switches to Bland's rule permanently, which guarantees termination. The
// leaving row always breaks ratio ties by smallest basis index.
FeasResult solve_feasibility(const std::vector<std::vector<mpq_class>>& cols,
                             const std::vector<mpq_class>& b) {
  int m = (int)b.size();
  int k = (int)cols.size();
  for (const auto& c : cols)
    if ((int)c.size() != m) throw std::invalid_argument("column height disagrees with b");

  // tableau [A | I | rhs] with rows flipped so rhs >= 0; basis starts artificial
  std::vector<int> sign(m, 1);
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(k + m + 1));
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (int j = 0; j < k; ++j) t[i][j] = sign[i] * cols[j][i];
    t[i][k + i] = 1;
    t[i][k + m] = sign[i] * b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = k + i;

  // reduced-cost row for the phase-1 objective (sum of artificials)
  std::vector<mpq_class> z(k + m + 1);
  for (int j = 0; j <= k + m; ++j) {
    if (j >= k && j < k + m) continue;
    mpq_class sum = 0;
    for (int i = 0; i < m; ++i) sum += t[i][j];
    z[j] = -sum;
  }

  int degenerate_streak = 0;
  bool bland = false;
  while (true) {
    int enter = -1;
    if (bland) {
      for (int j = 0; j < k + m; ++j)
        if (z[j] < 0) {
          enter = j;
          break;
        }
    } else {
      for (int j = 0; j < k + m; ++j)
        if (z[j] < 0 && (enter < 0 || z[j] < z[enter])) enter = j;
    }
    if (enter < 0) break;

    int leave = -1;
    mpq_class best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][k + m] / t[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 objective cannot be unbounded");

    if (t[leave][k + m] == 0) {
      if (++degenerate_streak > 50) bland = true;
    } else {
      degenerate_streak = 0;
    }

    mpq_class pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (int j = 0; j <= k + m; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      mpq_class f = z[enter];
      for (int j = 0; j <= k + m; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  FeasResult res;
  mpq_class objective = -z[k + m];
  if (objective == 0) {
    res.feasible = true;
    res.solution.assign(k, 0);
    for (int i = 0; i < m; ++i)
      if (basis[i] < k) res.solution[basis[i]] = t[i][k + m];
  } else {
    // y_i = 1 - (final reduced cost of artificial i), undoing any row flip
    res.feasible = false;
    res.farkas.resize(m);
    for (int i = 0; i < m; ++i) res.farkas[i] = sign[i] * (1 - z[k + i]);
  }
  return res;
}

}  // namespace omega
