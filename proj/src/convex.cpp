#include "ainfty/convex.hpp"

namespace ainfty {

bool convex_membership(const RatVec& p, const std::vector<RatVec>& vertices) {
  if (vertices.empty()) throw UsageError("convex_membership: no vertices");
  const size_t n = p.size();
  for (const auto& v : vertices)
    if (v.size() != n) throw UsageError("convex_membership: mixed ambient dims");

  // Feasibility of { sum l_i v_i = p, sum l_i = 1, l >= 0 }.
  const size_t m = n + 1;              // constraint rows
  const size_t N = vertices.size();    // structural columns
  // Tableau: columns [structural | artificial | rhs].
  std::vector<RatVec> T(m, RatVec(N + m + 1, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < N; ++j) T[i][j] = vertices[j][i];
    T[i][N + m] = p[i];
  }
  for (size_t j = 0; j < N; ++j) T[n][j] = 1;
  T[n][N + m] = 1;

  for (size_t i = 0; i < m; ++i) {
    if (T[i][N + m] < 0)
      for (auto& x : T[i]) x = -x;
    T[i][N + i] = 1;
  }

  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = N + i;

  // Objective: minimize sum of artificials.  Reduced-cost row, with the
  // current objective value stored in the rhs slot.
  RatVec obj(N + m + 1, Rat(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= N + m; ++j) obj[j] -= T[i][j];
  for (size_t i = 0; i < m; ++i) obj[N + i] = 0;

  while (true) {
    // Bland: entering column = smallest index with negative reduced cost.
    size_t enter = N + m;
    for (size_t j = 0; j < N + m; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == N + m) break;

    // Ratio test, Bland tie-break on basis index.
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][N + m] / T[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded; cannot happen with sum l_i = 1

    Rat piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (size_t j = 0; j <= N + m; ++j) T[i][j] -= f * T[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (size_t j = 0; j <= N + m; ++j) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  return obj[N + m] == 0;  // -objective value; feasible iff all artificials 0
}

}  // namespace ainfty
