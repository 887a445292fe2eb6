#include "ainfty/linalg.hpp"

namespace ainfty {
namespace {

// Reduced row echelon form in place.  Returns pivot columns.
std::vector<int> rref(std::vector<RatVec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(std::vector<RatVec> rows) {
  return static_cast<int>(rref(rows).size());
}

AffineSubspace affine_hull(const std::vector<RatVec>& points) {
  if (points.empty()) throw UsageError("affine_hull: empty point list");
  const size_t n = points[0].size();
  for (const auto& p : points)
    if (p.size() != n) throw UsageError("affine_hull: mixed ambient dims");

  AffineSubspace A{points[0], {}};
  std::vector<RatVec> echelon;  // running echelon copy of A.basis
  for (size_t i = 1; i < points.size(); ++i) {
    RatVec d = vec_sub(points[i], points[0]);
    std::vector<RatVec> trial = echelon;
    trial.push_back(d);
    if (rank(std::move(trial)) > static_cast<int>(A.basis.size())) {
      echelon.push_back(d);
      A.basis.push_back(vec_sub(points[i], points[0]));
    }
  }
  return A;
}

bool affine_contains(const AffineSubspace& A, const RatVec& p) {
  // p - base must lie in span(basis): rank unchanged when appended.
  std::vector<RatVec> rows = A.basis;
  int r0 = rank(rows);
  rows.push_back(vec_sub(p, A.base));
  return rank(std::move(rows)) == r0;
}

std::optional<LinearSolution> solve_linear(std::vector<RatVec> rows,
                                           RatVec rhs) {
  const size_t m = rows.size();
  const size_t n = m ? rows[0].size() : 0;
  // Augment.
  for (size_t i = 0; i < m; ++i) rows[i].push_back(rhs[i]);
  std::vector<int> pivots = rref(rows);
  // Inconsistent iff a pivot lands in the rhs column.
  for (int c : pivots)
    if (c == static_cast<int>(n)) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(n, Rat(0));
  std::vector<bool> is_pivot(n, false);
  for (size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    sol.particular[pivots[i]] = rows[i][n];
  }
  for (size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec k(n, Rat(0));
    k[fc] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -rows[i][fc];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

AffineIntersection intersect_affine(const AffineSubspace& A,
                                    const AffineSubspace& B) {
  if (A.ambient_dim() != B.ambient_dim())
    throw UsageError("intersect_affine: mixed ambient dims");
  const int n = A.ambient_dim();
  const int da = A.dim(), db = B.dim();

  // basisA x - basisB y = baseB - baseA, row per ambient coordinate.
  std::vector<RatVec> rows(n, RatVec(da + db, Rat(0)));
  RatVec rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < da; ++j) rows[i][j] = A.basis[j][i];
    for (int j = 0; j < db; ++j) rows[i][da + j] = -B.basis[j][i];
    rhs[i] = B.base[i] - A.base[i];
  }
  auto sol = solve_linear(std::move(rows), std::move(rhs));
  if (!sol) return {AffineIntersection::Empty, {}, {}};

  RatVec p = A.base;
  for (int j = 0; j < da; ++j)
    p = vec_add(p, vec_scale(sol->particular[j], A.basis[j]));
  if (sol->kernel.empty()) return {AffineIntersection::Point, std::move(p), {}};

  // Push the x-part of each kernel vector through A.basis; this is
  // injective, so the images stay independent and span V1 cap V2.
  AffineSubspace flat{p, {}};
  for (const auto& k : sol->kernel) {
    RatVec d(n, Rat(0));
    for (int j = 0; j < da; ++j) d = vec_add(d, vec_scale(k[j], A.basis[j]));
    flat.basis.push_back(std::move(d));
  }
  return {AffineIntersection::Flat, {}, std::move(flat)};
}

bool directions_independent(const AffineSubspace& V1,
                            const AffineSubspace& V2) {
  std::vector<RatVec> rows = V1.basis;
  rows.insert(rows.end(), V2.basis.begin(), V2.basis.end());
  return rank(std::move(rows)) == V1.dim() + V2.dim();
}

}  // namespace ainfty
