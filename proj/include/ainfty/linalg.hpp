#pragma once

#include <optional>
#include <vector>

#include "ainfty/rational.hpp"

namespace ainfty {

/// Affine subspace base + span(basis) of R^n.  Basis vectors are kept
/// exactly linearly independent; dim() == basis.size().
struct AffineSubspace {
  RatVec base;
  std::vector<RatVec> basis;

  int ambient_dim() const { return static_cast<int>(base.size()); }
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Rank of the row span, by fraction-free-ish Gaussian elimination.
int rank(std::vector<RatVec> rows);

/// Smallest affine subspace containing all points.  The basis consists of
/// difference vectors p_i - p_0 kept in first-come order.
AffineSubspace affine_hull(const std::vector<RatVec>& points);

/// Exact membership p in A.
bool affine_contains(const AffineSubspace& A, const RatVec& p);

struct AffineIntersection {
  enum Kind { Empty, Point, Flat } kind;
  RatVec point;          // Kind::Point
  AffineSubspace flat;   // Kind::Flat
};

/// Exact intersection of two affine subspaces of the same ambient space.
AffineIntersection intersect_affine(const AffineSubspace& A,
                                    const AffineSubspace& B);

/// True iff span(V1.basis) and span(V2.basis) meet only in 0.
bool directions_independent(const AffineSubspace& V1, const AffineSubspace& V2);

/// Solves M x = b exactly.  Returns nullopt when inconsistent; otherwise a
/// particular solution plus a kernel basis.
struct LinearSolution {
  RatVec particular;
  std::vector<RatVec> kernel;
};
std::optional<LinearSolution> solve_linear(std::vector<RatVec> rows, RatVec rhs);

}  // namespace ainfty
