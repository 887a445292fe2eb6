#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainfty/convex.hpp"
#include "ainfty/linalg.hpp"

namespace ainfty {

struct JoinDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ProductDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CellKind { Empty, Point, Join, Product };

struct CubicSet;
using CellPtr = std::shared_ptr<const CubicSet>;

/// A q-cubic set: a convex body in an affine subspace, built recursively
/// from points by joins and transverse products.  Cells carry their
/// construction tree; equality is by realization (canonical vertex list).
struct CubicSet {
  CellKind kind;
  int ambient = 0;
  int dim = -1;  // q; -1 for the empty cell
  CellPtr left, right;
  std::optional<AffineSubspace> hull;  // absent for Empty
  std::vector<RatVec> vertices;        // sorted, deduplicated
  std::optional<RatVec> anchor;        // Product: the point a of L1 cap L2

  bool is_empty() const { return kind == CellKind::Empty; }
};

/// Canonical identity of a cell: its sorted vertex list rendered to text.
std::string cell_key(const CubicSet& c);

CellPtr empty_cell(int ambient);
CellPtr point_cell(const RatVec& p);

/// sigma1 * sigma2.  Empty acts as identity.  Throws JoinDegenerate when
/// the affine hull of the union has the wrong dimension (the cells are
/// not in general position: a2 - a1 in V1 + V2 or V1 cap V2 != 0).
CellPtr join(const CellPtr& a, const CellPtr& b);

/// sigma1 x_{L1,L2} sigma2 with L1, L2 the hulls of the factors.  Throws
/// ProductDegenerate unless L1 cap L2 is a single point.
CellPtr product(const CellPtr& a, const CellPtr& b);

/// Product with an inherited anchor; used for faces of product cells and
/// for complex products, where L1 cap L2 is taken at the top cells.
CellPtr product_with_anchor(const CellPtr& a, const CellPtr& b,
                            const RatVec& anchor);

/// All faces of sigma including Empty and sigma itself, deduplicated.
std::vector<CellPtr> faces(const CellPtr& c);

/// True iff tau is a face of sigma (by canonical key).
bool is_face(const CellPtr& tau, const CellPtr& sigma);

/// Exact membership of p in the realization of the cell.
bool cell_contains(const CubicSet& c, const RatVec& p);

/// Applies an injective affine map to a cell, preserving its construction.
CellPtr map_cell(const CellPtr& c,
                 const std::function<RatVec(const RatVec&)>& f);

struct CubicComplex {
  int ambient = 0;
  std::vector<CellPtr> cells;
  std::map<std::string, int> index;  // cell_key -> position in cells

  bool has(const CellPtr& c) const { return index.count(cell_key(*c)) > 0; }
  int dim() const;
};

/// Builds a complex from cells, deduplicating by canonical key.  Does not
/// validate; see verify_complex.
CubicComplex make_complex(int ambient, const std::vector<CellPtr>& cells);

/// Complex of all faces of sigma strictly below sigma (plus Empty).
CubicComplex boundary_complex(const CellPtr& c);

/// Complex of all faces of sigma including sigma.
CubicComplex face_complex(const CellPtr& c);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

/// Checks the cubic-complex conditions: Empty membership, closure under
/// faces, and pairwise intersections being common faces.  Pairs whose
/// intersection cannot be identified with a generated face are reported
/// as unverifiable rather than guessed at.
VerifyReport verify_complex(const CubicComplex& K);

struct CubicMapSpec {
  CubicComplex source, target;
  std::vector<int> assignment;  // source cell index -> target cell index
};

/// Checks order preservation, empty-cell fidelity and face lifting.
VerifyReport verify_cubic_map(const CubicMapSpec& m);

/// Cellwise join {sigma * tau}.
CubicComplex complex_join(const CubicComplex& K, const CubicComplex& L);

/// Cellwise product {sigma x tau}, anchored at the intersection point of
/// the affine hulls of |K| and |L|.
CubicComplex complex_product(const CubicComplex& K, const CubicComplex& L);

/// JSON per the complex schema (ids stable under canonical vertex order).
std::string complex_to_json(const CubicComplex& K);

}  // namespace ainfty
