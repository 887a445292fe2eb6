#pragma once

#include <map>
#include <vector>

#include "ainfty/cubic.hpp"

namespace ainfty {

struct FaceIndex {
  int k = 0, r = 0, s = 0;
  auto operator<=>(const FaceIndex&) const = default;
};

/// The index set A(n): 1 <= k <= r, 2 <= s = n-r+1 <= n-1, in
/// lexicographic (k,r,s) order.
std::vector<FaceIndex> face_indices(int n);

/// K_n as an exact H-representation together with the interior point b_n.
struct AssociahedronSpec {
  int n = 0;
  RatVec b;  // (0, 1/2, ..., 1/2, n/2)
};

AssociahedronSpec build_spec(int n);

RatVec interior_point(int n);  // b_n

/// Exact evaluation of the defining equalities and inequalities of K_n.
bool contains(const AssociahedronSpec& spec, const RatVec& t);

/// Face operator: K_r x K_s -> L_k(r,s) subset K_n, n = r+s-1.
/// Throws UsageError for (k,r,s) outside A(n), DomainError when an
/// argument is outside its polytope.
RatVec d_face(const FaceIndex& f, const RatVec& x, const RatVec& y);

/// Membership of t in the facet L_k(r,s) of K_n.
bool on_facet(const AssociahedronSpec& spec, const FaceIndex& f,
              const RatVec& t);

/// Inverts d_face on a facet point.  Precondition: on_facet holds.
std::pair<RatVec, RatVec> d_face_invert(const FaceIndex& f, const RatVec& t);

/// Vertex set of K_n by the d_face recursion; |vertices| = Catalan(n-1).
std::vector<RatVec> vertices(int n);

/// Cone decomposition t = (1-c) * d_face(f, rho, sigma) + c * b_n by exact
/// ray shooting from b_n.  c = 1 marks t = b_n (rho, sigma then empty).
struct FacetDecomposition {
  FaceIndex face;
  RatVec rho, sigma;
  Rat c;
  bool is_center() const { return c == 1; }
};
FacetDecomposition facet_decompose(const AssociahedronSpec& spec,
                                   const RatVec& t);

/// Degeneracy operator s_j : K_n -> K_{n-1}, by cone decomposition and the
/// s_j o d_k case table.
RatVec degeneracy(int j, int n, const RatVec& t);

/// All case-table rows applicable to (j, f); each is evaluated
/// independently so well-definedness on overlaps can be tested.
std::vector<RatVec> degeneracy_on_face_all_rows(int j, const FaceIndex& f,
                                                const RatVec& rho,
                                                const RatVec& sigma);

/// The recursive cubic complex K(n) with its facet subcomplexes.
struct AssocComplex {
  int n = 0;
  CubicComplex complex;
  std::map<FaceIndex, CubicComplex> facets;  // L_k(r,s) subcomplexes
};

AssocComplex build_complex(int n);

/// Polytope JSON: n, vertices, b, facet indices.
std::string spec_to_json(const AssociahedronSpec& spec);

}  // namespace ainfty
