#include "ainfty/associahedron.hpp"

#include <algorithm>
#include <map>

namespace ainfty {
namespace {

bool vec_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

// d_face without the domain checks; also serves as the affine map used
// when transporting complexes.
RatVec d_face_raw(const FaceIndex& f, const RatVec& x, const RatVec& y) {
  const int k = f.k, r = f.r, s = f.s;
  const int n = r + s - 1;
  RatVec out(n);
  for (int i = 1; i < k; ++i) out[i - 1] = x[i - 1];
  for (int i = 0; i < s - 1; ++i) out[k - 1 + i] = y[i];
  out[k + s - 2] = y[s - 1] + x[k - 1];
  for (int i = k + 1; i <= r; ++i) out[i + s - 2] = x[i - 1];
  return out;
}

void check_index(const FaceIndex& f) {
  const int n = f.r + f.s - 1;
  if (f.k < 1 || f.k > f.r || f.s < 2 || f.s > n - 1)
    throw UsageError("face index (" + std::to_string(f.k) + "," +
                     std::to_string(f.r) + "," + std::to_string(f.s) +
                     ") outside A(" + std::to_string(n) + ")");
}

}  // namespace

std::vector<FaceIndex> face_indices(int n) {
  std::vector<FaceIndex> out;
  for (int s = 2; s <= n - 1; ++s) {
    int r = n - s + 1;
    for (int k = 1; k <= r; ++k) out.push_back({k, r, s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatVec interior_point(int n) {
  if (n < 1) throw UsageError("interior_point: n must be positive");
  RatVec b(n, Rat(1, 2));
  b[0] = 0;
  b[n - 1] = rat(n, 2);
  return b;
}

AssociahedronSpec build_spec(int n) {
  if (n < 1) throw UsageError("build_spec: n must be positive");
  return {n, interior_point(n)};
}

bool contains(const AssociahedronSpec& spec, const RatVec& t) {
  const int n = spec.n;
  if (static_cast<int>(t.size()) != n)
    throw UsageError("contains: wrong dimension");
  if (t[0] != 0) return false;
  Rat sum = 0;  // sum of t_1 .. t_{k-1}
  for (int k = 2; k < n; ++k) {
    sum += t[k - 2];
    if (t[k - 1] < 0 || t[k - 1] > k - 1 - sum) return false;
  }
  if (n >= 2) {
    sum += t[n - 2];
    if (t[n - 1] != n - 1 - sum) return false;
  }
  return true;
}

RatVec d_face(const FaceIndex& f, const RatVec& x, const RatVec& y) {
  check_index(f);
  if (!contains(build_spec(f.r), x))
    throw DomainError("d_face: first argument outside K_" +
                      std::to_string(f.r));
  if (!contains(build_spec(f.s), y))
    throw DomainError("d_face: second argument outside K_" +
                      std::to_string(f.s));
  return d_face_raw(f, x, y);
}

bool on_facet(const AssociahedronSpec& spec, const FaceIndex& f,
              const RatVec& t) {
  if (f.r + f.s - 1 != spec.n) return false;
  if (!contains(spec, t)) return false;
  const int k = f.k, s = f.s;
  Rat tail = s - 1;
  for (int i = 0; i < s - 1; ++i) tail -= t[k - 1 + i];
  if (t[k + s - 2] < tail) return false;
  RatVec block(t.begin() + (k - 1), t.begin() + (k + s - 2));
  block.push_back(tail);
  return contains(build_spec(s), block);
}

std::pair<RatVec, RatVec> d_face_invert(const FaceIndex& f, const RatVec& t) {
  const int k = f.k, r = f.r, s = f.s;
  Rat tail = s - 1;
  for (int i = 0; i < s - 1; ++i) tail -= t[k - 1 + i];
  RatVec y(t.begin() + (k - 1), t.begin() + (k + s - 2));
  y.push_back(tail);
  RatVec x(r);
  for (int i = 1; i < k; ++i) x[i - 1] = t[i - 1];
  x[k - 1] = t[k + s - 2] - tail;
  for (int i = k + 1; i <= r; ++i) x[i - 1] = t[i + s - 2];
  if (!contains(build_spec(r), x) || !contains(build_spec(s), y))
    throw DomainError("d_face_invert: point not on facet");
  return {std::move(x), std::move(y)};
}

std::vector<RatVec> vertices(int n) {
  static std::map<int, std::vector<RatVec>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw UsageError("vertices: n must be positive");

  std::vector<RatVec> out;
  if (n == 1)
    out = {RatVec{Rat(0)}};
  else if (n == 2)
    out = {RatVec{Rat(0), Rat(1)}};
  else {
    for (const auto& f : face_indices(n))
      for (const auto& vx : vertices(f.r))
        for (const auto& vy : vertices(f.s))
          out.push_back(d_face_raw(f, vx, vy));
    std::sort(out.begin(), out.end(), vec_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  cache.emplace(n, out);
  return out;
}

FacetDecomposition facet_decompose(const AssociahedronSpec& spec,
                                   const RatVec& t) {
  const int n = spec.n;
  if (!contains(spec, t)) throw DomainError("facet_decompose: point outside K_n");
  if (t == spec.b) return {FaceIndex{}, {}, {}, Rat(1)};

  // Exit parameter of the ray b + lambda (t - b) against each inequality
  // of the H-representation.
  RatVec dir = vec_sub(t, spec.b);
  Rat lambda;
  bool found = false;
  auto consider = [&](const Rat& val_b, const Rat& val_dir) {
    if (val_dir >= 0) return;
    Rat lam = val_b / -val_dir;
    if (!found || lam < lambda) {
      lambda = lam;
      found = true;
    }
  };
  Rat sum_b = 0, sum_dir = 0;  // over coordinates 1..k-1
  for (int k = 2; k < n; ++k) {
    sum_b += spec.b[k - 2];
    sum_dir += dir[k - 2];
    consider(spec.b[k - 1], dir[k - 1]);                          // t_k >= 0
    consider(k - 1 - sum_b - spec.b[k - 1], -sum_dir - dir[k - 1]);  // upper
  }
  if (!found) throw DomainError("facet_decompose: degenerate polytope");

  RatVec boundary = vec_add(spec.b, vec_scale(lambda, dir));
  Rat c = 1 - 1 / lambda;

  for (const auto& f : face_indices(n)) {
    if (on_facet(spec, f, boundary)) {
      auto [rho, sigma] = d_face_invert(f, boundary);
      return {f, std::move(rho), std::move(sigma), std::move(c)};
    }
  }
  throw DomainError("facet_decompose: boundary point on no facet");
}

std::vector<RatVec> degeneracy_on_face_all_rows(int j, const FaceIndex& f,
                                                const RatVec& rho,
                                                const RatVec& sigma) {
  const int k = f.k, r = f.r, s = f.s;
  const int n = r + s - 1;
  std::vector<RatVec> out;
  if (j < k && r > 2)
    out.push_back(
        d_face_raw({k - 1, r - 1, s}, degeneracy(j, r, rho), sigma));
  if (j == 1 && k == 2 && r == 2) out.push_back(sigma);
  if (k <= j && j < k + s && r < n - 1)
    out.push_back(
        d_face_raw({k, r, s - 1}, rho, degeneracy(j - k + 1, s, sigma)));
  if (k <= j && j <= k + 1 && r == n - 1) out.push_back(rho);
  // Deleting a letter past the sigma block leaves the block slot at k
  // (the source states k-1 here, which is undefined at k = 1; ridge
  // agreement pins the slot at k).
  if (k + s <= j && j <= n && r > 2)
    out.push_back(
        d_face_raw({k, r - 1, s}, degeneracy(j - s + 1, r, rho), sigma));
  if (j == n && k == 1 && r == 2) out.push_back(sigma);
  if (out.empty())
    throw std::logic_error("degeneracy case table: no applicable row");
  return out;
}

RatVec degeneracy(int j, int n, const RatVec& t) {
  if (n < 2 || j < 1 || j > n) throw UsageError("degeneracy: bad indices");
  auto spec = build_spec(n);
  if (!contains(spec, t)) throw DomainError("degeneracy: point outside K_n");
  if (n == 2) return RatVec{Rat(0)};

  auto dec = facet_decompose(spec, t);
  if (dec.is_center()) return interior_point(n - 1);
  RatVec base = degeneracy_on_face_all_rows(j, dec.face, dec.rho, dec.sigma)[0];
  RatVec b1 = interior_point(n - 1);
  return vec_add(vec_scale(1 - dec.c, base), vec_scale(dec.c, b1));
}

AssocComplex build_complex(int n) {
  if (n < 1) throw UsageError("build_complex: n must be positive");
  AssocComplex out;
  out.n = n;
  if (n == 1) {
    out.complex = make_complex(1, {empty_cell(1)});
    return out;
  }
  if (n == 2) {
    out.complex = make_complex(2, {empty_cell(2), point_cell(interior_point(2))});
    return out;
  }

  std::vector<CellPtr> cells;
  cells.push_back(empty_cell(n));
  CubicComplex center =
      make_complex(n, {empty_cell(n), point_cell(interior_point(n))});
  for (const auto& f : face_indices(n)) {
    RatVec br = interior_point(f.r), bs = interior_point(f.s);
    auto Kr = build_complex(f.r), Ks = build_complex(f.s);
    CubicComplex imgA, imgB;
    {
      std::vector<CellPtr> a, b;
      for (const auto& c : Kr.complex.cells)
        a.push_back(map_cell(
            c, [&](const RatVec& x) { return d_face_raw(f, x, bs); }));
      for (const auto& c : Ks.complex.cells)
        b.push_back(map_cell(
            c, [&](const RatVec& y) { return d_face_raw(f, br, y); }));
      imgA = make_complex(n, a);
      imgB = make_complex(n, b);
    }
    CubicComplex facet = complex_product(imgA, imgB);
    CubicComplex cone = complex_join(facet, center);
    cells.insert(cells.end(), cone.cells.begin(), cone.cells.end());
    out.facets.emplace(f, std::move(facet));
  }
  out.complex = make_complex(n, cells);
  return out;
}

}  // namespace ainfty
