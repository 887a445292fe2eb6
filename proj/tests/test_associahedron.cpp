#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ainfty/associahedron.hpp"

using namespace ainfty;

namespace {
RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

// Independent Catalan oracle via the product formula.
long catalan(int m) {
  long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Deterministic interior-ish rational samples of K_n.
std::vector<RatVec> grid_samples(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  auto vs = vertices(n);
  std::uniform_int_distribution<size_t> pick(0, vs.size() - 1);
  std::vector<RatVec> out{interior_point(n)};
  while (static_cast<int>(out.size()) < count) {
    RatVec p(n, Rat(0));
    for (int b = 0; b < 8; ++b) {
      const auto& v = vs[pick(rng)];
      for (int i = 0; i < n; ++i) p[i] += v[i] / 8;
    }
    out.push_back(std::move(p));
  }
  return out;
}
}  // namespace

TEST_CASE("vertex counts are Catalan numbers") {
  CHECK(catalan(1) == 1);
  CHECK(catalan(4) == 14);  // oracle sanity
  for (int n = 2; n <= 7; ++n)
    CHECK(static_cast<long>(vertices(n).size()) == catalan(n - 1));
}

TEST_CASE("facet index set") {
  CHECK(face_indices(3).size() == 2);
  CHECK(face_indices(5).size() == 9);
  for (int n = 3; n <= 7; ++n) {
    long expect = 0;
    for (int s = 2; s <= n - 1; ++s) expect += n - s + 1;
    CHECK(static_cast<long>(face_indices(n).size()) == expect);
  }
  // Every index is admissible and the list is strictly increasing.
  auto idx = face_indices(5);
  for (size_t i = 0; i + 1 < idx.size(); ++i) CHECK(idx[i] < idx[i + 1]);
}

TEST_CASE("polytope membership") {
  for (int n = 2; n <= 6; ++n)
    CHECK(contains(build_spec(n), interior_point(n)));
  auto s3 = build_spec(3);
  CHECK(contains(s3, rv({0, 1, 1})));
  CHECK(contains(s3, rv({0, 0, 2})));
  CHECK_FALSE(contains(s3, rv({0, 2, 0})));   // t_2 above its cap
  CHECK_FALSE(contains(s3, rv({0, 1, 2})));   // sum equality broken
  CHECK_FALSE(contains(s3, rv({1, 0, 1})));   // t_1 must be 0
  CHECK_THROWS_AS(contains(s3, rv({0, 1})), UsageError);
}

TEST_CASE("face operator on the pentagon bottom") {
  RatVec b2 = interior_point(2);
  CHECK(d_face({1, 2, 2}, b2, b2) == rv({0, 1, 1}));
  CHECK(d_face({2, 2, 2}, b2, b2) == rv({0, 0, 2}));
  CHECK_THROWS_AS(d_face({3, 2, 2}, b2, b2), UsageError);
  CHECK_THROWS_AS(d_face({1, 2, 2}, rv({0, 2}), b2), DomainError);
}

TEST_CASE("face images land on the facet and invert") {
  for (int n = 3; n <= 5; ++n) {
    auto spec = build_spec(n);
    for (const auto& f : face_indices(n)) {
      auto rs = grid_samples(f.r, 3, 11 * n + f.k);
      auto ss = grid_samples(f.s, 3, 13 * n + f.k);
      for (const auto& x : rs)
        for (const auto& y : ss) {
          RatVec t = d_face(f, x, y);
          CHECK(contains(spec, t));
          CHECK(on_facet(spec, f, t));
          auto [xi, yi] = d_face_invert(f, t);
          CHECK(xi == x);
          CHECK(yi == y);
        }
    }
  }
}

TEST_CASE("face operator is injective per facet") {
  // Distinct inputs map to distinct points.
  for (const auto& f : face_indices(4)) {
    std::set<std::string> seen;
    for (const auto& x : vertices(f.r))
      for (const auto& y : vertices(f.s))
        seen.insert(vec_to_string(d_face(f, x, y)));
    CHECK(seen.size() == vertices(f.r).size() * vertices(f.s).size());
  }
}

TEST_CASE("facet decomposition frozen examples") {
  auto s3 = build_spec(3);
  auto d1 = facet_decompose(s3, {Rat(0), rat(1, 4), rat(7, 4)});
  CHECK(d1.face == FaceIndex{2, 2, 2});
  CHECK(d1.c == rat(1, 2));

  auto d2 = facet_decompose(s3, rv({0, 1, 1}));
  CHECK(d2.face == FaceIndex{1, 2, 2});
  CHECK(d2.c == 0);

  CHECK(facet_decompose(s3, interior_point(3)).is_center());
  CHECK_THROWS_AS(facet_decompose(s3, rv({0, 2, 0})), DomainError);
}

TEST_CASE("facet decomposition reconstructs the point") {
  for (int n = 3; n <= 5; ++n) {
    auto spec = build_spec(n);
    for (const auto& t : grid_samples(n, 12, 17 * n)) {
      auto dec = facet_decompose(spec, t);
      if (dec.is_center()) {
        CHECK(t == spec.b);
        continue;
      }
      RatVec bd = d_face(dec.face, dec.rho, dec.sigma);
      RatVec recon =
          vec_add(vec_scale(1 - dec.c, bd), vec_scale(dec.c, spec.b));
      CHECK(recon == t);
      CHECK(dec.c >= 0);
      CHECK(dec.c < 1);
    }
  }
}

TEST_CASE("degeneracy base cases") {
  CHECK(degeneracy(1, 2, rv({0, 1})) == rv({0}));
  CHECK(degeneracy(2, 2, rv({0, 1})) == rv({0}));
  for (int n = 3; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      CHECK(degeneracy(j, n, interior_point(n)) == interior_point(n - 1));
  // s_1 of the right-bracketing vertex of the pentagon bottom.
  CHECK(degeneracy(1, 3, rv({0, 0, 2})) == rv({0, 1}));
  CHECK_THROWS_AS(degeneracy(0, 3, rv({0, 1, 1})), UsageError);
  CHECK_THROWS_AS(degeneracy(1, 3, rv({0, 2, 0})), DomainError);
}

TEST_CASE("degeneracy lands in the smaller polytope") {
  for (int n = 3; n <= 5; ++n) {
    auto lower = build_spec(n - 1);
    for (const auto& t : grid_samples(n, 6, 23 * n))
      for (int j = 1; j <= n; ++j)
        CHECK(contains(lower, degeneracy(j, n, t)));
  }
}

TEST_CASE("degeneracy case table is well defined on overlaps") {
  // Every applicable row must give the same point, for every facet sample.
  for (int n = 3; n <= 5; ++n) {
    for (const auto& f : face_indices(n)) {
      auto rs = grid_samples(f.r, 3, 31 * n + f.k);
      auto ss = grid_samples(f.s, 3, 37 * n + f.k);
      for (const auto& x : rs)
        for (const auto& y : ss)
          for (int j = 1; j <= n; ++j) {
            auto rows = degeneracy_on_face_all_rows(j, f, x, y);
            for (const auto& row : rows) CHECK(row == rows[0]);
          }
    }
  }
}

TEST_CASE("degeneracy agrees across adjacent facets on ridges") {
  // A point on two facets can be pushed down through either case table.
  for (int n = 3; n <= 5; ++n) {
    auto spec = build_spec(n);
    int ridge_points = 0;
    for (const auto& v : vertices(n)) {
      std::vector<FaceIndex> on;
      for (const auto& f : face_indices(n))
        if (on_facet(spec, f, v)) on.push_back(f);
      if (on.size() < 2) continue;
      ++ridge_points;
      for (int j = 1; j <= n; ++j) {
        RatVec ref;
        for (const auto& f : on) {
          auto [x, y] = d_face_invert(f, v);
          auto rows = degeneracy_on_face_all_rows(j, f, x, y);
          if (ref.empty()) ref = rows[0];
          for (const auto& row : rows) CHECK(row == ref);
        }
      }
    }
    if (n >= 4) CHECK(ridge_points >= 2);
  }
}

TEST_CASE("recursive complexes verify") {
  auto k3 = build_complex(3);
  CHECK(k3.complex.cells.size() == 6);  // empty, 2 vertices, center, 2 edges
  CHECK(k3.complex.dim() == 1);
  CHECK(verify_complex(k3.complex).ok);

  auto k4 = build_complex(4);
  CHECK(k4.complex.dim() == 2);
  CHECK(verify_complex(k4.complex).ok);
  CHECK(k4.facets.size() == 5);

  auto k5 = build_complex(5);
  CHECK(k5.complex.dim() == 3);
  CHECK(verify_complex(k5.complex).ok);
}

TEST_CASE("facet subcomplexes carry the product structure") {
  auto k4 = build_complex(4);
  for (const auto& [f, L] : k4.facets) {
    CHECK(L.dim() == 1);
    CHECK(verify_complex(L).ok);
    // Every facet cell sits inside K(4).
    for (const auto& c : L.cells) CHECK(k4.complex.has(c));
  }
}

TEST_CASE("boundary of the three dimensional complex is a sphere") {
  auto k5 = build_complex(5);
  std::map<std::string, int> dim_of;
  for (const auto& [f, L] : k5.facets)
    for (const auto& c : L.cells)
      if (!c->is_empty()) dim_of.emplace(cell_key(*c), c->dim);
  long chi = 0;
  for (const auto& [key, d] : dim_of) chi += (d % 2 == 0) ? 1 : -1;
  CHECK(chi == 2);  // V - E + F of a 2-sphere
}
