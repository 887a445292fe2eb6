#include "ainfty/cubic.hpp"

#include <algorithm>
#include <sstream>

namespace ainfty {
namespace {

bool vec_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::vector<RatVec> canonical_vertices(std::vector<RatVec> vs) {
  std::sort(vs.begin(), vs.end(), vec_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

CellPtr finish(CubicSet c) { return std::make_shared<const CubicSet>(std::move(c)); }

}  // namespace

std::string cell_key(const CubicSet& c) {
  std::string key;
  for (const auto& v : c.vertices) key += vec_to_string(v);
  return key;
}

CellPtr empty_cell(int ambient) {
  CubicSet c;
  c.kind = CellKind::Empty;
  c.ambient = ambient;
  c.dim = -1;
  return finish(std::move(c));
}

CellPtr point_cell(const RatVec& p) {
  CubicSet c;
  c.kind = CellKind::Point;
  c.ambient = static_cast<int>(p.size());
  c.dim = 0;
  c.hull = AffineSubspace{p, {}};
  c.vertices = {p};
  return finish(std::move(c));
}

CellPtr join(const CellPtr& a, const CellPtr& b) {
  if (a->is_empty()) return b;
  if (b->is_empty()) return a;
  if (a->ambient != b->ambient)
    throw UsageError("join: mixed ambient dims");

  std::vector<RatVec> vs = a->vertices;
  vs.insert(vs.end(), b->vertices.begin(), b->vertices.end());
  CubicSet c;
  c.kind = CellKind::Join;
  c.ambient = a->ambient;
  c.left = a;
  c.right = b;
  c.vertices = canonical_vertices(std::move(vs));
  c.hull = affine_hull(c.vertices);
  c.dim = c.hull->dim();
  if (c.dim != a->dim + b->dim + 1)
    throw JoinDegenerate("join: cells not in general position (" +
                         cell_key(*a) + " * " + cell_key(*b) + ")");
  return finish(std::move(c));
}

CellPtr product_with_anchor(const CellPtr& a, const CellPtr& b,
                            const RatVec& anchor) {
  if (a->is_empty() || b->is_empty()) return empty_cell(a->ambient);
  std::vector<RatVec> vs;
  vs.reserve(a->vertices.size() * b->vertices.size());
  for (const auto& x : a->vertices)
    for (const auto& y : b->vertices)
      vs.push_back(vec_sub(vec_add(x, y), anchor));
  CubicSet c;
  c.kind = CellKind::Product;
  c.ambient = a->ambient;
  c.left = a;
  c.right = b;
  c.anchor = anchor;
  c.vertices = canonical_vertices(std::move(vs));
  c.hull = affine_hull(c.vertices);
  c.dim = c.hull->dim();
  if (c.dim != a->dim + b->dim)
    throw ProductDegenerate("product: direction spaces overlap (" +
                            cell_key(*a) + " x " + cell_key(*b) + ")");
  return finish(std::move(c));
}

CellPtr product(const CellPtr& a, const CellPtr& b) {
  if (a->is_empty() || b->is_empty()) return empty_cell(a->ambient);
  if (a->ambient != b->ambient)
    throw UsageError("product: mixed ambient dims");
  auto inter = intersect_affine(*a->hull, *b->hull);
  if (inter.kind != AffineIntersection::Point)
    throw ProductDegenerate("product: hull intersection is not a point (" +
                            cell_key(*a) + " x " + cell_key(*b) + ")");
  return product_with_anchor(a, b, inter.point);
}

std::vector<CellPtr> faces(const CellPtr& c) {
  std::map<std::string, CellPtr> out;
  auto add = [&](const CellPtr& f) { out.emplace(cell_key(*f), f); };
  switch (c->kind) {
    case CellKind::Empty:
      add(c);
      break;
    case CellKind::Point:
      add(empty_cell(c->ambient));
      add(c);
      break;
    case CellKind::Join:
      for (const auto& t1 : faces(c->left))
        for (const auto& t2 : faces(c->right)) add(join(t1, t2));
      break;
    case CellKind::Product:
      for (const auto& t1 : faces(c->left))
        for (const auto& t2 : faces(c->right))
          add(product_with_anchor(t1, t2, *c->anchor));
      break;
  }
  std::vector<CellPtr> v;
  v.reserve(out.size());
  for (auto& [k, f] : out) v.push_back(std::move(f));
  return v;
}

bool is_face(const CellPtr& tau, const CellPtr& sigma) {
  const std::string key = cell_key(*tau);
  for (const auto& f : faces(sigma))
    if (cell_key(*f) == key) return true;
  return false;
}

bool cell_contains(const CubicSet& c, const RatVec& p) {
  if (c.is_empty()) return false;
  return convex_membership(p, c.vertices);
}

CellPtr map_cell(const CellPtr& c,
                 const std::function<RatVec(const RatVec&)>& f) {
  switch (c->kind) {
    case CellKind::Empty: {
      // Recover the target ambient dimension from the image of any point.
      RatVec probe(c->ambient, Rat(0));
      return empty_cell(static_cast<int>(f(probe).size()));
    }
    case CellKind::Point:
      return point_cell(f(c->vertices[0]));
    case CellKind::Join:
      return join(map_cell(c->left, f), map_cell(c->right, f));
    case CellKind::Product:
      return product_with_anchor(map_cell(c->left, f), map_cell(c->right, f),
                                 f(*c->anchor));
  }
  throw std::logic_error("map_cell: bad kind");
}

int CubicComplex::dim() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c->dim);
  return d;
}

CubicComplex make_complex(int ambient, const std::vector<CellPtr>& cells) {
  CubicComplex K;
  K.ambient = ambient;
  for (const auto& c : cells) {
    std::string key = cell_key(*c);
    if (K.index.emplace(key, static_cast<int>(K.cells.size())).second)
      K.cells.push_back(c);
  }
  return K;
}

CubicComplex face_complex(const CellPtr& c) {
  return make_complex(c->ambient, faces(c));
}

CubicComplex boundary_complex(const CellPtr& c) {
  if (c->dim < 0) throw UsageError("boundary_complex: empty cell");
  std::vector<CellPtr> fs;
  const std::string self = cell_key(*c);
  for (const auto& f : faces(c))
    if (cell_key(*f) != self) fs.push_back(f);
  return make_complex(c->ambient, fs);
}

VerifyReport verify_complex(const CubicComplex& K) {
  VerifyReport rep;
  bool has_empty = false;
  for (const auto& c : K.cells)
    if (c->is_empty()) has_empty = true;
  if (!has_empty) rep.fail("condition (1): empty cell missing");

  // Per-cell face tables, reused by closure and pairwise checks.
  std::vector<std::map<std::string, CellPtr>> face_tables(K.cells.size());
  for (size_t i = 0; i < K.cells.size(); ++i)
    for (const auto& f : faces(K.cells[i]))
      face_tables[i].emplace(cell_key(*f), f);

  for (size_t i = 0; i < K.cells.size(); ++i)
    for (const auto& [key, f] : face_tables[i])
      if (!K.index.count(key))
        rep.fail("condition (2): face " + (key.empty() ? "(empty)" : key) +
                 " of cell " + cell_key(*K.cells[i]) + " not in complex");

  for (size_t i = 0; i < K.cells.size(); ++i) {
    for (size_t j = i + 1; j < K.cells.size(); ++j) {
      // Candidate intersection: common vertices; it must name a common face.
      std::vector<RatVec> common;
      const auto& vi = K.cells[i]->vertices;
      const auto& vj = K.cells[j]->vertices;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::back_inserter(common), vec_less);
      CubicSet probe;
      probe.vertices = common;
      std::string key = cell_key(probe);
      if (!face_tables[i].count(key) || !face_tables[j].count(key))
        rep.fail("condition (0): unverifiable pair " + cell_key(*K.cells[i]) +
                 " , " + cell_key(*K.cells[j]));
    }
  }
  return rep;
}

VerifyReport verify_cubic_map(const CubicMapSpec& m) {
  VerifyReport rep;
  const auto& S = m.source;
  const auto& T = m.target;
  if (m.assignment.size() != S.cells.size()) {
    rep.fail("assignment not total on source cells");
    return rep;
  }

  std::vector<std::map<std::string, int>> src_faces(S.cells.size());
  for (size_t i = 0; i < S.cells.size(); ++i)
    for (const auto& f : faces(S.cells[i])) {
      auto it = S.index.find(cell_key(*f));
      if (it != S.index.end()) src_faces[i].emplace(it->first, it->second);
    }
  std::vector<std::map<std::string, int>> tgt_faces(T.cells.size());
  for (size_t i = 0; i < T.cells.size(); ++i)
    for (const auto& f : faces(T.cells[i])) {
      auto it = T.index.find(cell_key(*f));
      if (it != T.index.end()) tgt_faces[i].emplace(it->first, it->second);
    }

  // Condition (1): the preimage of the empty cell is exactly the empty cell.
  for (size_t i = 0; i < S.cells.size(); ++i) {
    bool src_empty = S.cells[i]->is_empty();
    bool tgt_empty = T.cells[m.assignment[i]]->is_empty();
    if (src_empty != tgt_empty)
      rep.fail("empty-cell fidelity fails at " + cell_key(*S.cells[i]));
  }

  // Order preservation and condition (2): face lifting.
  for (size_t i = 0; i < S.cells.size(); ++i) {
    int ti = m.assignment[i];
    for (const auto& [fkey, fi] : src_faces[i]) {
      int tf = m.assignment[fi];
      if (!tgt_faces[ti].count(cell_key(*T.cells[tf])))
        rep.fail("order preservation fails: face " + fkey + " of " +
                 cell_key(*S.cells[i]));
    }
    for (const auto& [tkey, tj] : tgt_faces[ti]) {
      bool lifted = false;
      for (const auto& [fkey, fi] : src_faces[i])
        if (m.assignment[fi] == tj) {
          lifted = true;
          break;
        }
      if (!lifted)
        rep.fail("face lifting fails: " + (tkey.empty() ? "(empty)" : tkey) +
                 " below image of " + cell_key(*S.cells[i]));
    }
  }
  return rep;
}

CubicComplex complex_join(const CubicComplex& K, const CubicComplex& L) {
  std::vector<CellPtr> cells;
  for (const auto& s : K.cells)
    for (const auto& t : L.cells) {
      try {
        cells.push_back(join(s, t));
      } catch (const JoinDegenerate&) {
        throw JoinDegenerate("complex_join: degenerate pair " + cell_key(*s) +
                             " * " + cell_key(*t));
      }
    }
  return make_complex(K.ambient, cells);
}

CubicComplex complex_product(const CubicComplex& K, const CubicComplex& L) {
  std::vector<RatVec> kv, lv;
  for (const auto& c : K.cells)
    kv.insert(kv.end(), c->vertices.begin(), c->vertices.end());
  for (const auto& c : L.cells)
    lv.insert(lv.end(), c->vertices.begin(), c->vertices.end());
  if (kv.empty() || lv.empty())
    throw ProductDegenerate("complex_product: factor has no vertices");
  auto inter = intersect_affine(affine_hull(kv), affine_hull(lv));
  if (inter.kind != AffineIntersection::Point)
    throw ProductDegenerate("complex_product: hulls do not meet in a point");

  std::vector<CellPtr> cells;
  for (const auto& s : K.cells)
    for (const auto& t : L.cells) {
      try {
        cells.push_back(product_with_anchor(s, t, inter.point));
      } catch (const ProductDegenerate&) {
        throw ProductDegenerate("complex_product: degenerate pair " +
                                cell_key(*s) + " x " + cell_key(*t));
      }
    }
  return make_complex(K.ambient, cells);
}

}  // namespace ainfty
