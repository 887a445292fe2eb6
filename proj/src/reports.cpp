#include <json.hpp>

#include "ainfty/associahedron.hpp"
#include "ainfty/cubic.hpp"
#include "ainfty/engine.hpp"

namespace ainfty {
namespace {

using nlohmann::json;

json rat_json(const Rat& r) { return rat_to_string(r); }

json vec_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_json(x));
  return out;
}

const char* kind_name(CellKind k) {
  switch (k) {
    case CellKind::Empty:
      return "empty";
    case CellKind::Point:
      return "point";
    case CellKind::Join:
      return "join";
    case CellKind::Product:
      return "product";
  }
  return "?";
}

}  // namespace

std::string complex_to_json(const CubicComplex& K) {
  // Ids follow the canonical key order, so output is independent of the
  // construction order of the cells.
  std::vector<int> order;
  std::map<std::string, int> id_of;
  for (const auto& [key, idx] : K.index) {
    id_of.emplace(key, static_cast<int>(order.size()));
    order.push_back(idx);
  }
  auto child_id = [&](const CellPtr& c) -> json {
    if (!c) return nullptr;
    auto it = id_of.find(cell_key(*c));
    return it == id_of.end() ? json(nullptr) : json(it->second);
  };

  json cells = json::array();
  json face_pairs = json::array();
  for (size_t id = 0; id < order.size(); ++id) {
    const CellPtr& c = K.cells[order[id]];
    json entry = {{"id", id},
                  {"dim", c->dim},
                  {"kind", kind_name(c->kind)},
                  {"children", json::array({child_id(c->left), child_id(c->right)})}};
    json vs = json::array();
    for (const auto& v : c->vertices) vs.push_back(vec_json(v));
    entry["vertices"] = vs;
    entry["anchor"] = c->anchor ? vec_json(*c->anchor) : json(nullptr);
    cells.push_back(entry);

    for (const auto& f : faces(c)) {
      auto it = id_of.find(cell_key(*f));
      if (it != id_of.end() && it->second != static_cast<int>(id))
        face_pairs.push_back(json::array({it->second, id}));
    }
  }
  json out = {{"ambient_dim", K.ambient},
              {"cells", cells},
              {"faces", face_pairs}};
  return out.dump(2);
}

std::string spec_to_json(const AssociahedronSpec& spec) {
  json verts = json::array();
  for (const auto& v : vertices(spec.n)) verts.push_back(vec_json(v));
  json facets = json::array();
  for (const auto& f : face_indices(spec.n))
    facets.push_back({{"k", f.k}, {"r", f.r}, {"s", f.s}});
  json out = {{"n", spec.n},
              {"b", vec_json(spec.b)},
              {"vertices", verts},
              {"facets", facets}};
  return out.dump(2);
}

std::string ainfty_report_to_json(const AInftyReport& r) {
  json j = {{"condition", r.condition}, {"n", r.n},
            {"k", r.k},                 {"r", r.r},
            {"s", r.s},                 {"samples", r.samples},
            {"max_dev", r.max_dev},     {"tol", r.tol},
            {"pass", r.pass}};
  return j.dump();
}

}  // namespace ainfty
