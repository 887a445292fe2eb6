#include "ainfty/rational.hpp"

#include <sstream>

namespace ainfty {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  if (r.get_den() == 1)
    os << r.get_num();
  else
    os << r.get_num() << '/' << r.get_den();
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool vec_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v[i]);
  }
  return out + ")";
}

}  // namespace ainfty
