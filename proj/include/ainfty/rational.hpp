#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ainfty {

/// Exact rational scalar.  mpq_class keeps values canonicalized
/// (lowest terms, positive denominator), which is what vector
/// deduplication relies on.
using Rat = mpq_class;

/// A point or direction in ambient R^n, with exact coordinates.
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Correctly rounded conversion to double.  mpq_get_d truncates toward
/// zero, so divide the parts instead.
inline double to_double(const Rat& r) {
  return r.get_num().get_d() / r.get_den().get_d();
}

/// Serializes as "p/q", or plain "p" when the denominator is 1
/// (so "0/1" becomes "0").
std::string rat_to_string(const Rat& r);

/// Parses "p", "p/q" or "-p/q".  Throws std::invalid_argument on garbage
/// or zero denominator.
Rat rat_from_string(const std::string& s);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);
bool vec_is_zero(const RatVec& a);

std::string vec_to_string(const RatVec& v);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ainfty
