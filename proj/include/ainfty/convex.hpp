#pragma once

#include <vector>

#include "ainfty/rational.hpp"

namespace ainfty {

/// True iff p is an exact convex combination of the given vertices.
/// Phase-one simplex with Bland's rule over exact rationals.
bool convex_membership(const RatVec& p, const std::vector<RatVec>& vertices);

}  // namespace ainfty
