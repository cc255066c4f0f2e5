#pragma once

#include <vector>

#include "moead/types.hpp"

namespace moead {

inline constexpr double kHvRefCoord = 1.1;

// Exact hypervolume of the region dominated by points and bounded by ref
// (minimization; points not strictly below ref in every coordinate contribute
// nothing and are dropped). Dimension-sweep algorithm, exact for any M >= 2.
double hypervolume_raw(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref);

// Normalized hypervolume in [0, 1]: objectives are mapped through
// [ideal, nadir], points with any normalized coordinate >= 1.1 are discarded,
// the rest are measured against (1.1, ..., 1.1) and the result divided by 1.1^M.
double hypervolume(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ideal,
                   const ObjectiveVector& nadir);

// Mean Euclidean distance from each member of a to its nearest point of ref.
double gd(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& ref);

// Mean Euclidean distance from each reference point to its nearest member of a.
double igd(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& ref);

// Maximum spread: sqrt of the sum of squared per-objective extents of a.
double ms(const std::vector<ObjectiveVector>& a);

}  // namespace moead
