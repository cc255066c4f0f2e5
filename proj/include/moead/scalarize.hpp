#pragma once

#include <string>
#include <vector>

#include "moead/types.hpp"

namespace moead {

enum class ScalarizerKind { chm, chd, pbi };

std::string to_string(ScalarizerKind kind);
ScalarizerKind parse_scalarizer(const std::string& name);

// Weighted Chebyshev, multiplicative form: max_i w_i |f_i - z_i|.
double g_chm(const ObjectiveVector& f, const std::vector<double>& w, const ObjectiveVector& z);

// Weighted Chebyshev, divisive form: max_i |f_i - z_i| / w_i, zero weights
// replaced by 1e-6.
double g_chd(const ObjectiveVector& f, const std::vector<double>& w, const ObjectiveVector& z);

// Penalty boundary intersection: d1 + theta * d2 with d1 the projection of
// f - z onto w and d2 the distance to that projection line.
double g_pbi(const ObjectiveVector& f, const std::vector<double>& w, const ObjectiveVector& z,
             double theta);

struct Scalarizer {
    ScalarizerKind kind = ScalarizerKind::chm;
    double theta = 5.0;  // pbi only

    double value(const ObjectiveVector& f, const std::vector<double>& w,
                 const ObjectiveVector& z) const;
};

// Componentwise minimum, in place.
void update_ideal(ObjectiveVector& z, const ObjectiveVector& f);

// (f - ideal) / max(nadir - ideal, 1e-12), componentwise.
ObjectiveVector normalize_objectives(const ObjectiveVector& f, const ObjectiveVector& ideal,
                                     const ObjectiveVector& nadir);

void normalize_objectives_into(const ObjectiveVector& f, const ObjectiveVector& ideal,
                               const ObjectiveVector& nadir, ObjectiveVector& out);

}  // namespace moead
