#pragma once

#include <cstdint>
#include <vector>

namespace moead {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

struct Solution {
    DecisionVector x;
    ObjectiveVector f;
    std::uint64_t eval_index = 0;  // 1-based order of evaluation within a run
};

}  // namespace moead
