#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "moead/types.hpp"

namespace moead {

enum class ProblemId {
    dtlz1,
    dtlz2,
    dtlz3,
    dtlz4,
    wfg1,
    wfg2,
    wfg3,
    wfg4,
    wfg5,
    wfg6,
    wfg7,
    wfg8,
    wfg9,
};

struct ProblemSpec {
    ProblemId id{};
    std::string name;
    int M = 0;  // objectives
    int D = 0;  // decision variables
    int k = 0;  // DTLZ: distance-block size, D = M + k - 1; WFG: position parameters, k = 2(M-1)
    int l = 0;  // WFG distance parameters (20), 0 for DTLZ
    std::vector<double> lower;
    std::vector<double> upper;
    ObjectiveVector ideal;  // analytic per-objective minima
    ObjectiveVector nadir;  // analytic per-objective maxima over the Pareto front
};

// name is one of "dtlz1".."dtlz4", "wfg1".."wfg9" (case-insensitive); M in [2, 5]
ProblemSpec make_problem(const std::string& name, int M);

const std::vector<std::string>& problem_names();

// WFG1-3 have no closed-form front here; reference_front throws for them
bool has_analytic_front(const ProblemSpec& spec);

ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x);

struct ReferenceSet {
    std::vector<ObjectiveVector> points;
};

// Uniformly structured sample of the analytic front: simplex-lattice directions
// mapped onto the front surface. Returns at least n_points points (the smallest
// lattice resolution whose size reaches n_points).
ReferenceSet reference_front(const ProblemSpec& spec, std::size_t n_points = 10000);

}  // namespace moead
