#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "moead/archive.hpp"
#include "moead/problems.hpp"
#include "moead/rng.hpp"
#include "moead/scalarize.hpp"
#include "moead/types.hpp"

namespace moead {

struct RunConfig {
    ProblemSpec problem;
    std::size_t mu = 0;  // 0 picks the per-M default (200/210/220/210)
    Scalarizer scalarizer{};
    int T = 20;  // neighborhood size
    std::uint64_t max_evals = 50000;
    std::uint64_t log_interval = 2000;
    std::uint64_t seed = 1;
    double pc = 1.0;
    double eta_c = 20.0;
    double pm = -1.0;  // < 0 means 1/D
    double eta_m = 20.0;
    std::size_t reduction_size = 0;  // 0 picks the per-M default

    std::size_t resolved_mu() const;
    double resolved_pm() const;
};

std::size_t default_population_size(int M);

struct Snapshot {
    std::uint64_t boundary = 0;    // nominal logging point
    std::uint64_t eval_count = 0;  // evaluations actually spent when captured
    std::vector<ObjectiveVector> population_front;  // nondominated population objectives, deduplicated
    std::vector<ObjectiveVector> reduced_archive;   // distance-based archive subset
    double hv_population = 0.0;
    double hv_reduced_archive = 0.0;
    // Filled only when the run was given a reference front.
    std::optional<double> gd_population, igd_population, ms_population;
    std::optional<double> gd_reduced, igd_reduced, ms_reduced;
};

struct RunTrace {
    RunConfig config;  // with mu/pm resolved
    std::vector<Snapshot> snapshots;
    std::vector<Solution> final_population;
    Archive archive;
    std::vector<std::uint32_t> replacements_per_generation;
    std::uint64_t evaluations = 0;
};

// One full optimization run. When reference is non-null, GD/IGD/MS are
// computed per snapshot against it (objectives normalized by the problem's
// analytic ideal/nadir on both sides).
RunTrace run(const RunConfig& config, const ReferenceSet* reference = nullptr);

// Variation operators, exposed for direct testing. Both children of SBX are
// returned; the engine uses the first. Bounds are enforced after the fact.
std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1,
                                                        const DecisionVector& p2, double pc,
                                                        double eta_c,
                                                        const std::vector<double>& lower,
                                                        const std::vector<double>& upper, Rng& rng);

DecisionVector polynomial_mutation(const DecisionVector& x, double pm, double eta_m,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, Rng& rng);

}  // namespace moead
