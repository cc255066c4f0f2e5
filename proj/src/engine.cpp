#include "moead/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "moead/indicators.hpp"
#include "moead/weights.hpp"

namespace moead {

std::size_t default_population_size(int M) {
    switch (M) {
        case 2: return 200;
        case 3: return 210;
        case 4: return 220;
        case 5: return 210;
        default: throw std::invalid_argument("no default population size for M outside [2, 5]");
    }
}

std::size_t RunConfig::resolved_mu() const {
    return mu != 0 ? mu : default_population_size(problem.M);
}

double RunConfig::resolved_pm() const {
    return pm >= 0.0 ? pm : 1.0 / static_cast<double>(problem.D);
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1,
                                                        const DecisionVector& p2, double pc,
                                                        double eta_c,
                                                        const std::vector<double>& lower,
                                                        const std::vector<double>& upper,
                                                        Rng& rng) {
    if (p1.size() != p2.size() || p1.size() != lower.size() || p1.size() != upper.size())
        throw std::invalid_argument("sbx arguments must share a dimension");
    DecisionVector c1 = p1, c2 = p2;
    if (!(rng.uniform() < pc)) return {c1, c2};
    for (std::size_t j = 0; j < p1.size(); ++j) {
        if (!(rng.uniform() < 0.5)) continue;
        const double u = rng.uniform();
        const double exp = 1.0 / (eta_c + 1.0);
        const double beta =
            u <= 0.5 ? std::pow(2.0 * u, exp) : std::pow(1.0 / (2.0 * (1.0 - u)), exp);
        const double y1 = 0.5 * ((1.0 + beta) * p1[j] + (1.0 - beta) * p2[j]);
        const double y2 = 0.5 * ((1.0 - beta) * p1[j] + (1.0 + beta) * p2[j]);
        c1[j] = std::clamp(y1, lower[j], upper[j]);
        c2[j] = std::clamp(y2, lower[j], upper[j]);
    }
    return {c1, c2};
}

DecisionVector polynomial_mutation(const DecisionVector& x, double pm, double eta_m,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, Rng& rng) {
    if (x.size() != lower.size() || x.size() != upper.size())
        throw std::invalid_argument("mutation arguments must share a dimension");
    DecisionVector y = x;
    const double mut_pow = 1.0 / (eta_m + 1.0);
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (!(rng.uniform() < pm)) continue;
        const double yl = lower[j], yu = upper[j];
        if (yu <= yl) continue;
        const double v = y[j];
        const double d1 = (v - yl) / (yu - yl);
        const double d2 = (yu - v) / (yu - yl);
        const double u = rng.uniform();
        double deltaq;
        if (u <= 0.5) {
            const double xy = 1.0 - d1;
            deltaq = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0), mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - d2;
            deltaq =
                1.0 - std::pow(2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0),
                               mut_pow);
        }
        y[j] = std::clamp(v + deltaq * (yu - yl), yl, yu);
    }
    return y;
}

namespace {

struct SnapshotPlan {
    std::vector<std::uint64_t> boundaries;
    std::size_t next = 0;
};

SnapshotPlan make_plan(std::uint64_t max_evals, std::uint64_t log_interval) {
    SnapshotPlan plan;
    for (std::uint64_t b = log_interval; b <= max_evals; b += log_interval)
        plan.boundaries.push_back(b);
    if (plan.boundaries.empty() || plan.boundaries.back() != max_evals)
        plan.boundaries.push_back(max_evals);
    return plan;
}

std::vector<ObjectiveVector> population_front(const std::vector<Solution>& pop) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    for (const auto& s : pop) objs.push_back(s.f);
    std::vector<ObjectiveVector> front;
    for (const std::size_t i : nondominated_indices(objs)) front.push_back(objs[i]);
    return front;
}

std::vector<ObjectiveVector> normalized_set(const std::vector<ObjectiveVector>& pts,
                                            const ObjectiveVector& ideal,
                                            const ObjectiveVector& nadir) {
    std::vector<ObjectiveVector> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(normalize_objectives(p, ideal, nadir));
    return out;
}

}  // namespace

RunTrace run(const RunConfig& config, const ReferenceSet* reference) {
    const ProblemSpec& prob = config.problem;
    const int M = prob.M;
    const int D = prob.D;
    const std::size_t mu = config.resolved_mu();
    const double pm = config.resolved_pm();
    if (config.max_evals < mu)
        throw std::invalid_argument("evaluation budget smaller than the population size");
    if (config.log_interval == 0) throw std::invalid_argument("log interval must be positive");
    if (config.pc < 0.0 || config.pc > 1.0) throw std::invalid_argument("pc must be in [0, 1]");
    if (pm < 0.0 || pm > 1.0) throw std::invalid_argument("pm must be in [0, 1]");
    if (config.scalarizer.kind == ScalarizerKind::pbi && config.scalarizer.theta < 0.0)
        throw std::invalid_argument("pbi theta must be nonnegative");
    if (config.T < 2) throw std::invalid_argument("mating needs a neighborhood of at least 2");

    const int H = resolution_for_mu(M, mu);  // throws for non-lattice mu
    const WeightSet ws = das_dennis(M, H);
    const Neighborhood nb = build_neighborhood(ws, config.T);
    const std::size_t T = static_cast<std::size_t>(config.T);

    Rng rng(config.seed);
    RunTrace trace;
    trace.config = config;
    trace.config.mu = mu;
    trace.config.pm = pm;

    const ReductionConfig red{config.reduction_size != 0 ? config.reduction_size
                                                         : default_reduction_size(M)};

    // reference front, pre-normalized once
    std::vector<ObjectiveVector> norm_ref;
    if (reference != nullptr) norm_ref = normalized_set(reference->points, prob.ideal, prob.nadir);

    std::vector<Solution> pop(mu);
    ObjectiveVector ideal_pt(M, std::numeric_limits<double>::infinity());
    std::uint64_t evals = 0;

    for (std::size_t i = 0; i < mu; ++i) {
        DecisionVector x(D);
        for (int j = 0; j < D; ++j) x[j] = rng.uniform(prob.lower[j], prob.upper[j]);
        ObjectiveVector f = evaluate(prob, x);
        ++evals;
        update_ideal(ideal_pt, f);
        pop[i] = Solution{std::move(x), std::move(f), evals};
        trace.archive.insert(pop[i]);
    }

    SnapshotPlan plan = make_plan(config.max_evals, config.log_interval);
    auto capture = [&]() {
        while (plan.next < plan.boundaries.size() && evals >= plan.boundaries[plan.next]) {
            Snapshot snap;
            snap.boundary = plan.boundaries[plan.next];
            snap.eval_count = evals;
            snap.population_front = population_front(pop);
            const std::vector<Solution> reduced = reduce(trace.archive, red, prob.ideal, prob.nadir);
            snap.reduced_archive.reserve(reduced.size());
            for (const auto& s : reduced) snap.reduced_archive.push_back(s.f);
            snap.hv_population = hypervolume(snap.population_front, prob.ideal, prob.nadir);
            snap.hv_reduced_archive = hypervolume(snap.reduced_archive, prob.ideal, prob.nadir);
            if (!norm_ref.empty()) {
                const auto np = normalized_set(snap.population_front, prob.ideal, prob.nadir);
                const auto nr = normalized_set(snap.reduced_archive, prob.ideal, prob.nadir);
                snap.gd_population = gd(np, norm_ref);
                snap.igd_population = igd(np, norm_ref);
                snap.ms_population = ms(np);
                snap.gd_reduced = gd(nr, norm_ref);
                snap.igd_reduced = igd(nr, norm_ref);
                snap.ms_reduced = ms(nr);
            }
            trace.snapshots.push_back(std::move(snap));
            ++plan.next;
        }
    };
    capture();

    ObjectiveVector nadir_est(M);
    ObjectiveVector norm_child(M), norm_member(M);
    while (evals < config.max_evals) {
        // population nadir estimate, fixed for the generation
        for (int c = 0; c < M; ++c) {
            double hi = pop[0].f[c];
            for (const auto& s : pop) hi = std::max(hi, s.f[c]);
            nadir_est[c] = hi;
        }
        const ObjectiveVector zero(M, 0.0);
        std::uint32_t replaced = 0;
        for (std::size_t i = 0; i < mu && evals < config.max_evals; ++i) {
            const auto& hood = nb.table[i];
            // two distinct mates from the neighborhood
            const std::size_t a = rng.index(T);
            std::size_t b = rng.index(T - 1);
            if (b >= a) ++b;
            auto children = sbx_crossover(pop[hood[a]].x, pop[hood[b]].x, config.pc, config.eta_c,
                                          prob.lower, prob.upper, rng);
            DecisionVector child = polynomial_mutation(children.first, pm, config.eta_m,
                                                       prob.lower, prob.upper, rng);
            ObjectiveVector f = evaluate(prob, child);
            ++evals;
            update_ideal(ideal_pt, f);
            normalize_objectives_into(f, ideal_pt, nadir_est, norm_child);
            for (const std::size_t j : hood) {
                normalize_objectives_into(pop[j].f, ideal_pt, nadir_est, norm_member);
                const double g_new = config.scalarizer.value(norm_child, ws.vectors[j], zero);
                const double g_old = config.scalarizer.value(norm_member, ws.vectors[j], zero);
                if (g_new <= g_old) {
                    pop[j] = Solution{child, f, evals};
                    ++replaced;
                }
            }
            trace.archive.insert(Solution{std::move(child), std::move(f), evals});
        }
        trace.replacements_per_generation.push_back(replaced);
        capture();
    }
    capture();

    trace.final_population = pop;
    trace.evaluations = evals;
    return trace;
}

}  // namespace moead
