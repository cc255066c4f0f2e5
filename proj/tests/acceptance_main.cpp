// Acceptance suite: reproduces the control-parameter findings at desk scale
// (50,000 evaluations, 31 seeds) and checks the toolkit's structural
// guarantees. Each criterion prints one PASS/FAIL line; the exit code is the
// number of failures. Sweep state lives under --work-dir and is resumable.

#include <CLI11.hpp>

#include <moead/archive.hpp>
#include <moead/harness.hpp>
#include <moead/indicators.hpp>
#include <moead/io.hpp>
#include <moead/problems.hpp>
#include <moead/rng.hpp>
#include <moead/stats.hpp>
#include <moead/weights.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace moead;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

double median(std::vector<double> v) { return percentile(std::move(v), 50.0); }

// Last-snapshot metric per seed for one configuration label, ordered by seed.
std::vector<double> tail_samples(const std::vector<RunRecord>& records, const std::string& label,
                                 const std::function<double(const SnapshotRecord&)>& field) {
    std::map<int, double> by_seed;
    for (const auto& r : records) {
        if (r.label != label) continue;
        if (r.snapshots.empty()) throw std::runtime_error("record without snapshots");
        by_seed[r.seed_index] = field(r.snapshots.back());
    }
    if (by_seed.empty()) throw std::runtime_error("no records labelled " + label);
    std::vector<double> out;
    out.reserve(by_seed.size());
    for (const auto& [_, v] : by_seed) out.push_back(v);
    return out;
}

std::vector<double> tail_hv(const std::vector<RunRecord>& records, const std::string& label,
                            bool reduced) {
    return tail_samples(records, label, [reduced](const SnapshotRecord& s) {
        return reduced ? s.hv_reduced_uea : s.hv_final_pop;
    });
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec, const fs::path& dir, bool verbose) {
    SweepOptions opts;
    opts.out_dir = dir;
    opts.verbose = verbose;
    const SweepOutcome outcome = execute_sweep(spec, opts);
    std::cerr << dir.filename().string() << ": " << outcome.executed << " runs executed, "
              << outcome.skipped << " reused\n";
    return load_records(outcome.runs_dir);
}

// Greedy leader clustering; a point within radius of an existing center joins
// that cluster, otherwise it founds a new one.
std::size_t cluster_count(const std::vector<ObjectiveVector>& pts, double radius) {
    std::vector<ObjectiveVector> centers;
    for (const auto& p : pts) {
        bool close = false;
        for (const auto& c : centers) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) d2 += (p[i] - c[i]) * (p[i] - c[i]);
            if (d2 <= radius * radius) {
                close = true;
                break;
            }
        }
        if (!close) centers.push_back(p);
    }
    return centers.size();
}

struct McCheck {
    std::size_t failures = 0;
    double worst_z = 0.0;
};

// Exact hypervolume against a Monte-Carlo estimate on random point sets.
McCheck hypervolume_vs_monte_carlo(std::size_t sets, std::size_t samples) {
    McCheck out;
    for (std::size_t t = 0; t < sets; ++t) {
        const int M = 2 + static_cast<int>(t % 3);
        const std::size_t n = 2 + (7 * t + 3) % 11;
        Rng rng(90001 + t);
        std::vector<ObjectiveVector> pts(n, ObjectiveVector(M));
        for (auto& p : pts)
            for (auto& c : p) c = rng.uniform();
        const ObjectiveVector ref(M, kHvRefCoord);
        const double exact = hypervolume_raw(pts, ref);

        std::size_t hits = 0;
        ObjectiveVector s(M);
        for (std::size_t it = 0; it < samples; ++it) {
            for (int d = 0; d < M; ++d) s[d] = kHvRefCoord * rng.uniform();
            for (const auto& p : pts) {
                bool dom = true;
                for (int d = 0; d < M; ++d)
                    if (p[d] > s[d]) {
                        dom = false;
                        break;
                    }
                if (dom) {
                    ++hits;
                    break;
                }
            }
        }
        const double box = std::pow(kHvRefCoord, M);
        const double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
        const double mc = p_hat * box;
        const double sigma = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples)) * box;
        const double z = sigma > 0.0 ? std::abs(exact - mc) / sigma
                                     : (exact == mc ? 0.0 : 1e9);
        out.worst_z = std::max(out.worst_z, z);
        if (z > 3.0) ++out.failures;
    }
    return out;
}

bool archive_matches_brute_force(std::uint64_t seed, int M, std::size_t count) {
    Rng rng(seed);
    std::vector<ObjectiveVector> stream;
    stream.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ObjectiveVector f(M);
        for (auto& c : f) {
            c = rng.uniform();
            // coarse values create exact duplicates and plenty of dominance
            if (rng.uniform() < 0.5) c = std::round(c * 8.0) / 8.0;
        }
        stream.push_back(std::move(f));
    }
    Archive archive;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        Solution s;
        s.f = stream[i];
        s.eval_index = i;
        archive.insert(std::move(s));
    }
    std::vector<ObjectiveVector> expected;
    for (const std::size_t i : nondominated_indices(stream)) expected.push_back(stream[i]);
    std::vector<ObjectiveVector> got = archive.objectives();
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    return expected == got;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite for the decomposition toolkit"};
    std::string work_dir_arg;
    int runs = 31;
    std::uint64_t max_evals = 50000;
    std::uint64_t log_interval = 2000;
    double alpha = 0.05;
    bool verbose = true;
    app.add_option("--work-dir", work_dir_arg, "directory for resumable sweep state")
        ->required();
    app.add_option("--runs", runs, "seeds per configuration (default 31)");
    app.add_option("--max-evals", max_evals, "evaluation budget per run (default 50000)");
    app.add_option("--alpha", alpha, "significance level (default 0.05)");
    app.add_flag("--quiet{false}", verbose, "suppress sweep progress");
    CLI11_PARSE(app, argc, argv);

    const fs::path work = work_dir_arg;
    fs::create_directories(work);

    std::vector<Criterion> results;
    const auto add = [&results](const std::string& id, const std::string& title, bool pass,
                                const std::string& detail) {
        results.push_back({id, title, pass, detail});
    };
    const auto guarded = [&add](const std::string& id, const std::string& title,
                                const std::function<std::pair<bool, std::string>()>& body) {
        try {
            const auto [pass, detail] = body();
            add(id, title, pass, detail);
        } catch (const std::exception& e) {
            add(id, title, false, std::string("error: ") + e.what());
        }
    };

    // --- sweeps ---------------------------------------------------------
    SweepSpec mu_spec;
    mu_spec.instances = {{"wfg4", 3}};
    mu_spec.vary = "mu";
    mu_spec.mu_values = {28, 406};
    mu_spec.runs = runs;
    mu_spec.max_evals = max_evals;
    mu_spec.log_interval = log_interval;

    SweepSpec g_spec;
    g_spec.instances = {{"wfg4", 5}};
    g_spec.vary = "g";
    g_spec.runs = runs;
    g_spec.max_evals = max_evals;
    g_spec.log_interval = log_interval;

    SweepSpec theta_spec;
    theta_spec.instances = {{"wfg4", 3}};
    theta_spec.vary = "theta";
    theta_spec.theta_values = {0.1, 2.0, 5.0};
    theta_spec.metrics = true;
    theta_spec.runs = runs;
    theta_spec.max_evals = max_evals;
    theta_spec.log_interval = log_interval;

    std::vector<RunRecord> mu_records, g_records, theta_records;
    try {
        mu_records = run_sweep(mu_spec, work / "mu_sweep", verbose);
        theta_records = run_sweep(theta_spec, work / "theta_sweep", verbose);
        g_records = run_sweep(g_spec, work / "g_sweep", verbose);
    } catch (const std::exception& e) {
        std::cerr << "sweep execution failed: " << e.what() << "\n";
        return 8;
    }

    // --- C1: population-size rank inversion on wfg4 m3 -------------------
    guarded("C1", "population-size rank inversion (wfg4 m3, mu 28 vs 406)", [&] {
        const auto fp28 = tail_hv(mu_records, "mu=28", false);
        const auto fp406 = tail_hv(mu_records, "mu=406", false);
        const auto red28 = tail_hv(mu_records, "mu=28", true);
        const auto red406 = tail_hv(mu_records, "mu=406", true);
        const double p_final = wilcoxon_rank_sum(fp28, fp406);   // 406 exceeds 28
        const double p_reduced = wilcoxon_rank_sum(red406, red28);  // 28 exceeds 406
        const bool pass = p_final < alpha && p_reduced < alpha;
        return std::make_pair(pass, "final-pop p=" + fmt(p_final) +
                                        " (mu=406 better), reduced-uea p=" + fmt(p_reduced) +
                                        " (mu=28 better)");
    });

    // --- C2: scalarizer flip on wfg4 m5 ----------------------------------
    guarded("C2", "scalarizer flip (wfg4 m5, chm/chd/pbi)", [&] {
        const double med_chm = median(tail_hv(g_records, "g=chm", false));
        const double med_chd = median(tail_hv(g_records, "g=chd", false));
        const double med_pbi = median(tail_hv(g_records, "g=pbi", false));
        const double p_reduced =
            wilcoxon_rank_sum(tail_hv(g_records, "g=pbi", true), tail_hv(g_records, "g=chm", true));
        const bool final_ok = med_pbi > med_chm && med_pbi > med_chd;
        const bool pass = final_ok && p_reduced < alpha;
        return std::make_pair(pass, "final-pop medians chm=" + fmt(med_chm) + " chd=" +
                                        fmt(med_chd) + " pbi=" + fmt(med_pbi) +
                                        ", reduced-uea p=" + fmt(p_reduced) + " (chm beats pbi)");
    });

    // --- C3: penalty flip on wfg4 m3 --------------------------------------
    guarded("C3", "pbi penalty flip (wfg4 m3, theta 0.1 vs 2)", [&] {
        const auto fp01 = tail_hv(theta_records, "theta=0.1", false);
        const auto fp2 = tail_hv(theta_records, "theta=2", false);
        const double p_final = wilcoxon_rank_sum(fp01, fp2);  // theta=2 exceeds theta=0.1
        const double med01 = median(tail_hv(theta_records, "theta=0.1", true));
        const double med2 = median(tail_hv(theta_records, "theta=2", true));
        const bool pass = p_final < alpha && med01 >= med2;
        return std::make_pair(pass, "final-pop p=" + fmt(p_final) +
                                        " (theta=2 better), reduced-uea medians theta0.1=" +
                                        fmt(med01) + " theta2=" + fmt(med2));
    });

    // --- C4: theta=0.1 collapses the final population ---------------------
    guarded("C4", "theta=0.1 degenerate final population (wfg4 m3)", [&] {
        const ProblemSpec prob = make_problem("wfg4", 3);
        int collapsed = 0, total = 0;
        for (const auto& r : theta_records) {
            if (r.label != "theta=0.1") continue;
            ++total;
            std::vector<ObjectiveVector> norm;
            norm.reserve(r.final_population_front.size());
            for (const auto& f : r.final_population_front) {
                ObjectiveVector v(f.size());
                for (std::size_t i = 0; i < f.size(); ++i)
                    v[i] = (f[i] - prob.ideal[i]) / (prob.nadir[i] - prob.ideal[i]);
                norm.push_back(std::move(v));
            }
            if (cluster_count(norm, 0.05) <= 3) ++collapsed;
        }
        const int needed = (25 * runs + 30) / 31;
        return std::make_pair(collapsed >= needed && total == runs,
                              std::to_string(collapsed) + "/" + std::to_string(total) +
                                  " runs collapsed to <=3 clusters (need " +
                                  std::to_string(needed) + ")");
    });

    // --- C5: anytime snapshot protocol ------------------------------------
    guarded("C5", "anytime snapshot protocol on every run", [&] {
        const std::uint64_t expected =
            max_evals / log_interval + (max_evals % log_interval != 0 ? 1 : 0);
        std::size_t checked = 0, bad = 0;
        const auto scan = [&](const std::vector<RunRecord>& records) {
            for (const auto& r : records) {
                ++checked;
                bool ok = r.snapshots.size() == expected;
                for (std::size_t i = 0; ok && i < r.snapshots.size(); ++i) {
                    const auto& s = r.snapshots[i];
                    const std::uint64_t boundary =
                        std::min((i + 1) * log_interval, max_evals);
                    ok = s.boundary == boundary && s.eval_count >= s.boundary &&
                         s.eval_count <= max_evals && s.hv_final_pop >= 0.0 &&
                         s.hv_final_pop <= 1.0 && s.hv_reduced_uea >= 0.0 &&
                         s.hv_reduced_uea <= 1.0;
                }
                if (!ok) ++bad;
            }
        };
        scan(mu_records);
        scan(g_records);
        scan(theta_records);
        return std::make_pair(bad == 0, std::to_string(checked) + " runs, " +
                                            std::to_string(expected) + " snapshots each, " +
                                            std::to_string(bad) + " malformed");
    });

    // --- C6: reduced archive dominates the final population ---------------
    guarded("C6", "reduced-uea HV >= final-pop HV on >=95% of snapshots", [&] {
        std::size_t total = 0, good = 0;
        for (const auto& r : mu_records)
            for (const auto& s : r.snapshots) {
                ++total;
                if (s.hv_reduced_uea >= s.hv_final_pop) ++good;
            }
        const double frac = total ? static_cast<double>(good) / total : 0.0;
        return std::make_pair(frac >= 0.95,
                              fmt(100.0 * frac) + "% of " + std::to_string(total) + " snapshots");
    });

    // --- C7: indicator correctness, no optimizer involved -----------------
    guarded("C7", "indicator cross-checks (HV/GD/IGD/MS, archive, weights, ranks)", [&] {
        std::vector<std::string> faults;

        const McCheck mc = hypervolume_vs_monte_carlo(200, 10'000'000);
        if (mc.failures > 0)
            faults.push_back(std::to_string(mc.failures) + " HV sets beyond 3 sigma");

        const std::vector<ObjectiveVector> a = {{0.0, 1.0}, {1.0, 0.0}};
        const std::vector<ObjectiveVector> r = {{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}};
        const std::vector<ObjectiveVector> b = {{0.25, 0.75}};
        if (std::abs(gd(a, r) - 0.0) > 1e-12) faults.push_back("gd hand value");
        if (std::abs(igd(a, r) - std::sqrt(0.5) / 3.0) > 1e-12) faults.push_back("igd hand value");
        if (std::abs(ms(a) - std::sqrt(2.0)) > 1e-12) faults.push_back("ms hand value");
        if (std::abs(gd(b, r) - std::sqrt(0.125)) > 1e-12) faults.push_back("gd singleton");
        if (std::abs(igd(b, r) - (2.0 * std::sqrt(0.125) + std::sqrt(1.125)) / 3.0) > 1e-12)
            faults.push_back("igd singleton");
        if (ms(b) != 0.0) faults.push_back("ms singleton");

        for (std::uint64_t s = 0; s < 5; ++s)
            if (!archive_matches_brute_force(7100 + s, 2 + static_cast<int>(s % 3), 1000))
                faults.push_back("archive stream " + std::to_string(s));

        for (int M = 2; M <= 5; ++M)
            for (const std::size_t mu : examined_mu(M)) {
                const int H = resolution_for_mu(M, mu);
                const std::uint64_t want = binomial(H + M - 1, M - 1);
                if (want != mu || das_dennis(M, H).vectors.size() != mu ||
                    simplex_lattice_size(M, H) != mu)
                    faults.push_back("lattice M=" + std::to_string(M) +
                                     " mu=" + std::to_string(mu));
            }

        double worst_gap = 0.0;
        Rng rng(424242);
        for (int t = 0; t < 200; ++t) {
            std::vector<double> x(10), y(10);
            for (auto& v : x) v = rng.uniform();
            for (auto& v : y) v = rng.uniform() + 0.15 * rng.uniform();
            worst_gap = std::max(worst_gap,
                                 std::abs(wilcoxon_exact_p(x, y) - wilcoxon_normal_p(x, y)));
        }
        if (worst_gap > 0.01) faults.push_back("wilcoxon gap " + fmt(worst_gap));

        std::string detail = "worst HV z=" + fmt(mc.worst_z) + ", worst rank-sum gap=" +
                             fmt(worst_gap);
        if (!faults.empty()) {
            detail += "; faults:";
            for (const auto& f : faults) detail += " [" + f + "]";
        }
        return std::make_pair(faults.empty(), detail);
    });

    // --- C8: GD/IGD consistency under the reduced archive -----------------
    guarded("C8", "reduced-uea GD/IGD ordering across theta (wfg4 m3)", [&] {
        const std::vector<std::string> labels = {"theta=0.1", "theta=2", "theta=5"};
        std::map<std::string, double> med_gd, med_igd;
        for (const auto& label : labels) {
            med_gd[label] = median(tail_samples(theta_records, label, [](const SnapshotRecord& s) {
                if (!s.gd_reduced_uea) throw std::runtime_error("missing reduced GD");
                return *s.gd_reduced_uea;
            }));
            med_igd[label] =
                median(tail_samples(theta_records, label, [](const SnapshotRecord& s) {
                    if (!s.igd_reduced_uea) throw std::runtime_error("missing reduced IGD");
                    return *s.igd_reduced_uea;
                }));
        }
        const auto best = [](const std::map<std::string, double>& m) {
            return std::min_element(m.begin(), m.end(), [](const auto& a, const auto& b) {
                       return a.second < b.second;
                   })->first;
        };
        const bool pass = best(med_gd) == "theta=0.1" && best(med_igd) == "theta=2";
        std::string detail = "median GD:";
        for (const auto& l : labels) detail += " " + l + "=" + fmt(med_gd[l]);
        detail += "; median IGD:";
        for (const auto& l : labels) detail += " " + l + "=" + fmt(med_igd[l]);
        return std::make_pair(pass, detail);
    });

    // --- report ------------------------------------------------------------
    std::size_t failures = 0;
    for (const auto& c : results) {
        if (!c.pass) ++failures;
        std::cout << c.id << " " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << ": "
                  << c.detail << "\n";
    }
    std::cout << "acceptance: " << (results.size() - failures) << "/" << results.size()
              << " criteria passed\n";
    return static_cast<int>(failures);
}
