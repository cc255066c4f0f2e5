#include "moead/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "moead/io.hpp"
#include "moead/stats.hpp"

namespace moead {

using ordered_json = nlohmann::ordered_json;

std::vector<std::size_t> examined_mu(int M) {
    switch (M) {
        case 2: return {25, 50, 100, 200, 300, 400};
        case 3: return {28, 55, 105, 210, 300, 406};
        case 4: return {35, 56, 120, 220, 286, 455};
        case 5: return {126, 210, 330, 495};
        default: throw std::invalid_argument("no population grid for M outside [2, 5]");
    }
}

std::vector<double> examined_theta() { return {0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 10.0}; }

std::vector<int> examined_T() { return {10, 20, 40, 80}; }

namespace {

template <typename T>
std::vector<T> json_array(const nlohmann::json& j, const char* key, std::vector<T> fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<std::vector<T>>();
}

}  // namespace

SweepSpec sweep_spec_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sweep spec is not valid JSON: ") + e.what());
    }
    SweepSpec spec;
    if (!j.contains("instances") || !j.at("instances").is_array() || j.at("instances").empty())
        throw std::invalid_argument("sweep spec needs a nonempty 'instances' array");
    for (const auto& inst : j.at("instances")) {
        InstanceSpec is;
        is.problem = inst.at("problem").get<std::string>();
        is.M = inst.at("M").get<int>();
        spec.instances.push_back(is);
    }
    spec.mode = j.value("mode", std::string("component"));
    if (spec.mode != "component" && spec.mode != "grid")
        throw std::invalid_argument("sweep mode must be 'component' or 'grid'");
    spec.vary = j.value("vary", std::string("mu"));
    if (spec.mode == "component" && spec.vary != "mu" && spec.vary != "g" &&
        spec.vary != "theta" && spec.vary != "T")
        throw std::invalid_argument("vary must be one of mu, g, theta, T");
    spec.mu_values = json_array<std::size_t>(j, "mu", {});
    spec.scalarizers = json_array<std::string>(j, "scalarizers", {});
    for (const auto& s : spec.scalarizers) parse_scalarizer(s);  // validate early
    spec.theta_values = json_array<double>(j, "theta", {});
    spec.T_values = json_array<int>(j, "T", {});
    spec.runs = j.value("runs", 31);
    if (spec.runs < 1) throw std::invalid_argument("runs must be positive");
    spec.base_seed = j.value("base_seed", std::uint64_t{1});
    spec.max_evals = j.value("max_evals", std::uint64_t{50000});
    spec.log_interval = j.value("log_interval", std::uint64_t{2000});
    spec.metrics = j.value("metrics", false);
    spec.reduction_size = j.value("b", std::size_t{0});
    return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
    return sweep_spec_from_json(read_text_file(path));
}

namespace {

std::string trim_num(double v) { return format_double(v); }

struct CellShape {
    std::size_t mu = 0;  // 0 = per-M default
    ScalarizerKind g = ScalarizerKind::chm;
    double theta = 5.0;
    int T = 20;
    std::string label;
};

std::vector<CellShape> component_shapes(const SweepSpec& spec, int M) {
    std::vector<CellShape> shapes;
    if (spec.vary == "mu") {
        const auto grid = spec.mu_values.empty() ? examined_mu(M) : spec.mu_values;
        for (const std::size_t mu : grid)
            shapes.push_back({mu, ScalarizerKind::chm, 5.0, 20, "mu=" + std::to_string(mu)});
    } else if (spec.vary == "g") {
        auto names = spec.scalarizers.empty()
                         ? std::vector<std::string>{"chm", "chd", "pbi"}
                         : spec.scalarizers;
        for (const auto& name : names)
            shapes.push_back({0, parse_scalarizer(name), 5.0, 20, "g=" + name});
    } else if (spec.vary == "theta") {
        const auto grid = spec.theta_values.empty() ? examined_theta() : spec.theta_values;
        for (const double th : grid)
            shapes.push_back({0, ScalarizerKind::pbi, th, 20, "theta=" + trim_num(th)});
    } else {  // T
        const auto grid = spec.T_values.empty() ? examined_T() : spec.T_values;
        for (const int T : grid)
            shapes.push_back({0, ScalarizerKind::chm, 5.0, T, "T=" + std::to_string(T)});
    }
    return shapes;
}

std::vector<CellShape> grid_shapes(const SweepSpec& spec, int M) {
    std::vector<CellShape> shapes;
    const auto mus = spec.mu_values.empty() ? examined_mu(M) : spec.mu_values;
    const auto names = spec.scalarizers.empty() ? std::vector<std::string>{"chm", "chd", "pbi"}
                                                : spec.scalarizers;
    const auto thetas = spec.theta_values.empty() ? examined_theta() : spec.theta_values;
    const auto Ts = spec.T_values.empty() ? examined_T() : spec.T_values;
    for (const std::size_t mu : mus)
        for (const auto& name : names) {
            const ScalarizerKind g = parse_scalarizer(name);
            const auto theta_grid = g == ScalarizerKind::pbi ? thetas : std::vector<double>{5.0};
            for (const double th : theta_grid)
                for (const int T : Ts) {
                    std::string label = "mu=" + std::to_string(mu) + ",g=" + name;
                    if (g == ScalarizerKind::pbi) label += ",theta=" + trim_num(th);
                    label += ",T=" + std::to_string(T);
                    shapes.push_back({mu, g, th, T, label});
                }
        }
    return shapes;
}

}  // namespace

std::vector<SweepCell> expand_cells(const SweepSpec& spec) {
    std::vector<SweepCell> cells;
    for (const auto& inst : spec.instances) {
        const ProblemSpec prob = make_problem(inst.problem, inst.M);
        const auto shapes = spec.mode == "component" ? component_shapes(spec, inst.M)
                                                     : grid_shapes(spec, inst.M);
        for (const auto& sh : shapes) {
            SweepCell cell;
            cell.instance = prob.name + "_m" + std::to_string(inst.M);
            cell.label = sh.label;
            cell.config.problem = prob;
            cell.config.mu = sh.mu != 0 ? sh.mu : default_population_size(inst.M);
            cell.config.scalarizer = Scalarizer{sh.g, sh.theta};
            cell.config.T = sh.T;
            cell.config.max_evals = spec.max_evals;
            cell.config.log_interval = spec.log_interval;
            cell.config.reduction_size =
                spec.reduction_size != 0 ? spec.reduction_size : default_reduction_size(inst.M);
            cell.config.pm = cell.config.resolved_pm();
            cell.metrics = spec.metrics && has_analytic_front(prob);

            std::string key = "mu" + std::to_string(cell.config.mu) + "_" + to_string(sh.g);
            if (sh.g == ScalarizerKind::pbi) key += "_t" + trim_num(sh.theta);
            key += "_T" + std::to_string(sh.T);
            cell.config_key = key;
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

namespace {

ordered_json canonical_config(const SweepCell& cell) {
    const RunConfig& c = cell.config;
    ordered_json j;
    j["problem"] = c.problem.name;
    j["M"] = c.problem.M;
    j["mu"] = c.mu;
    j["g"] = to_string(c.scalarizer.kind);
    if (c.scalarizer.kind == ScalarizerKind::pbi) j["theta"] = c.scalarizer.theta;
    j["T"] = c.T;
    j["max_evals"] = c.max_evals;
    j["log_interval"] = c.log_interval;
    j["pc"] = c.pc;
    j["eta_c"] = c.eta_c;
    j["pm"] = c.resolved_pm();
    j["eta_m"] = c.eta_m;
    j["b"] = c.reduction_size;
    j["metrics"] = cell.metrics;
    return j;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf, 16);
}

std::size_t expected_snapshots(std::uint64_t max_evals, std::uint64_t log_interval) {
    std::size_t n = max_evals / log_interval;
    if (max_evals % log_interval != 0 || n == 0) ++n;
    return n;
}

}  // namespace

std::string config_digest(const SweepCell& cell) {
    return fnv1a_hex(canonical_config(cell).dump());
}

std::string run_record_filename(const SweepCell& cell, int seed_index) {
    char suffix[8];
    std::snprintf(suffix, sizeof(suffix), "s%02d", seed_index);
    return cell.instance + "__" + cell.config_key + "__" + suffix + ".jsonl";
}

void write_run_record(const std::filesystem::path& path, const SweepCell& cell, int seed_index,
                      const RunTrace& trace, double wall_ms) {
    std::ostringstream out;
    ordered_json meta;
    meta["type"] = "meta";
    meta["format"] = 1;
    meta["instance"] = cell.instance;
    meta["label"] = cell.label;
    meta["config_key"] = cell.config_key;
    meta["digest"] = config_digest(cell);
    meta["seed_index"] = seed_index;
    meta["seed"] = trace.config.seed;
    meta["config"] = canonical_config(cell);
    meta["wall_ms"] = wall_ms;
    out << meta.dump() << '\n';
    for (const auto& s : trace.snapshots) {
        ordered_json rec;
        rec["type"] = "snapshot";
        rec["boundary"] = s.boundary;
        rec["eval_count"] = s.eval_count;
        rec["hv_final_pop"] = s.hv_population;
        rec["hv_reduced_uea"] = s.hv_reduced_archive;
        if (s.gd_population) {
            rec["gd_final_pop"] = *s.gd_population;
            rec["igd_final_pop"] = *s.igd_population;
            rec["ms_final_pop"] = *s.ms_population;
            rec["gd_reduced_uea"] = *s.gd_reduced;
            rec["igd_reduced_uea"] = *s.igd_reduced;
            rec["ms_reduced_uea"] = *s.ms_reduced;
        }
        out << rec.dump() << '\n';
    }
    ordered_json fin;
    fin["type"] = "final";
    fin["archive_size"] = trace.archive.size();
    std::uint64_t total_repl = 0;
    for (const auto r : trace.replacements_per_generation) total_repl += r;
    fin["replacements_total"] = total_repl;
    const auto& front = trace.snapshots.empty() ? std::vector<ObjectiveVector>{}
                                                : trace.snapshots.back().population_front;
    fin["population_front"] = front;
    out << fin.dump() << '\n';
    write_text_file_atomic(path, out.str());
}

RunRecord load_run_record(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    RunRecord rec;
    bool have_meta = false, have_final = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        const std::string type = j.at("type").get<std::string>();
        if (type == "meta") {
            rec.instance = j.at("instance").get<std::string>();
            rec.label = j.at("label").get<std::string>();
            rec.config_key = j.at("config_key").get<std::string>();
            rec.digest = j.at("digest").get<std::string>();
            rec.seed_index = j.at("seed_index").get<int>();
            rec.seed = j.at("seed").get<std::uint64_t>();
            rec.problem = j.at("config").at("problem").get<std::string>();
            rec.M = j.at("config").at("M").get<int>();
            rec.max_evals = j.at("config").at("max_evals").get<std::uint64_t>();
            rec.log_interval = j.at("config").at("log_interval").get<std::uint64_t>();
            rec.wall_ms = j.value("wall_ms", 0.0);
            have_meta = true;
        } else if (type == "snapshot") {
            SnapshotRecord s;
            s.boundary = j.at("boundary").get<std::uint64_t>();
            s.eval_count = j.at("eval_count").get<std::uint64_t>();
            s.hv_final_pop = j.at("hv_final_pop").get<double>();
            s.hv_reduced_uea = j.at("hv_reduced_uea").get<double>();
            if (j.contains("gd_final_pop")) {
                s.gd_final_pop = j.at("gd_final_pop").get<double>();
                s.igd_final_pop = j.at("igd_final_pop").get<double>();
                s.ms_final_pop = j.at("ms_final_pop").get<double>();
                s.gd_reduced_uea = j.at("gd_reduced_uea").get<double>();
                s.igd_reduced_uea = j.at("igd_reduced_uea").get<double>();
                s.ms_reduced_uea = j.at("ms_reduced_uea").get<double>();
            }
            rec.snapshots.push_back(s);
        } else if (type == "final") {
            rec.archive_size = j.at("archive_size").get<std::size_t>();
            rec.final_population_front =
                j.at("population_front").get<std::vector<ObjectiveVector>>();
            have_final = true;
        }
    }
    if (!have_meta || !have_final || rec.snapshots.empty())
        throw std::runtime_error("incomplete run record: " + path.string());
    return rec;
}

SweepOutcome execute_sweep(const SweepSpec& spec, const SweepOptions& options) {
    const std::vector<SweepCell> cells = expand_cells(spec);
    SweepOutcome outcome;
    outcome.runs_dir = options.out_dir / "runs";
    std::filesystem::create_directories(outcome.runs_dir);

    // shared reference fronts, built once per instance
    std::map<std::string, ReferenceSet> fronts;
    for (const auto& cell : cells) {
        if (!cell.metrics || fronts.count(cell.instance)) continue;
        fronts.emplace(cell.instance, reference_front(cell.config.problem));
    }

    struct Job {
        const SweepCell* cell;
        int seed_index;
    };
    std::vector<Job> jobs;
    for (const auto& cell : cells)
        for (int s = 0; s < spec.runs; ++s) jobs.push_back({&cell, s});

    const std::size_t expected = expected_snapshots(spec.max_evals, spec.log_interval);
    std::atomic<std::size_t> next{0}, executed{0}, skipped{0}, done{0};
    std::mutex err_mutex;
    std::vector<std::string> errors;

    auto process = [&](const Job& job) {
        const SweepCell& cell = *job.cell;
        const auto path = outcome.runs_dir / run_record_filename(cell, job.seed_index);
        if (options.resume && std::filesystem::exists(path)) {
            try {
                const RunRecord rec = load_run_record(path);
                if (rec.digest == config_digest(cell) && rec.snapshots.size() == expected) {
                    ++skipped;
                    return;
                }
            } catch (const std::exception&) {
                // fall through and recompute
            }
        }
        RunConfig cfg = cell.config;
        cfg.seed = run_seed(spec.base_seed, static_cast<std::uint64_t>(job.seed_index));
        const ReferenceSet* ref = nullptr;
        if (cell.metrics) ref = &fronts.at(cell.instance);
        const auto t0 = std::chrono::steady_clock::now();
        const RunTrace trace = run(cfg, ref);
        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        write_run_record(path, cell, job.seed_index, trace, wall_ms);
        ++executed;
    };

    std::size_t workers = options.workers != 0
                              ? options.workers
                              : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, jobs.size());
    auto loop = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) return;
            try {
                process(jobs[idx]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(err_mutex);
                errors.push_back(e.what());
            }
            const std::size_t d = ++done;
            if (options.verbose && (d % 10 == 0 || d == jobs.size())) {
                std::lock_guard<std::mutex> lk(err_mutex);
                std::cerr << "sweep: " << d << "/" << jobs.size() << " runs\n";
            }
        }
    };
    if (workers <= 1) {
        loop();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
        for (auto& t : pool) t.join();
    }
    if (!errors.empty())
        throw std::runtime_error("sweep failed: " + errors.front() +
                                 (errors.size() > 1
                                      ? " (and " + std::to_string(errors.size() - 1) + " more)"
                                      : ""));
    outcome.executed = executed;
    outcome.skipped = skipped;
    return outcome;
}

std::vector<RunRecord> load_records(const std::filesystem::path& runs_dir) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(runs_dir))
        throw std::runtime_error("no runs directory at " + runs_dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(runs_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<RunRecord> records;
    records.reserve(files.size());
    for (const auto& f : files) records.push_back(load_run_record(f));
    return records;
}

double percentile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("percentile of an empty sample");
    if (p < 0.0 || p > 100.0) throw std::invalid_argument("percentile must be in [0, 100]");
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * p / 100.0;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

namespace {

double scenario_hv(const SnapshotRecord& s, const std::string& scenario) {
    if (scenario == "final_pop") return s.hv_final_pop;
    if (scenario == "reduced_uea") return s.hv_reduced_uea;
    throw std::invalid_argument("scenario must be final_pop or reduced_uea");
}

// numeric-aware ordering so mu=28 sorts before mu=105
bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) &&
            std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            const double va = std::stod(a.substr(i, i2 - i));
            const double vb = std::stod(b.substr(j, j2 - j));
            if (va != vb) return va < vb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() < b.size();
}

struct Grouped {
    // instance -> label -> seed-ordered hv curves (one vector per record)
    std::map<std::string, std::map<std::string, std::vector<const RunRecord*>>> by_instance;
    std::vector<std::uint64_t> boundaries;
    std::map<std::string, int> instance_m;
};

Grouped group_records(const std::vector<RunRecord>& records) {
    Grouped g;
    if (records.empty()) throw std::invalid_argument("no run records");
    for (const auto& rec : records) {
        g.by_instance[rec.instance][rec.label].push_back(&rec);
        g.instance_m[rec.instance] = rec.M;
        if (g.boundaries.empty()) {
            for (const auto& s : rec.snapshots) g.boundaries.push_back(s.boundary);
        }
    }
    for (const auto& rec : records)
        if (rec.snapshots.size() != g.boundaries.size())
            throw std::runtime_error("records disagree on the snapshot schedule");
    for (auto& [inst, labels] : g.by_instance)
        for (auto& [label, recs] : labels)
            std::sort(recs.begin(), recs.end(), [](const RunRecord* a, const RunRecord* b) {
                return a->seed_index < b->seed_index;
            });
    return g;
}

}  // namespace

ReportTable report_aps(const std::vector<RunRecord>& records, const std::string& scenario,
                       double alpha) {
    const Grouped g = group_records(records);
    ReportTable table;
    table.header = {"scenario", "M", "boundary", "config", "aps", "instances"};

    // group instances by M; configurations must match within a group
    std::map<int, std::vector<std::string>> instances_by_m;
    for (const auto& [inst, labels] : g.by_instance)
        instances_by_m[g.instance_m.at(inst)].push_back(inst);

    for (const auto& [M, instances] : instances_by_m) {
        std::set<std::string> label_union;
        for (const auto& inst : instances)
            for (const auto& [label, recs] : g.by_instance.at(inst)) label_union.insert(label);
        std::vector<std::string> labels(label_union.begin(), label_union.end());
        std::sort(labels.begin(), labels.end(), natural_less);
        for (const auto& inst : instances)
            for (const auto& label : labels)
                if (!g.by_instance.at(inst).count(label))
                    throw std::runtime_error("instance " + inst + " is missing configuration " +
                                             label);

        for (std::size_t bi = 0; bi < g.boundaries.size(); ++bi) {
            std::vector<std::vector<int>> scores;  // instance x config
            for (const auto& inst : instances) {
                std::vector<std::vector<double>> samples;
                for (const auto& label : labels) {
                    std::vector<double> hv;
                    for (const RunRecord* rec : g.by_instance.at(inst).at(label))
                        hv.push_back(scenario_hv(rec->snapshots[bi], scenario));
                    samples.push_back(std::move(hv));
                }
                scores.push_back(performance_scores(samples, alpha));
            }
            const std::vector<double> aps = average_performance_scores(scores);
            for (std::size_t c = 0; c < labels.size(); ++c)
                table.rows.push_back({scenario, std::to_string(M),
                                      std::to_string(g.boundaries[bi]), labels[c],
                                      format_double(aps[c]), std::to_string(instances.size())});
        }
    }
    return table;
}

ReportTable report_median_curves(const std::vector<RunRecord>& records,
                                 const std::string& scenario) {
    const Grouped g = group_records(records);
    ReportTable table;
    table.header = {"scenario", "instance", "config", "boundary", "median", "p25", "p75"};
    for (const auto& [inst, by_label] : g.by_instance) {
        std::vector<std::string> labels;
        for (const auto& [label, recs] : by_label) labels.push_back(label);
        std::sort(labels.begin(), labels.end(), natural_less);
        for (const auto& label : labels)
            for (std::size_t bi = 0; bi < g.boundaries.size(); ++bi) {
                std::vector<double> hv;
                for (const RunRecord* rec : by_label.at(label))
                    hv.push_back(scenario_hv(rec->snapshots[bi], scenario));
                table.rows.push_back({scenario, inst, label, std::to_string(g.boundaries[bi]),
                                      format_double(percentile(hv, 50.0)),
                                      format_double(percentile(hv, 25.0)),
                                      format_double(percentile(hv, 75.0))});
            }
    }
    return table;
}

ReportTable report_final_table(const std::vector<RunRecord>& records,
                               const std::string& scenario) {
    const Grouped g = group_records(records);
    ReportTable table;
    table.header = {"scenario", "instance", "config", "median_hv"};
    const std::size_t bi = g.boundaries.size() - 1;
    for (const auto& [inst, by_label] : g.by_instance) {
        std::vector<std::string> labels;
        for (const auto& [label, recs] : by_label) labels.push_back(label);
        std::sort(labels.begin(), labels.end(), natural_less);
        for (const auto& label : labels) {
            std::vector<double> hv;
            for (const RunRecord* rec : by_label.at(label))
                hv.push_back(scenario_hv(rec->snapshots[bi], scenario));
            table.rows.push_back({scenario, inst, label, format_double(percentile(hv, 50.0))});
        }
    }
    return table;
}

}  // namespace moead
