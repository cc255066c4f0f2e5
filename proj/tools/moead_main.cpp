#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moead/archive.hpp"
#include "moead/engine.hpp"
#include "moead/harness.hpp"
#include "moead/indicators.hpp"
#include "moead/io.hpp"
#include "moead/problems.hpp"
#include "moead/weights.hpp"

namespace fs = std::filesystem;
using namespace moead;

namespace {

std::vector<std::string> objective_header(int M) {
    std::vector<std::string> h;
    for (int i = 1; i <= M; ++i) h.push_back("f" + std::to_string(i));
    return h;
}

void write_table(const ReportTable& table, const fs::path& path) {
    write_csv(path, table.header, table.rows);
}

SweepCell single_run_cell(const RunConfig& cfg, bool metrics) {
    SweepCell cell;
    cell.config = cfg;
    cell.config.mu = cfg.resolved_mu();
    cell.config.pm = cfg.resolved_pm();
    cell.config.reduction_size =
        cfg.reduction_size != 0 ? cfg.reduction_size : default_reduction_size(cfg.problem.M);
    cell.instance = cfg.problem.name + "_m" + std::to_string(cfg.problem.M);
    cell.metrics = metrics && has_analytic_front(cfg.problem);
    std::string key = "mu" + std::to_string(cell.config.mu) + "_" + to_string(cfg.scalarizer.kind);
    if (cfg.scalarizer.kind == ScalarizerKind::pbi)
        key += "_t" + format_double(cfg.scalarizer.theta);
    key += "_T" + std::to_string(cfg.T);
    cell.config_key = key;
    cell.label = key;
    return cell;
}

int cmd_run(const std::string& problem, int M, std::size_t mu, const std::string& scalarizer,
            double theta, int T, std::uint64_t max_evals, std::uint64_t log_interval,
            std::uint64_t seed, double pc, double eta_c, double pm, double eta_m, std::size_t b,
            bool metrics, std::string out, const std::string& front_out,
            const std::string& reduced_out) {
    RunConfig cfg;
    cfg.problem = make_problem(problem, M);
    cfg.mu = mu;
    cfg.scalarizer = Scalarizer{parse_scalarizer(scalarizer), theta};
    cfg.T = T;
    cfg.max_evals = max_evals;
    cfg.log_interval = log_interval;
    cfg.seed = seed;
    cfg.pc = pc;
    cfg.eta_c = eta_c;
    cfg.pm = pm;
    cfg.eta_m = eta_m;
    cfg.reduction_size = b;

    ReferenceSet ref;
    const ReferenceSet* ref_ptr = nullptr;
    if (metrics && has_analytic_front(cfg.problem)) {
        ref = reference_front(cfg.problem);
        ref_ptr = &ref;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const RunTrace trace = run(cfg, ref_ptr);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    const SweepCell cell = single_run_cell(cfg, metrics);
    if (out.empty())
        out = (default_out_dir() / (cell.instance + "__" + cell.config_key + "__seed" +
                                    std::to_string(seed) + ".jsonl"))
                  .string();
    write_run_record(out, cell, 0, trace, wall_ms);

    const auto& last = trace.snapshots.back();
    if (!front_out.empty())
        write_points_csv(front_out, objective_header(M), last.population_front);
    if (!reduced_out.empty())
        write_points_csv(reduced_out, objective_header(M), last.reduced_archive);

    std::cout << "evals=" << trace.evaluations << " archive=" << trace.archive.size()
              << " hv_final_pop=" << format_double(last.hv_population)
              << " hv_reduced_uea=" << format_double(last.hv_reduced_archive) << "\nrecord: " << out
              << "\n";
    return 0;
}

int cmd_sweep(const std::string& spec_path, std::string out_dir, std::size_t workers,
              bool no_resume, bool quiet) {
    const SweepSpec spec = load_sweep_spec(spec_path);
    SweepOptions opts;
    opts.out_dir = out_dir.empty() ? default_out_dir() : fs::path(out_dir);
    opts.workers = workers;
    opts.resume = !no_resume;
    opts.verbose = !quiet;
    const SweepOutcome outcome = execute_sweep(spec, opts);

    const auto records = load_records(outcome.runs_dir);
    ReportTable summary = report_final_table(records, "final_pop");
    const ReportTable uea = report_final_table(records, "reduced_uea");
    summary.rows.insert(summary.rows.end(), uea.rows.begin(), uea.rows.end());
    const fs::path summary_path = opts.out_dir / "summary.csv";
    write_table(summary, summary_path);

    std::cout << "executed=" << outcome.executed << " reused=" << outcome.skipped
              << "\nrecords: " << outcome.runs_dir.string()
              << "\nsummary: " << summary_path.string() << "\n";
    return 0;
}

int cmd_report(const std::string& runs_dir, const std::string& mode, const std::string& scenario,
               double alpha, std::string out) {
    const auto records = load_records(runs_dir);
    std::vector<std::string> scenarios;
    if (scenario == "both")
        scenarios = {"final_pop", "reduced_uea"};
    else
        scenarios = {scenario};

    ReportTable table;
    for (const auto& sc : scenarios) {
        ReportTable part;
        if (mode == "aps")
            part = report_aps(records, sc, alpha);
        else if (mode == "median-curve")
            part = report_median_curves(records, sc);
        else if (mode == "table")
            part = report_final_table(records, sc);
        else
            throw std::invalid_argument("--mode must be aps, median-curve or table");
        table.header = part.header;
        table.rows.insert(table.rows.end(), part.rows.begin(), part.rows.end());
    }
    if (out.empty()) out = (default_out_dir() / ("report_" + mode + ".csv")).string();
    write_table(table, out);
    std::cout << "report: " << out << " (" << table.rows.size() << " rows)\n";
    return 0;
}

int cmd_reduce(const std::string& in, const std::string& problem, int M, std::size_t b,
               const std::string& out) {
    const ProblemSpec spec = make_problem(problem, M);
    const auto pts = read_points_csv(in);
    if (pts.empty()) throw std::runtime_error("no points in " + in);
    Archive archive;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (static_cast<int>(pts[i].size()) != M)
            throw std::runtime_error("point dimension does not match --objectives");
        archive.insert(Solution{{}, pts[i], i + 1});
    }
    const auto reduced = reduce(archive, ReductionConfig{b}, spec.ideal, spec.nadir);
    std::vector<ObjectiveVector> objs;
    objs.reserve(reduced.size());
    for (const auto& s : reduced) objs.push_back(s.f);
    write_points_csv(out, objective_header(M), objs);
    std::cout << "kept " << objs.size() << " of " << archive.size()
              << " nondominated points -> " << out << "\n";
    return 0;
}

int cmd_indicators(const std::vector<std::string>& inputs, const std::string& problem, int M,
                   const std::string& reference_csv, const std::string& union_out,
                   const std::string& out) {
    const ProblemSpec spec = make_problem(problem, M);
    std::vector<ObjectiveVector> ref_raw;
    if (!reference_csv.empty())
        ref_raw = read_points_csv(reference_csv);
    else if (has_analytic_front(spec))
        ref_raw = reference_front(spec).points;
    std::vector<ObjectiveVector> ref_norm;
    for (const auto& p : ref_raw)
        ref_norm.push_back(normalize_objectives(p, spec.ideal, spec.nadir));

    std::vector<std::vector<std::string>> rows;
    std::vector<ObjectiveVector> pool;
    for (const auto& path : inputs) {
        const auto pts = read_points_csv(path);
        if (pts.empty()) throw std::runtime_error("no points in " + path);
        std::vector<ObjectiveVector> norm;
        norm.reserve(pts.size());
        for (const auto& p : pts) {
            if (static_cast<int>(p.size()) != M)
                throw std::runtime_error("point dimension does not match --objectives in " + path);
            norm.push_back(normalize_objectives(p, spec.ideal, spec.nadir));
        }
        pool.insert(pool.end(), pts.begin(), pts.end());
        std::vector<std::string> row{path, std::to_string(pts.size()),
                                     format_double(hypervolume(pts, spec.ideal, spec.nadir))};
        if (!ref_norm.empty()) {
            row.push_back(format_double(gd(norm, ref_norm)));
            row.push_back(format_double(igd(norm, ref_norm)));
        } else {
            row.push_back("");
            row.push_back("");
        }
        row.push_back(format_double(ms(norm)));
        rows.push_back(std::move(row));
    }

    if (!union_out.empty()) {
        std::vector<ObjectiveVector> front;
        for (const std::size_t i : nondominated_indices(pool)) front.push_back(pool[i]);
        write_points_csv(union_out, objective_header(M), front);
    }

    const std::vector<std::string> header{"set", "points", "hv", "gd", "igd", "ms"};
    if (out.empty()) {
        std::cout << "set,points,hv,gd,igd,ms\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
            std::cout << "\n";
        }
    } else {
        write_csv(out, header, rows);
        std::cout << "indicators: " << out << "\n";
    }
    return 0;
}

int cmd_weights(int M, std::size_t mu, int H, const std::string& out) {
    if (H == 0) {
        if (mu == 0) throw std::invalid_argument("provide --mu or --resolution");
        H = resolution_for_mu(M, mu);
    }
    const WeightSet ws = das_dennis(M, H);
    std::vector<std::string> header;
    for (int i = 1; i <= M; ++i) header.push_back("w" + std::to_string(i));
    write_points_csv(out, header, ws.vectors);
    std::cout << ws.vectors.size() << " weight vectors (H=" << ws.H << ") -> " << out << "\n";
    return 0;
}

int cmd_front(const std::string& problem, int M, std::size_t points, const std::string& out) {
    const ProblemSpec spec = make_problem(problem, M);
    const ReferenceSet ref = reference_front(spec, points);
    write_points_csv(out, objective_header(M), ref.points);
    std::cout << ref.points.size() << " front points -> " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MOEA/D with an unbounded external archive: runs, sweeps and reports"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "single optimization run");
    std::string problem, scalarizer = "chm";
    int M = 0, T = 20, H = 0;
    std::size_t mu = 0, b = 0, workers = 0, points = 10000;
    double theta = 5.0, pc = 1.0, eta_c = 20.0, pm = -1.0, eta_m = 20.0, alpha = 0.05;
    std::uint64_t max_evals = 50000, log_interval = 2000, seed = 1;
    bool metrics = false, no_resume = false, quiet = false;
    std::string out, front_out, reduced_out;
    run_cmd->add_option("--problem", problem, "dtlz1..dtlz4, wfg1..wfg9")->required();
    run_cmd->add_option("--objectives", M, "objective count, 2..5")->required();
    run_cmd->add_option("--mu", mu, "population size (0 = per-M default)");
    run_cmd->add_option("--scalarizer", scalarizer, "chm | chd | pbi");
    run_cmd->add_option("--theta", theta, "pbi penalty");
    run_cmd->add_option("--neighborhood", T, "neighborhood size T");
    run_cmd->add_option("--max-evals", max_evals, "evaluation budget");
    run_cmd->add_option("--log-interval", log_interval, "snapshot spacing in evaluations");
    run_cmd->add_option("--seed", seed, "rng seed");
    run_cmd->add_option("--pc", pc, "crossover probability");
    run_cmd->add_option("--eta-c", eta_c, "sbx distribution index");
    run_cmd->add_option("--pm", pm, "mutation probability (negative = 1/D)");
    run_cmd->add_option("--eta-m", eta_m, "mutation distribution index");
    run_cmd->add_option("--b", b, "reduced archive size (0 = per-M default)");
    run_cmd->add_flag("--metrics", metrics, "record GD/IGD/MS against the analytic front");
    run_cmd->add_option("--out", out, "run record path (.jsonl)");
    run_cmd->add_option("--front-out", front_out, "final population front CSV");
    run_cmd->add_option("--reduced-out", reduced_out, "final reduced archive CSV");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run a JSON sweep specification");
    std::string spec_path, out_dir;
    sweep_cmd->add_option("--spec", spec_path, "sweep spec JSON")->required();
    sweep_cmd->add_option("--out-dir", out_dir, "output directory (default MOEAD_OUT_DIR or ./out)");
    sweep_cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    sweep_cmd->add_flag("--no-resume", no_resume, "recompute existing records");
    sweep_cmd->add_flag("--quiet", quiet, "suppress progress lines");

    // report
    auto* report_cmd = app.add_subcommand("report", "aggregate run records");
    std::string runs_dir, mode = "table", scenario = "both";
    report_cmd->add_option("--runs", runs_dir, "directory of run .jsonl records")->required();
    report_cmd->add_option("--mode", mode, "aps | median-curve | table");
    report_cmd->add_option("--scenario", scenario, "final_pop | reduced_uea | both");
    report_cmd->add_option("--alpha", alpha, "significance level for aps");
    report_cmd->add_option("--out", out, "output CSV path");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "distance-based subset of a point set");
    std::string in_csv, out_csv;
    reduce_cmd->add_option("--in", in_csv, "objective CSV")->required();
    reduce_cmd->add_option("--problem", problem, "problem the points came from")->required();
    reduce_cmd->add_option("--objectives", M, "objective count")->required();
    reduce_cmd->add_option("--b", b, "target size (0 = per-M default)");
    reduce_cmd->add_option("--out", out_csv, "output CSV")->required();

    // indicators
    auto* ind_cmd = app.add_subcommand("indicators", "HV/GD/IGD/MS of point sets");
    std::vector<std::string> inputs;
    std::string reference_csv, union_out;
    ind_cmd->add_option("--in", inputs, "objective CSVs")->required()->expected(-1);
    ind_cmd->add_option("--problem", problem, "problem the points came from")->required();
    ind_cmd->add_option("--objectives", M, "objective count")->required();
    ind_cmd->add_option("--reference", reference_csv,
                        "reference front CSV (default: analytic front when available)");
    ind_cmd->add_option("--union-out", union_out, "write the nondominated union of all inputs");
    ind_cmd->add_option("--out", out, "output CSV (default: stdout)");

    // weights
    auto* weights_cmd = app.add_subcommand("weights", "export a simplex-lattice weight set");
    weights_cmd->add_option("--objectives", M, "objective count")->required();
    weights_cmd->add_option("--mu", mu, "desired vector count");
    weights_cmd->add_option("--resolution", H, "lattice resolution H");
    weights_cmd->add_option("--out", out, "output CSV")->required();

    // front
    auto* front_cmd = app.add_subcommand("front", "export an analytic front sample");
    front_cmd->add_option("--problem", problem, "dtlz1..dtlz4, wfg4..wfg9")->required();
    front_cmd->add_option("--objectives", M, "objective count")->required();
    front_cmd->add_option("--points", points, "minimum sample size");
    front_cmd->add_option("--out", out, "output CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(problem, M, mu, scalarizer, theta, T, max_evals, log_interval, seed, pc,
                           eta_c, pm, eta_m, b, metrics, out, front_out, reduced_out);
        if (sweep_cmd->parsed()) return cmd_sweep(spec_path, out_dir, workers, no_resume, quiet);
        if (report_cmd->parsed()) return cmd_report(runs_dir, mode, scenario, alpha, out);
        if (reduce_cmd->parsed()) return cmd_reduce(in_csv, problem, M, b, out_csv);
        if (ind_cmd->parsed())
            return cmd_indicators(inputs, problem, M, reference_csv, union_out, out);
        if (weights_cmd->parsed()) return cmd_weights(M, mu, H, out);
        if (front_cmd->parsed()) return cmd_front(problem, M, points, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
