#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moead/engine.hpp"

namespace moead {

// One problem instance to sweep over.
struct InstanceSpec {
    std::string problem;
    int M = 0;
};

// Declarative sweep description, loadable from JSON. Two modes:
//  - "component": vary exactly one axis (mu | g | theta | T) over its grid,
//    holding the others at their defaults;
//  - "grid": full cross product mu x scalarizer (chm, chd, pbi per theta) x T.
// Empty axis vectors fall back to the built-in grids for the instance's M.
struct SweepSpec {
    std::vector<InstanceSpec> instances;
    std::string mode = "component";
    std::string vary = "mu";
    std::vector<std::size_t> mu_values;
    std::vector<std::string> scalarizers;  // subset of {"chm","chd","pbi"}
    std::vector<double> theta_values;
    std::vector<int> T_values;
    int runs = 31;
    std::uint64_t base_seed = 1;
    std::uint64_t max_evals = 50000;
    std::uint64_t log_interval = 2000;
    bool metrics = false;          // GD/IGD/MS against the analytic front where it exists
    std::size_t reduction_size = 0;
};

SweepSpec sweep_spec_from_json(const std::string& json_text);
SweepSpec load_sweep_spec(const std::filesystem::path& path);

// Built-in grids.
std::vector<std::size_t> examined_mu(int M);
std::vector<double> examined_theta();
std::vector<int> examined_T();

// One (instance, configuration) cell of a sweep.
struct SweepCell {
    std::string instance;    // e.g. "wfg4_m3"
    std::string label;       // the setting this cell represents, e.g. "theta=0.5"
    std::string config_key;  // filename-safe full key, e.g. "mu210_pbi_t5_T20"
    RunConfig config;        // seed unset; one run per seed index
    bool metrics = false;    // GD/IGD/MS requested and an analytic front exists
};

std::vector<SweepCell> expand_cells(const SweepSpec& spec);

// FNV-1a 64 over the canonical JSON of everything that defines a cell except
// the seed; hex string.
std::string config_digest(const SweepCell& cell);

struct SnapshotRecord {
    std::uint64_t boundary = 0;
    std::uint64_t eval_count = 0;
    double hv_final_pop = 0.0;
    double hv_reduced_uea = 0.0;
    std::optional<double> gd_final_pop, igd_final_pop, ms_final_pop;
    std::optional<double> gd_reduced_uea, igd_reduced_uea, ms_reduced_uea;
};

struct RunRecord {
    std::string instance;
    std::string label;
    std::string config_key;
    std::string digest;
    std::string problem;
    int M = 0;
    int seed_index = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_evals = 0;
    std::uint64_t log_interval = 0;
    std::vector<SnapshotRecord> snapshots;
    std::vector<ObjectiveVector> final_population_front;
    std::size_t archive_size = 0;
    double wall_ms = 0.0;
};

std::string run_record_filename(const SweepCell& cell, int seed_index);
void write_run_record(const std::filesystem::path& path, const SweepCell& cell, int seed_index,
                      const RunTrace& trace, double wall_ms);
RunRecord load_run_record(const std::filesystem::path& path);

struct SweepOptions {
    std::filesystem::path out_dir;
    std::size_t workers = 0;  // 0 = hardware concurrency
    bool resume = true;
    bool verbose = false;
};

struct SweepOutcome {
    std::size_t executed = 0;
    std::size_t skipped = 0;  // valid records reused
    std::filesystem::path runs_dir;
};

// Runs every (cell, seed) job, skipping jobs whose record already exists with a
// matching digest and complete snapshot list. Record files are written
// atomically, so an interrupted sweep resumes cleanly.
SweepOutcome execute_sweep(const SweepSpec& spec, const SweepOptions& options);

std::vector<RunRecord> load_records(const std::filesystem::path& runs_dir);

struct ReportTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// scenario is "final_pop" or "reduced_uea".
ReportTable report_aps(const std::vector<RunRecord>& records, const std::string& scenario,
                       double alpha = 0.05);
ReportTable report_median_curves(const std::vector<RunRecord>& records,
                                 const std::string& scenario);
ReportTable report_final_table(const std::vector<RunRecord>& records,
                               const std::string& scenario);

// Linearly interpolated percentile (p in [0, 100]) of an unsorted sample.
double percentile(std::vector<double> values, double p);

}  // namespace moead
