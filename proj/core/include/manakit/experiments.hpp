#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manakit/csv.hpp"

namespace manakit {

// Configuration for one figure-reproduction run. Unset knobs fall back to
// desk-scale defaults; --full switches to the paper-scale grids.
struct ExperimentConfig {
    std::string experiment;  // one of figure_ids()
    std::uint64_t master_seed = 1;
    long n_samples = 0;  // per grid point; 0 -> per-figure default
    int threads = 0;     // 0 -> hardware
    std::string out_path;  // CSV file; metadata JSON lands at out_path + ".meta.json"
    bool full_scale = false;

    // Optional grid overrides (figure-dependent).
    std::vector<long> d_list;
    long d_a = 0;
    long d_b_min = 0;
    long d_b_max = 0;
    double delta_min = -1.0;
    double delta_max = -1.0;
    double delta_step = -1.0;
};

struct ExperimentMeta {
    std::string experiment;
    std::uint64_t seed = 0;
    long n_samples = 0;
    std::vector<long> dims;
    std::string build_id;
    double elapsed_seconds = 0.0;
};

struct ExperimentResult {
    Table table;
    ExperimentMeta meta;
    std::string csv_path;
    std::string meta_path;
};

const std::vector<std::string>& figure_ids();

// Runs the experiment, writes the CSV and metadata JSON (when out_path is
// set), and returns the table for in-process inspection.
ExperimentResult run_figure(const ExperimentConfig& config);

// Prediction-table grid: either an entropy-deficit sweep or a (d_a, d_b) sweep.
struct PredictGrid {
    bool use_delta_grid = false;
    double delta_min = 0.0;
    double delta_max = 4.0;
    double delta_step = 0.1;
    long big_d = 27;  // dimension attached to delta rows

    long d_a = 3;
    long d_b_min = 1;
    long d_b_max = 13;
};

// Columns: d_a,d_b,delta,pred_gaussian,pred_exact,pred_variance,pred_quick_mana.
Table run_predict(const PredictGrid& grid);

// Wall-time comparison of the three Wigner evaluation paths. Pointwise
// agreement to 1e-10 is enforced before any timing is recorded.
struct BenchConfig {
    std::vector<long> d_list{27, 81, 243};
    int reps = 5;
    long trace_max = 81;  // the O(D^4) path is skipped above this
    std::uint64_t master_seed = 1;
};

struct BenchRow {
    long d = 0;
    double trace_seconds = 0.0;   // NaN when skipped
    double direct_seconds = 0.0;
    double fft_seconds = 0.0;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

// Columns: d,path,median_seconds.
Table bench_table(const std::vector<BenchRow>& rows);

// The build identifier stamped into experiment metadata (git describe).
std::string build_id();

// Renders a generic matplotlib script template for a figure's CSV columns.
std::string plot_template(const std::string& experiment);

}  // namespace manakit
