// Command-line front end: figure-reproduction experiments, the verification
// suite, prediction tables, and transform benchmarks. All heavy lifting lives
// in the core library; this file only parses flags and formats output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "manakit/experiments.hpp"
#include "manakit/verify.hpp"

namespace {

int cmd_figure(const manakit::ExperimentConfig& config) {
    const auto result = manakit::run_figure(config);
    if (config.out_path.empty()) {
        result.table.write(std::cout);
    } else {
        std::fprintf(stderr, "wrote %s (%zu rows, %.2f s) and %s\n", result.csv_path.c_str(),
                     result.table.rows.size(), result.meta.elapsed_seconds,
                     result.meta_path.c_str());
    }
    return 0;
}

int cmd_verify(const manakit::VerifyOptions& options) {
    const auto results = manakit::run_verify(options);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  %-40s residual %.3e  (tol %.1e)\n", r.pass ? "[PASS]" : "[FAIL]",
                    r.name.c_str(), r.residual, r.tolerance);
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}

int cmd_predict(const manakit::PredictGrid& grid, const std::string& out_path) {
    const manakit::Table table = manakit::run_predict(grid);
    if (out_path.empty()) {
        table.write(std::cout);
    } else {
        std::ofstream os(out_path, std::ios::trunc);
        if (!os) throw std::invalid_argument("cannot write " + out_path);
        table.write(os);
    }
    return 0;
}

int cmd_bench(const manakit::BenchConfig& config, const std::string& out_path) {
    const auto rows = manakit::run_bench(config);
    const manakit::Table table = manakit::bench_table(rows);
    if (out_path.empty()) {
        table.write(std::cout);
    } else {
        std::ofstream os(out_path, std::ios::trunc);
        if (!os) throw std::invalid_argument("cannot write " + out_path);
        table.write(os);
    }
    for (const auto& r : rows) {
        if (r.fft_seconds > 0.0)
            std::fprintf(stderr, "d=%ld direct/fft wall-clock ratio %.2f\n", r.d,
                         r.direct_seconds / r.fft_seconds);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Wigner functions, Wigner norm, and mana of random qudit states"};
    app.require_subcommand(1);

    // figure
    manakit::ExperimentConfig figure_config;
    std::string figure_id;
    auto* figure = app.add_subcommand("figure", "Run a figure-reproduction experiment");
    std::string id_help = "Experiment id:";
    for (const auto& id : manakit::figure_ids()) id_help += " " + id;
    figure->add_option("id", figure_id, id_help)->required();
    figure->add_option("--seed", figure_config.master_seed, "Master RNG seed");
    figure->add_option("--samples", figure_config.n_samples, "Samples per grid point");
    figure->add_option("--out", figure_config.out_path, "Output CSV path (stdout if absent)");
    figure->add_option("--threads", figure_config.threads, "Worker thread cap (0 = hardware)");
    figure->add_flag("--full", figure_config.full_scale, "Paper-scale grids instead of desk scale");
    figure->add_option("--d-list", figure_config.d_list, "Override qudit dimensions");
    figure->add_option("--da", figure_config.d_a, "System dimension d_A");
    figure->add_option("--db-min", figure_config.d_b_min, "Smallest ancilla dimension");
    figure->add_option("--db-max", figure_config.d_b_max, "Largest ancilla dimension");
    figure->add_option("--delta-min", figure_config.delta_min, "Entropy-deficit grid start");
    figure->add_option("--delta-max", figure_config.delta_max, "Entropy-deficit grid end");
    figure->add_option("--delta-step", figure_config.delta_step, "Entropy-deficit grid step");

    // verify
    manakit::VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "Run every module's invariant suite");
    verify->add_option("--seed", verify_options.seed, "Master RNG seed");
    verify->add_option("--max-d", verify_options.max_d, "Largest dimension for algebra checks");
    verify->add_option("--threads", verify_options.threads, "Worker thread cap");
    verify->add_flag("--inject-fault", verify_options.inject_fault,
                     "Testing aid: corrupt one phase-point operator so verify fails");

    // predict
    manakit::PredictGrid grid;
    std::string predict_out;
    bool use_delta = false;
    auto* predict = app.add_subcommand("predict", "Emit a closed-form prediction table");
    predict->add_flag("--delta-grid", use_delta, "Sweep the entropy deficit instead of d_B");
    predict->add_option("--delta-min", grid.delta_min, "Deficit grid start");
    predict->add_option("--delta-max", grid.delta_max, "Deficit grid end");
    predict->add_option("--delta-step", grid.delta_step, "Deficit grid step");
    predict->add_option("--big-d", grid.big_d, "Hilbert dimension for deficit rows");
    predict->add_option("--da", grid.d_a, "System dimension d_A");
    predict->add_option("--db-min", grid.d_b_min, "Smallest ancilla dimension");
    predict->add_option("--db-max", grid.d_b_max, "Largest ancilla dimension");
    predict->add_option("--out", predict_out, "Output CSV path (stdout if absent)");

    // bench
    manakit::BenchConfig bench_config;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Time the three Wigner evaluation paths");
    bench->add_option("--d-list", bench_config.d_list, "Dimensions to time");
    bench->add_option("--reps", bench_config.reps, "Repetitions per timing (median reported)");
    bench->add_option("--trace-max", bench_config.trace_max,
                      "Skip the O(D^4) trace path above this dimension");
    bench->add_option("--seed", bench_config.master_seed, "Master RNG seed");
    bench->add_option("--out", bench_out, "Output CSV path (stdout if absent)");

    // plot-template
    std::string template_id;
    auto* plot = app.add_subcommand("plot-template", "Print a plotting-script template for a figure");
    plot->add_option("id", template_id, "Experiment id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (figure->parsed()) {
            figure_config.experiment = figure_id;
            return cmd_figure(figure_config);
        }
        if (verify->parsed()) return cmd_verify(verify_options);
        if (predict->parsed()) {
            grid.use_delta_grid = use_delta;
            return cmd_predict(grid, predict_out);
        }
        if (bench->parsed()) return cmd_bench(bench_config, bench_out);
        if (plot->parsed()) {
            std::cout << manakit::plot_template(template_id);
            return 0;
        }
    } catch (const manakit::VerificationError& e) {
        std::fprintf(stderr, "verification failure: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "invalid config: %s\n", e.what());
        return 2;
    }
    return 2;
}
