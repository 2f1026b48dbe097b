#include "manakit/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "manakit/design_probe.hpp"
#include "manakit/ensembles.hpp"
#include "manakit/parallel.hpp"
#include "manakit/predictions.hpp"
#include "manakit/stats.hpp"
#include "manakit/verify.hpp"
#include "manakit/wigner.hpp"

#ifndef MANAKIT_BUILD_ID
#define MANAKIT_BUILD_ID "unknown"
#endif

namespace manakit {

namespace {

constexpr double kBinWidth = 0.05;  // entropy-deficit bin width (nats)

struct SampleSummary {
    double s2 = 0.0;
    double delta = 0.0;
    double norm = 0.0;
    double mana_value = 0.0;
};

SampleSummary summarize(const DensityMatrix& dm) {
    const WignerFunction w = wigner_fft(dm);
    SampleSummary s;
    s.s2 = w.s2;
    s.delta = entropy_deficit(w);
    s.norm = wigner_norm(w);
    s.mana_value = std::log(s.norm);
    return s;
}

SampleSummary summarize(const PureState& psi) {
    const WignerFunction w = wigner_fft(psi);
    SampleSummary s;
    s.s2 = 0.0;
    s.delta = entropy_deficit(w);
    s.norm = wigner_norm(w);
    s.mana_value = std::log(s.norm);
    return s;
}

// Sequential allocator of per-sample stream indices; makes batch layout
// independent of threading.
struct StreamAllocator {
    std::uint64_t next = 0;
    std::uint64_t reserve(long n) {
        const std::uint64_t base = next;
        next += static_cast<std::uint64_t>(n);
        return base;
    }
};

std::vector<long> pick(const std::vector<long>& override_list, std::vector<long> fallback) {
    return override_list.empty() ? std::move(fallback) : override_list;
}

long pick_samples(long requested, long fallback) { return requested > 0 ? requested : fallback; }

std::vector<long> primes_up_to(long lo, long hi) {
    std::vector<long> out;
    for (long n = std::max<long>(2, lo); n <= hi; ++n) {
        bool prime = n >= 2;
        for (long k = 2; k * k <= n; ++k)
            if (n % k == 0) { prime = false; break; }
        if (prime) out.push_back(n);
    }
    return out;
}

long bin_index(double delta) { return static_cast<long>(std::floor(delta / kBinWidth)); }
double bin_center(long index) { return (static_cast<double>(index) + 0.5) * kBinWidth; }

// ---------------------------------------------------------------------------
// Figure runners. Each fills `table` and records the grid in `meta.dims`.
// ---------------------------------------------------------------------------

void fig_mixed_intro(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const std::vector<long> ds =
        pick(cfg.d_list, cfg.full_scale
                             ? std::vector<long>{3, 5, 7, 9, 11, 13, 17, 21, 27, 45, 69}
                             : std::vector<long>{3, 5, 9, 15, 27});
    const long n = pick_samples(cfg.n_samples, cfg.full_scale ? 4000 : 1000);
    const double step = cfg.delta_step > 0 ? cfg.delta_step : 0.1;
    table.header = {"d", "delta", "mean_mana", "stderr", "pred_gaussian"};
    meta.dims = ds;
    meta.n_samples = n;
    StreamAllocator streams;
    for (long d : ds) {
        const double ln_d = std::log(static_cast<double>(d));
        const double lo = cfg.delta_min >= 0 ? cfg.delta_min : step;
        const double hi = cfg.delta_max >= 0 ? std::min(cfg.delta_max, ln_d) : ln_d;
        for (double delta = lo; delta <= hi + 1e-9; delta += step) {
            const double target = std::min(delta, ln_d);
            const std::uint64_t base = streams.reserve(n);
            std::vector<double> manas(static_cast<std::size_t>(n));
            parallel_for(n, cfg.threads, [&](std::int64_t i) {
                const auto dm = sample_simple_mixture(
                    d, target, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
                manas[static_cast<std::size_t>(i)] = summarize(dm).mana_value;
            });
            RunningStats stats;
            for (double m : manas) stats.add(m);
            auto& row = table.add_row();
            row = {csv_long(d), csv_double(target), csv_double(stats.mean()),
                   csv_double(stats.stderr_mean()),
                   csv_double(std::log(gaussian_wigner_norm(target)))};
        }
    }
}

void fig_mixed_detail(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const long d_a = cfg.d_a > 0 ? cfg.d_a : 5;
    const long db_hi = cfg.d_b_max > 0 ? cfg.d_b_max : (cfg.full_scale ? 71 : 31);
    const std::vector<long> dbs = primes_up_to(std::max<long>(3, cfg.d_b_min), db_hi);
    const long n = pick_samples(cfg.n_samples, 100);
    table.header = {"sample_index", "d_a", "d_b_or_knob", "s2", "delta",
                    "wigner_norm", "mana", "pred_gaussian"};
    meta.dims = {d_a, dbs.back()};
    meta.n_samples = n;
    StreamAllocator streams;
    long sample_index = 0;
    for (long d_b : dbs) {
        const std::uint64_t base = streams.reserve(n);
        std::vector<SampleSummary> rows(static_cast<std::size_t>(n));
        parallel_for(n, cfg.threads, [&](std::int64_t i) {
            const auto dm = sample_reduced(
                d_a, d_b, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
            rows[static_cast<std::size_t>(i)] = summarize(dm);
        });
        for (const auto& s : rows) {
            auto& row = table.add_row();
            const double pred = std::log(gaussian_wigner_norm(std::max(0.0, s.delta)));
            row = {csv_long(sample_index++), csv_long(d_a),     csv_double(static_cast<double>(d_b)),
                   csv_double(s.s2),         csv_double(s.delta), csv_double(s.norm),
                   csv_double(s.mana_value), csv_double(pred)};
        }
    }
}

void fig_mixed_var(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const long d = cfg.d_a > 0 ? cfg.d_a : 5;
    const long n = pick_samples(cfg.n_samples, 1000);
    const double ln_d = std::log(static_cast<double>(d));
    table.header = {"d", "delta", "source", "n", "std_wigner_norm", "stderr_std", "pred_gauss_std"};
    meta.dims = {d};
    meta.n_samples = n;
    StreamAllocator streams;

    const double step = cfg.delta_step > 0 ? cfg.delta_step : 0.1;
    for (double delta = step; delta <= ln_d + 1e-9; delta += step) {
        const double target = std::min(delta, ln_d);
        const std::uint64_t base = streams.reserve(n);
        std::vector<double> norms(static_cast<std::size_t>(n));
        parallel_for(n, cfg.threads, [&](std::int64_t i) {
            const auto dm = sample_simple_mixture(
                d, target, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
            norms[static_cast<std::size_t>(i)] = summarize(dm).norm;
        });
        RunningStats stats;
        for (double v : norms) stats.add(v);
        auto& row = table.add_row();
        row = {csv_long(d),
               csv_double(target),
               "entropy",
               csv_long(stats.count()),
               csv_double(stats.stddev()),
               csv_double(stats.stderr_stddev()),
               csv_double(std::sqrt(gaussian_variance(d, target)))};
    }

    const long db_hi = cfg.d_b_max > 0 ? cfg.d_b_max : 24;
    for (long d_b = std::max<long>(1, cfg.d_b_min); d_b <= db_hi; ++d_b) {
        const std::uint64_t base = streams.reserve(n);
        std::vector<double> norms(static_cast<std::size_t>(n));
        parallel_for(n, cfg.threads, [&](std::int64_t i) {
            const auto dm = sample_reduced(
                d, d_b, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
            norms[static_cast<std::size_t>(i)] = summarize(dm).norm;
        });
        RunningStats stats;
        for (double v : norms) stats.add(v);
        // Points are assigned the deficit implied by the average purity.
        const double delta = std::log(static_cast<double>(d) * avg_purity(d, d_b));
        auto& row = table.add_row();
        row = {csv_long(d),
               csv_double(delta),
               "ancilla",
               csv_long(stats.count()),
               csv_double(stats.stddev()),
               csv_double(stats.stderr_stddev()),
               csv_double(std::sqrt(gaussian_variance(d, std::max(0.0, delta))))};
    }
}

void fig_exact_db(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const std::vector<long> das = cfg.d_a > 0 ? std::vector<long>{cfg.d_a} : std::vector<long>{3, 5};
    const long db_lo = std::max<long>(1, cfg.d_b_min);
    const long db_hi = cfg.d_b_max > 0 ? cfg.d_b_max : 13;
    const long n = pick_samples(cfg.n_samples, 100);
    table.header = {"d_a", "d_b", "delta", "mean_mana", "stderr", "pred_exact"};
    meta.dims = {das.front(), das.back(), db_hi};
    meta.n_samples = n;
    StreamAllocator streams;
    for (long d_a : das) {
        for (long d_b = db_lo; d_b <= db_hi; ++d_b) {
            const std::uint64_t base = streams.reserve(n);
            std::vector<SampleSummary> rows(static_cast<std::size_t>(n));
            parallel_for(n, cfg.threads, [&](std::int64_t i) {
                const auto dm = sample_reduced(
                    d_a, d_b, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
                rows[static_cast<std::size_t>(i)] = summarize(dm);
            });
            RunningStats mana_stats, delta_stats;
            for (const auto& s : rows) {
                mana_stats.add(s.mana_value);
                delta_stats.add(s.delta);
            }
            auto& row = table.add_row();
            row = {csv_long(d_a),
                   csv_long(d_b),
                   csv_double(delta_stats.mean()),
                   csv_double(mana_stats.mean()),
                   csv_double(mana_stats.stderr_mean()),
                   csv_double(std::log(exact_mixed_norm(ExactMixedParams(d_a, d_b))))};
        }
    }
}

void fig_ensembles(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const long d = cfg.d_a > 0 ? cfg.d_a : 11;
    const long n = pick_samples(cfg.n_samples, 300);
    const double ln_d = std::log(static_cast<double>(d));
    table.header = {"ensemble", "delta", "n", "mean_mana", "stderr", "pred_gaussian"};
    meta.dims = {d};
    meta.n_samples = n;
    StreamAllocator streams;

    // Knob grids dense at small values, then stretched so the realized
    // deficits cover the axis all the way down to Delta near 0.
    std::vector<long> db_grid, nmix_grid;
    for (long k = 1; k <= 30; ++k) db_grid.push_back(k);
    nmix_grid = db_grid;
    for (long v : {35L, 40L, 50L, 60L, 80L, 100L, 140L, 200L}) db_grid.push_back(v);
    for (long v : {35L, 40L, 50L, 70L, 100L, 150L, 300L, 600L}) nmix_grid.push_back(v);

    struct BinStats {
        std::map<long, RunningStats> bins;
        void add(double delta, double mana_value) { bins[bin_index(delta)].add(mana_value); }
    };
    BinStats by_ensemble[3];

    auto run_knob = [&](int which, auto&& sampler) {
        const std::uint64_t base = streams.reserve(n);
        std::vector<SampleSummary> rows(static_cast<std::size_t>(n));
        parallel_for(n, cfg.threads, [&](std::int64_t i) {
            rows[static_cast<std::size_t>(i)] =
                summarize(sampler(SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)}));
        });
        for (const auto& s : rows) by_ensemble[which].add(s.delta, s.mana_value);
    };

    // Ensemble 1 targets sit at bin centers so realized and binned deficits agree.
    for (long i = 0;; ++i) {
        const double target = bin_center(i);
        if (target > ln_d) break;
        run_knob(0, [&](const SeededStream& s) { return sample_simple_mixture(d, target, s); });
    }
    for (long n_mix : nmix_grid)
        run_knob(1, [&](const SeededStream& s) { return sample_average_mixture(d, n_mix, s); });
    for (long d_b : db_grid)
        run_knob(2, [&](const SeededStream& s) { return sample_reduced(d, d_b, s); });

    const char* names[3] = {"simple", "average", "reduced"};
    for (int e = 0; e < 3; ++e) {
        for (const auto& [index, stats] : by_ensemble[e].bins) {
            auto& row = table.add_row();
            const double center = bin_center(index);
            row = {names[e],
                   csv_double(center),
                   csv_long(stats.count()),
                   csv_double(stats.mean()),
                   csv_double(stats.stderr_mean()),
                   csv_double(std::log(gaussian_wigner_norm(center)))};
        }
    }
}

void fig_pure_norm(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const std::vector<long> ds = pick(cfg.d_list, {3, 5, 7, 9, 11});
    const long n = pick_samples(cfg.n_samples, 10000);
    table.header = {"d", "mean_norm", "stderr", "pred_exact", "pred_gaussian"};
    meta.dims = ds;
    meta.n_samples = n;
    StreamAllocator streams;
    for (long d : ds) {
        const std::uint64_t base = streams.reserve(n);
        std::vector<double> norms(static_cast<std::size_t>(n));
        parallel_for(n, cfg.threads, [&](std::int64_t i) {
            const auto psi =
                sample_haar_pure(d, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
            norms[static_cast<std::size_t>(i)] = summarize(psi).norm;
        });
        RunningStats stats;
        for (double v : norms) stats.add(v);
        auto& row = table.add_row();
        row = {csv_long(d), csv_double(stats.mean()), csv_double(stats.stderr_mean()),
               csv_double(exact_pure_norm(d)),
               csv_double(gaussian_wigner_norm(std::log(static_cast<double>(d))))};
    }
}

void fig_pure_std(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const std::vector<long> ds = pick(cfg.d_list, {3, 5, 9, 15, 27});
    const long n = pick_samples(cfg.n_samples, 10000);
    table.header = {"d", "n", "std_norm", "stderr_std", "pred_gauss_std"};
    meta.dims = ds;
    meta.n_samples = n;
    StreamAllocator streams;
    for (long d : ds) {
        const std::uint64_t base = streams.reserve(n);
        std::vector<double> norms(static_cast<std::size_t>(n));
        parallel_for(n, cfg.threads, [&](std::int64_t i) {
            const auto psi =
                sample_haar_pure(d, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
            norms[static_cast<std::size_t>(i)] = summarize(psi).norm;
        });
        RunningStats stats;
        for (double v : norms) stats.add(v);
        auto& row = table.add_row();
        row = {csv_long(d), csv_long(stats.count()), csv_double(stats.stddev()),
               csv_double(stats.stderr_stddev()),
               csv_double(std::sqrt(gaussian_variance(d, std::log(static_cast<double>(d)))))};
    }
}

void fig_pure_mana(const ExperimentConfig& cfg, Table& table, ExperimentMeta& meta) {
    const std::vector<long> ds = pick(cfg.d_list, {3, 5, 9, 15, 27});
    const long n = pick_samples(cfg.n_samples, 10000);
    table.header = {"d",         "mean_mana",    "stderr",          "ln_mean_norm",
                    "deviation", "pred_ln_exact", "pred_ln_gaussian"};
    meta.dims = ds;
    meta.n_samples = n;
    StreamAllocator streams;
    for (long d : ds) {
        const std::uint64_t base = streams.reserve(n);
        std::vector<SampleSummary> rows(static_cast<std::size_t>(n));
        parallel_for(n, cfg.threads, [&](std::int64_t i) {
            const auto psi =
                sample_haar_pure(d, SeededStream{cfg.master_seed, base + static_cast<std::uint64_t>(i)});
            rows[static_cast<std::size_t>(i)] = summarize(psi);
        });
        RunningStats mana_stats, norm_stats;
        for (const auto& s : rows) {
            mana_stats.add(s.mana_value);
            norm_stats.add(s.norm);
        }
        const double ln_mean_norm = std::log(norm_stats.mean());
        auto& row = table.add_row();
        row = {csv_long(d),
               csv_double(mana_stats.mean()),
               csv_double(mana_stats.stderr_mean()),
               csv_double(ln_mean_norm),
               csv_double(ln_mean_norm - mana_stats.mean()),
               csv_double(log_double_factorial_ratio(d)),
               csv_double(std::log(gaussian_wigner_norm(std::log(static_cast<double>(d)))))};
    }
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {
        "fig_mixed_intro", "fig_mixed_detail", "fig_mixed_var", "fig_exact_db",
        "fig_ensembles",   "fig_pure_norm",    "fig_pure_std",  "fig_pure_mana"};
    return ids;
}

std::string build_id() { return MANAKIT_BUILD_ID; }

ExperimentResult run_figure(const ExperimentConfig& config) {
    if (config.n_samples < 0) throw std::invalid_argument("run_figure: n_samples must be >= 1");
    for (long d : config.d_list)
        if (d < 3 || d % 2 == 0)
            throw std::invalid_argument("run_figure: qudit dimensions must be odd and >= 3");
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentResult result;
    result.meta.experiment = config.experiment;
    result.meta.seed = config.master_seed;
    result.meta.build_id = build_id();

    if (config.experiment == "fig_mixed_intro") fig_mixed_intro(config, result.table, result.meta);
    else if (config.experiment == "fig_mixed_detail") fig_mixed_detail(config, result.table, result.meta);
    else if (config.experiment == "fig_mixed_var") fig_mixed_var(config, result.table, result.meta);
    else if (config.experiment == "fig_exact_db") fig_exact_db(config, result.table, result.meta);
    else if (config.experiment == "fig_ensembles") fig_ensembles(config, result.table, result.meta);
    else if (config.experiment == "fig_pure_norm") fig_pure_norm(config, result.table, result.meta);
    else if (config.experiment == "fig_pure_std") fig_pure_std(config, result.table, result.meta);
    else if (config.experiment == "fig_pure_mana") fig_pure_mana(config, result.table, result.meta);
    else throw std::invalid_argument("run_figure: unknown experiment id '" + config.experiment + "'");

    result.meta.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!config.out_path.empty()) {
        result.csv_path = config.out_path;
        result.meta_path = config.out_path + ".meta.json";
        std::ofstream csv(result.csv_path, std::ios::trunc);
        if (!csv) throw std::runtime_error("run_figure: cannot write " + result.csv_path);
        result.table.write(csv);

        nlohmann::json j;
        j["experiment"] = result.meta.experiment;
        j["seed"] = result.meta.seed;
        j["n_samples"] = result.meta.n_samples;
        j["dims"] = result.meta.dims;
        j["build_id"] = result.meta.build_id;
        j["elapsed_seconds"] = result.meta.elapsed_seconds;
        std::ofstream mj(result.meta_path, std::ios::trunc);
        if (!mj) throw std::runtime_error("run_figure: cannot write " + result.meta_path);
        mj << j.dump(2) << '\n';
    }
    return result;
}

Table run_predict(const PredictGrid& grid) {
    Table table;
    table.header = {"d_a", "d_b", "delta", "pred_gaussian", "pred_exact", "pred_variance",
                    "pred_quick_mana"};
    if (grid.use_delta_grid) {
        if (grid.delta_step <= 0 || grid.delta_max < grid.delta_min || grid.delta_min < 0)
            throw std::invalid_argument("run_predict: invalid delta grid");
        const double ln_d = std::log(static_cast<double>(grid.big_d));
        for (double delta = grid.delta_min; delta <= grid.delta_max + 1e-12;
             delta += grid.delta_step) {
            auto& row = table.add_row();
            const bool in_range = delta <= ln_d + 1e-12;
            row = {csv_long(grid.big_d),
                   "",
                   csv_double(delta),
                   csv_double(gaussian_wigner_norm(delta)),
                   "",
                   in_range ? csv_double(gaussian_variance(grid.big_d, std::min(delta, ln_d))) : "",
                   in_range
                       ? csv_double(mana_quick_estimate(1, grid.big_d,
                                                        std::max(0.0, ln_d - delta)))
                       : ""};
        }
        return table;
    }
    if (grid.d_a < 3 || grid.d_a % 2 == 0 || grid.d_b_min < 1 || grid.d_b_max < grid.d_b_min)
        throw std::invalid_argument("run_predict: invalid (d_a, d_b) grid");
    const double ln_da = std::log(static_cast<double>(grid.d_a));
    for (long d_b = grid.d_b_min; d_b <= grid.d_b_max; ++d_b) {
        const double delta = std::log(static_cast<double>(grid.d_a) * avg_purity(grid.d_a, d_b));
        auto& row = table.add_row();
        row = {csv_long(grid.d_a),
               csv_long(d_b),
               csv_double(delta),
               csv_double(gaussian_wigner_norm(std::max(0.0, delta))),
               csv_double(exact_mixed_norm(ExactMixedParams(grid.d_a, d_b))),
               csv_double(gaussian_variance(grid.d_a, std::clamp(delta, 0.0, ln_da))),
               csv_double(mana_quick_estimate(1, grid.d_a,
                                              std::clamp(ln_da - delta, 0.0, ln_da)))};
    }
    return table;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (long d : config.d_list) {
        if (d < 3 || d % 2 == 0)
            throw std::invalid_argument("run_bench: d must be odd and >= 3");
        if (d > 2187)
            throw std::invalid_argument("run_bench: d = " + std::to_string(d) +
                                        " exceeds the memory budget");
        const PureState psi = sample_haar_pure(d, SeededStream{config.master_seed, 7});
        const bool with_trace = d <= config.trace_max;

        // Correctness gate before any timing.
        const WignerFunction direct = wigner_pure(psi, WignerPath::Direct);
        const WignerFunction fft = wigner_pure(psi, WignerPath::Fft);
        if ((direct.values - fft.values).cwiseAbs().maxCoeff() > 1e-10)
            throw VerificationError("run_bench: direct and FFT paths disagree at d = " +
                                    std::to_string(d));
        if (with_trace) {
            const WignerFunction trace = wigner_pure(psi, WignerPath::MatrixTrace);
            if ((direct.values - trace.values).cwiseAbs().maxCoeff() > 1e-10)
                throw VerificationError("run_bench: direct and trace paths disagree at d = " +
                                        std::to_string(d));
        }

        auto time_path = [&](WignerPath path) {
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(config.reps));
            volatile double sink = 0.0;
            for (int r = 0; r < config.reps; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                const WignerFunction w = wigner_pure(psi, path);
                sink = sink + w.values(0, 0);
                times.push_back(
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            }
            std::sort(times.begin(), times.end());
            return times[times.size() / 2];
        };

        BenchRow row;
        row.d = d;
        row.fft_seconds = time_path(WignerPath::Fft);
        row.direct_seconds = time_path(WignerPath::Direct);
        row.trace_seconds =
            with_trace ? time_path(WignerPath::MatrixTrace) : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(row);
    }
    return rows;
}

Table bench_table(const std::vector<BenchRow>& rows) {
    Table table;
    table.header = {"d", "path", "median_seconds"};
    for (const auto& r : rows) {
        if (!std::isnan(r.trace_seconds)) {
            auto& row = table.add_row();
            row = {csv_long(r.d), "trace", csv_double(r.trace_seconds)};
        }
        auto& row1 = table.add_row();
        row1 = {csv_long(r.d), "direct", csv_double(r.direct_seconds)};
        auto& row2 = table.add_row();
        row2 = {csv_long(r.d), "fft", csv_double(r.fft_seconds)};
    }
    return table;
}

std::string plot_template(const std::string& experiment) {
    auto known = figure_ids();
    if (std::find(known.begin(), known.end(), experiment) == known.end())
        throw std::invalid_argument("plot_template: unknown experiment id '" + experiment + "'");
    std::string x = "delta", y = "mean_mana", err = "stderr", pred = "pred_gaussian";
    if (experiment == "fig_exact_db") { x = "d_b"; pred = "pred_exact"; }
    if (experiment == "fig_pure_norm") { x = "d"; y = "mean_norm"; pred = "pred_exact"; }
    if (experiment == "fig_pure_std") { x = "d"; y = "std_norm"; err = "stderr_std"; pred = "pred_gauss_std"; }
    if (experiment == "fig_pure_mana") { x = "d"; pred = "pred_ln_exact"; }
    if (experiment == "fig_mixed_var") { y = "std_wigner_norm"; err = "stderr_std"; pred = "pred_gauss_std"; }
    if (experiment == "fig_mixed_detail") { y = "mana"; err = ""; }
    std::string script;
    script += "#!/usr/bin/env python3\n";
    script += "# Plot template for " + experiment + " output.\n";
    script += "import pandas as pd\n";
    script += "import matplotlib.pyplot as plt\n";
    script += "import sys\n\n";
    script += "df = pd.read_csv(sys.argv[1])\n";
    if (err.empty())
        script += "plt.scatter(df['" + x + "'], df['" + y + "'], s=4, label='samples')\n";
    else
        script += "plt.errorbar(df['" + x + "'], df['" + y + "'], yerr=df['" + err +
                  "'], fmt='o', label='monte carlo')\n";
    script += "plt.plot(df['" + x + "'], df['" + pred + "'], ls=':', label='prediction')\n";
    script += "plt.xlabel('" + x + "')\nplt.ylabel('" + y + "')\nplt.legend()\nplt.show()\n";
    return script;
}

}  // namespace manakit
