#include "manakit/design_probe.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "manakit/csv.hpp"
#include "manakit/parallel.hpp"
#include "manakit/predictions.hpp"

namespace manakit {

namespace {

// Composite Simpson quadrature of f over [lo, hi] with `intervals` panels
// (rounded up to even).
template <class F>
double simpson(F&& f, double lo, double hi, long intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (hi - lo) / static_cast<double>(intervals);
    double acc = f(lo) + f(hi);
    for (long i = 1; i < intervals; ++i)
        acc += f(lo + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// integral_0^pi |cos t| cos(n t) dt, split at the kink at pi/2. The panel
// count scales with n to keep the oscillatory error below ~1e-10.
double abs_cos_fourier_integral(int n) {
    const long intervals = std::max<long>(2048, 128L * n);
    auto f = [n](double t) { return std::abs(std::cos(t)) * std::cos(n * t); };
    const double mid = std::numbers::pi / 2.0;
    return simpson(f, 0.0, mid, intervals) + simpson(f, mid, std::numbers::pi, intervals);
}

}  // namespace

ChebyshevSeries chebyshev_coeffs(int max_order) {
    if (max_order < 2) throw std::invalid_argument("chebyshev_coeffs: need max order >= 2");
    ChebyshevSeries series;
    series.max_order = max_order;
    series.coeffs.resize(static_cast<std::size_t>(max_order) + 1);
    for (int n = 0; n <= max_order; ++n) {
        const double scale = (n == 0 ? 1.0 : 2.0) / std::numbers::pi;
        series.coeffs[static_cast<std::size_t>(n)] = scale * abs_cos_fourier_integral(n);
    }
    return series;
}

double reconstruct_wigner_norm(const WignerFunction& w, const ChebyshevSeries& series) {
    const auto& tau = series.coeffs;
    const int k_max = static_cast<int>(tau.size()) - 1;
    double total = 0.0;
    for (long q = 0; q < w.values.cols(); ++q)
        for (long p = 0; p < w.values.rows(); ++p) {
            const double x = w.values(p, q);
            // Clenshaw recurrence for sum_n tau_n T_n(x).
            double b1 = 0.0, b2 = 0.0;
            for (int n = k_max; n >= 1; --n) {
                const double b0 = tau[static_cast<std::size_t>(n)] + 2.0 * x * b1 - b2;
                b2 = b1;
                b1 = b0;
            }
            total += tau[0] + x * b1 - b2;
        }
    return total;
}

double reconstruct_wigner_norm(const WignerFunction& w, int max_order) {
    return reconstruct_wigner_norm(w, chebyshev_coeffs(max_order));
}

double haar_tail_bound(double big_d, double delta) {
    if (delta <= 0.0) throw std::invalid_argument("haar_tail_bound: delta must be positive");
    return std::min(1.0, 1.0 / (big_d * delta * delta));
}

double confusion_probability(double big_d, int t, double eps, double c) {
    if (t < 1 || eps <= 0.0) throw std::invalid_argument("confusion_probability: need t >= 1, eps > 0");
    // Wigner norm ceiling of the t-design output: eps^{-c t^4 lg t}.
    const double exponent = c * std::pow(static_cast<double>(t), 4.0) * std::log2(static_cast<double>(t));
    const double design_norm = std::pow(eps, -exponent);
    if (!(big_d > design_norm * design_norm))
        throw std::domain_error("confusion_probability: out of regime, need D > eps^{-2 c t^4 lg t}");
    const double bracket = std::sqrt(2.0 / std::numbers::pi) * std::sqrt(big_d) - design_norm;
    if (!(bracket > 0.0))
        throw std::domain_error("confusion_probability: out of regime, bound denominator not positive");
    return 1.0 / (big_d * bracket);
}

DistinguishResult empirical_distinguish(long d, long n_samples, double threshold,
                                        const SeededStream& stream, int threads) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("empirical_distinguish: d must be odd and >= 3");
    if (n_samples < 1) throw std::invalid_argument("empirical_distinguish: need n_samples >= 1");
    std::atomic<long> below{0};
    parallel_for(n_samples, threads, [&](std::int64_t i) {
        const PureState psi = sample_haar_pure(d, stream.at(static_cast<std::uint64_t>(i)));
        if (wigner_norm(wigner_fft(psi)) < threshold) below.fetch_add(1, std::memory_order_relaxed);
    });
    DistinguishResult result;
    result.haar_below_rate = static_cast<double>(below.load()) / static_cast<double>(n_samples);
    const double delta = exact_pure_norm(d) - threshold;
    result.bound = delta > 0.0 ? haar_tail_bound(static_cast<double>(d), delta) : 1.0;
    return result;
}

void write_distinguish_csv(const std::vector<DistinguishRecord>& records, std::ostream& os) {
    os << "d,threshold,n_samples,empirical_rate,analytic_bound\n";
    for (const auto& r : records) {
        os << r.d << ',' << csv_double(r.threshold) << ',' << r.n_samples << ','
           << csv_double(r.empirical_rate) << ',' << csv_double(r.analytic_bound) << '\n';
    }
}

}  // namespace manakit
