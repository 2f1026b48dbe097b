#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace manakit {

// Welford accumulator for streaming mean / variance.
class RunningStats {
public:
    void add(double x) {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }
    std::int64_t count() const { return n_; }
    double mean() const { return mean_; }
    // Unbiased sample variance.
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double stderr_mean() const {
        return n_ > 0 ? stddev() / std::sqrt(static_cast<double>(n_)) : 0.0;
    }
    // Standard error of the sample standard deviation (normal approximation).
    double stderr_stddev() const {
        return n_ > 1 ? stddev() / std::sqrt(2.0 * static_cast<double>(n_ - 1)) : 0.0;
    }
    void merge(const RunningStats& other) {
        if (other.n_ == 0) return;
        if (n_ == 0) { *this = other; return; }
        const double delta = other.mean_ - mean_;
        const double na = static_cast<double>(n_), nb = static_cast<double>(other.n_);
        m2_ += other.m2_ + delta * delta * na * nb / (na + nb);
        mean_ += delta * nb / (na + nb);
        n_ += other.n_;
    }

private:
    std::int64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares y = slope*x + intercept.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need two or more paired points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

}  // namespace manakit
