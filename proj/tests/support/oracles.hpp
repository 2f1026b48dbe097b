#pragma once

// Test-side oracles, kept independent of the implementation paths they check.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracles {

namespace mp = boost::multiprecision;

// Exact rational evaluation of the terminating series
// 2F1(-m, b; c; z) = sum_{k=0}^{m} ((-m)_k (b)_k / ((c)_k k!)) z^k
// for integer parameters.
inline double hyp2f1_rational(long m, long b, long c, long z_num, long z_den) {
    mp::cpp_rational term = 1, sum = 1;
    const mp::cpp_rational z(z_num, z_den);
    for (long k = 0; k < m; ++k) {
        term *= mp::cpp_rational(-m + k) * mp::cpp_rational(b + k) * z;
        term /= mp::cpp_rational(c + k) * mp::cpp_rational(k + 1);
        sum += term;
    }
    return static_cast<double>(mp::cpp_bin_float_50(sum));
}

// d!!/(d-1)!! by exact integer products.
inline double double_factorial_ratio_exact(long d) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("need odd d");
    mp::cpp_int num = 1, den = 1;
    for (long k = d; k >= 1; k -= 2) num *= k;
    for (long k = d - 1; k >= 2; k -= 2) den *= k;
    return static_cast<double>(mp::cpp_bin_float_50(mp::cpp_rational(num, den)));
}

// Maclaurin series for erf, good to ~1e-15 for |x| <= 1.
inline double erf_series(double x) {
    double term = x, sum = x;
    for (int k = 1; k < 40; ++k) {
        term *= -x * x / static_cast<double>(k);
        sum += term / static_cast<double>(2 * k + 1);
    }
    return 2.0 / std::sqrt(std::acos(-1.0)) * sum;
}

// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

// Acceptance threshold for the two-sample KS test at significance alpha.
inline double ks_threshold(std::size_t n, std::size_t m, double alpha = 1e-3) {
    const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
    const double nn = static_cast<double>(n), mm = static_cast<double>(m);
    return c * std::sqrt((nn + mm) / (nn * mm));
}

}  // namespace oracles
