#include "manakit/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace manakit {

namespace mp = boost::multiprecision;

LogSigned LogSigned::from_value(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

LogSigned LogSigned::from_log(double log_abs, int sign) {
    if (sign == 0) return zero();
    return {log_abs, sign > 0 ? 1 : -1};
}

double LogSigned::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

LogSigned LogSigned::operator*(const LogSigned& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {log_abs + o.log_abs, sign * o.sign};
}

LogSigned LogSigned::operator+(const LogSigned& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const LogSigned& big = log_abs >= o.log_abs ? *this : o;
    const LogSigned& small = log_abs >= o.log_abs ? o : *this;
    const double r = std::exp(small.log_abs - big.log_abs);  // in [0, 1]
    if (big.sign == small.sign) return {big.log_abs + std::log1p(r), big.sign};
    if (r == 1.0) return zero();
    return {big.log_abs + std::log1p(-r), big.sign};
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_gamma: argument must be positive");
    return std::lgamma(x);
}

double erf(double x) { return std::erf(x); }

double log_double_factorial_ratio(long d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("log_double_factorial_ratio: d must be odd and >= 1");
    // d!! = 2^{(d+1)/2} Gamma(d/2 + 1) / sqrt(pi) and (d-1)!! = 2^{(d-1)/2} Gamma((d+1)/2),
    // so the ratio is 2 Gamma(d/2 + 1) / (sqrt(pi) Gamma((d+1)/2)).
    const double dd = static_cast<double>(d);
    return std::numbers::ln2 + std::lgamma(dd / 2.0 + 1.0) - 0.5 * std::log(std::numbers::pi) -
           std::lgamma((dd + 1.0) / 2.0);
}

namespace {

LogSigned rational_to_logsigned(const mp::cpp_rational& r) {
    if (r == 0) return LogSigned::zero();
    using BigFloat = mp::cpp_bin_float_50;
    const BigFloat num(mp::numerator(r));
    const BigFloat den(mp::denominator(r));
    const BigFloat log_abs = mp::log(mp::abs(num)) - mp::log(den);
    return LogSigned::from_log(static_cast<double>(log_abs), r > 0 ? 1 : -1);
}

LogSigned hyp2f1_rational(long m, double b, double c, double z) {
    const mp::cpp_rational rb(b), rc(c), rz(z);
    mp::cpp_rational term = 1, sum = 1;
    for (long k = 0; k < m; ++k) {
        term *= mp::cpp_rational(-m + k) * (rb + k) * rz;
        term /= (rc + k) * mp::cpp_rational(k + 1);
        sum += term;
    }
    return rational_to_logsigned(sum);
}

LogSigned hyp2f1_kahan(long m, double b, double c, double z) {
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (long k = 0; k < m; ++k) {
        term *= (static_cast<double>(-m + k) * (b + static_cast<double>(k)) * z) /
                ((c + static_cast<double>(k)) * static_cast<double>(k + 1));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return LogSigned::from_value(sum);
}

}  // namespace

LogSigned hyp2f1_terminating(long neg_m, double b, double c, double z) {
    if (neg_m > 0)
        throw std::invalid_argument(
            "hyp2f1_terminating: first parameter must be a nonpositive integer (series must terminate)");
    const long m = -neg_m;
    // c must not hit zero or a negative integer before the series terminates.
    if (c <= 0.0 && c == std::floor(c) && static_cast<long>(-c) < m)
        throw std::invalid_argument("hyp2f1_terminating: c is a nonpositive integer inside the sum");
    if (m == 0) return LogSigned::from_value(1.0);
    if (m <= 30) return hyp2f1_kahan(m, b, c, z);
    return hyp2f1_rational(m, b, c, z);
}

}  // namespace manakit
