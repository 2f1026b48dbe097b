#pragma once

#include <cstdint>

namespace manakit {

// A real value stored as (sign, ln|value|) so that Gamma-ratio arithmetic
// stays finite for dimensions up to several hundred.
struct LogSigned {
    double log_abs = 0.0;
    int sign = 0;  // 0 iff the value is exactly zero

    static LogSigned zero() { return {0.0, 0}; }
    static LogSigned from_value(double v);
    static LogSigned from_log(double log_abs, int sign);

    double value() const;

    LogSigned operator*(const LogSigned& o) const;
    LogSigned operator+(const LogSigned& o) const;
    LogSigned operator-() const { return {log_abs, -sign}; }
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Gauss error function.
double erf(double x);

// ln[d!! / (d-1)!!] for odd d >= 1, stable up to d ~ 1e6.
double log_double_factorial_ratio(long d);

// Terminating Gauss hypergeometric series 2F1(-m, b; c; z) with -m = neg_m a
// nonpositive integer. The sum has m+1 terms; small sums are accumulated with
// compensated summation, larger ones in exact rational arithmetic.
LogSigned hyp2f1_terminating(long neg_m, double b, double c, double z);

}  // namespace manakit
