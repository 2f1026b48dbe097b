#include "manakit/predictions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace manakit {

namespace mp = boost::multiprecision;

namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

void check_odd(long d, const char* who) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": d must be odd and >= 3");
}

}  // namespace

GaussianParams GaussianParams::from_deficit(long big_d, double delta) {
    if (big_d < 2) throw std::invalid_argument("GaussianParams: dimension must be >= 2");
    if (delta < 0.0) throw std::invalid_argument("GaussianParams: deficit must be nonnegative");
    GaussianParams g;
    g.big_d = big_d;
    g.delta = delta;
    const double dd = static_cast<double>(big_d);
    g.mu = 1.0 / (dd * dd);
    g.sigma2 = g.mu * g.mu * std::expm1(delta);
    return g;
}

ExactMixedParams::ExactMixedParams(long d_a_, long d_b_) : d_a(d_a_), d_b(d_b_) {
    check_odd(d_a, "ExactMixedParams");
    if (d_b < 1) throw std::invalid_argument("ExactMixedParams: d_B must be >= 1");
}

double gaussian_wigner_norm(double delta) {
    if (delta < 0.0) throw std::invalid_argument("gaussian_wigner_norm: deficit must be nonnegative");
    if (delta == 0.0) return 1.0;
    // r = sigma/mu; <W> = sqrt(2/pi) r e^{-1/(2 r^2)} + erf(1/(r sqrt(2))).
    const double r2 = std::expm1(delta);
    const double r = std::sqrt(r2);
    return kSqrt2OverPi * r * std::exp(-0.5 / r2) + std::erf(1.0 / (r * std::numbers::sqrt2));
}

GaussianLimits gaussian_limits(double delta) {
    GaussianLimits lim;
    lim.large_delta = kSqrt2OverPi * std::exp(delta / 2.0);
    lim.small_delta = delta <= 0.0
                          ? 1.0
                          : 1.0 + kSqrt2OverPi * std::pow(delta, 1.5) * std::exp(-0.5 / delta);
    return lim;
}

double gaussian_variance(long big_d, double delta) {
    const double ln_d = std::log(static_cast<double>(big_d));
    if (delta < 0.0 || delta > ln_d + 1e-12)
        throw std::invalid_argument("gaussian_variance: deficit outside [0, ln D]");
    const double mean = gaussian_wigner_norm(delta);
    const double dd = static_cast<double>(big_d);
    const double var = (std::exp(delta) - mean * mean) / (dd * dd);
    return std::max(0.0, var);
}

double exact_pure_norm(long d) {
    check_odd(d, "exact_pure_norm");
    return std::exp(log_double_factorial_ratio(d));
}

double pure_abs_moment(long d, long n, long cap) {
    check_odd(d, "pure_abs_moment");
    if (n < 0 || n > cap)
        throw std::invalid_argument("pure_abs_moment: order outside [0, cap]");
    // In the eigenbasis of A(p,q), W = x/d with x = 2u - 1 and u ~ Beta(a, b),
    // a = (d+1)/2, b = (d-1)/2. Both weight exponents are nonnegative
    // integers, so the moment integral expands into an exact rational sum:
    //   E|x|^n = N * sum_{j,k} C(a-1,j) C(b-1,k) (-1)^k / (n+j+k+1)  + (a <-> b),
    // with N = Gamma(d) / (Gamma(a) Gamma(b) 2^{d-1}).
    const long a = (d + 1) / 2, b = (d - 1) / 2;
    using Int = mp::cpp_int;
    using Rat = mp::cpp_rational;
    auto half_integral = [n](long aa, long bb) {
        Rat acc = 0;
        Int binom_j = 1;  // C(aa-1, j)
        for (long j = 0; j < aa; ++j) {
            Int binom_k = 1;  // C(bb-1, k)
            for (long k = 0; k < bb; ++k) {
                Rat term(binom_j * binom_k, Int(n + j + k + 1));
                acc += (k % 2 == 0) ? term : -term;
                binom_k = binom_k * (bb - 1 - k) / (k + 1);
            }
            binom_j = binom_j * (aa - 1 - j) / (j + 1);
        }
        return acc;
    };
    Rat integral = half_integral(a, b) + half_integral(b, a);
    // N = (d-1)! / ((a-1)! (b-1)! 2^{d-1})
    Int num = 1, den = Int(1) << static_cast<unsigned>(d - 1);
    for (long k = 2; k <= d - 1; ++k) num *= k;
    for (long k = 2; k <= a - 1; ++k) den *= k;
    for (long k = 2; k <= b - 1; ++k) den *= k;
    Rat moment = Rat(num, den) * integral;
    for (long i = 0; i < n; ++i) moment /= d;
    return static_cast<double>(mp::cpp_bin_float_50(moment));
}

double char_fn_moment(const ExactMixedParams& params, long n, long cap) {
    if (n < 0 || n > cap)
        throw std::invalid_argument("char_fn_moment: order outside [0, cap]");
    const long a = params.a(), b = params.b(), big_d = params.big_d();
    const double da = static_cast<double>(params.d_a);
    // n! z^n/n! coefficient of the characteristic function:
    //   <|W|^n> = (n!/d^n) * Gamma(D)/(2^{D-1} Gamma(a) Gamma(b)) *
    //             [ Gamma(b)/Gamma(1+b+n) 2F1(1-a, 1+n; 1+b+n; -1)
    //             + Gamma(a)/Gamma(1+a+n) 2F1(1-b, 1+n; 1+a+n; -1) ].
    const double log_prefactor = log_gamma(static_cast<double>(n + 1)) -
                                 static_cast<double>(n) * std::log(da) +
                                 log_gamma(static_cast<double>(big_d)) -
                                 static_cast<double>(big_d - 1) * std::numbers::ln2 -
                                 log_gamma(static_cast<double>(a)) -
                                 log_gamma(static_cast<double>(b));
    const LogSigned term1 =
        LogSigned::from_log(log_gamma(static_cast<double>(b)) -
                                log_gamma(static_cast<double>(1 + b + n)),
                            1) *
        hyp2f1_terminating(1 - a, static_cast<double>(1 + n), static_cast<double>(1 + b + n), -1.0);
    const LogSigned term2 =
        LogSigned::from_log(log_gamma(static_cast<double>(a)) -
                                log_gamma(static_cast<double>(1 + a + n)),
                            1) *
        hyp2f1_terminating(1 - b, static_cast<double>(1 + n), static_cast<double>(1 + a + n), -1.0);
    const LogSigned bracket = term1 + term2;
    return (LogSigned::from_log(log_prefactor, 1) * bracket).value();
}

double exact_mixed_norm(const ExactMixedParams& params) {
    const long a = params.a(), b = params.b(), big_d = params.big_d();
    const double da = static_cast<double>(params.d_a);
    // d_A Gamma(D)/(2^{D-1} Gamma(a) Gamma(b)) [F1/(b(b+1)) + F2/(a(a+1))]
    // with F1 = 2F1(1-a, 2; 2+b; -1), F2 = 2F1(1-b, 2; 2+a; -1); equal to
    // d_A^2 times the first characteristic-function moment.
    const double log_prefactor = std::log(da) + log_gamma(static_cast<double>(big_d)) -
                                 static_cast<double>(big_d - 1) * std::numbers::ln2 -
                                 log_gamma(static_cast<double>(a)) -
                                 log_gamma(static_cast<double>(b));
    const LogSigned f1 = hyp2f1_terminating(1 - a, 2.0, static_cast<double>(2 + b), -1.0);
    const LogSigned f2 = hyp2f1_terminating(1 - b, 2.0, static_cast<double>(2 + a), -1.0);
    const double bb = static_cast<double>(b), aa = static_cast<double>(a);
    const LogSigned bracket = LogSigned::from_log(-std::log(bb * (bb + 1.0)), 1) * f1 +
                              LogSigned::from_log(-std::log(aa * (aa + 1.0)), 1) * f2;
    return (LogSigned::from_log(log_prefactor, 1) * bracket).value();
}

GaussianParams saddle_params(long d_a, long d_b) {
    check_odd(d_a, "saddle_params");
    if (d_b < 1) throw std::invalid_argument("saddle_params: d_B must be >= 1");
    const long big_d = d_a * d_b;
    if (big_d < 3) throw std::invalid_argument("saddle_params: need d_A d_B >= 3");
    GaussianParams g;
    g.big_d = d_a;  // the Wigner function lives on d_A^2 phase-space points
    const double da = static_cast<double>(d_a);
    const double db = static_cast<double>(d_b);
    const double dm2 = static_cast<double>(big_d - 2);
    g.mu = db / (da * dm2);
    g.sigma2 = 1.0 / (da * da * dm2);
    g.delta = std::log(da * avg_purity(d_a, d_b));
    return g;
}

double avg_purity(long d_a, long d_b) {
    if (d_a < 1 || d_b < 1) throw std::invalid_argument("avg_purity: dimensions must be >= 1");
    return static_cast<double>(d_a + d_b) / static_cast<double>(d_a * d_b + 1);
}

double mana_quick_estimate(long ell, long d, double s2) {
    if (ell < 1) throw std::invalid_argument("mana_quick_estimate: need ell >= 1");
    check_odd(d, "mana_quick_estimate");
    const double max_s2 = static_cast<double>(ell) * std::log(static_cast<double>(d));
    if (s2 < -1e-12 || s2 > max_s2 + 1e-12)
        throw std::invalid_argument("mana_quick_estimate: S2 outside [0, ell ln d]");
    return std::max(0.0, 0.5 * (max_s2 - s2 - std::log(std::numbers::pi / 2.0)));
}

}  // namespace manakit
