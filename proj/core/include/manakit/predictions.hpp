#pragma once

#include "manakit/special_functions.hpp"

namespace manakit {

// Mean and variance of a single Wigner-function component under the Gaussian
// model, tied to a total dimension and an entropy deficit.
struct GaussianParams {
    double mu = 0.0;
    double sigma2 = 0.0;
    double delta = 0.0;
    long big_d = 0;

    // mu = 1/D^2, sigma^2 = mu^2 (e^Delta - 1).
    static GaussianParams from_deficit(long big_d, double delta);
};

// Dimensions of the reduced-state ensemble and the derived split
// a = d_B (d_A + 1)/2, b = d_B (d_A - 1)/2 of the bipartite space.
struct ExactMixedParams {
    long d_a = 3;
    long d_b = 1;

    ExactMixedParams(long d_a, long d_b);
    long big_d() const { return d_a * d_b; }
    long a() const { return d_b * (d_a + 1) / 2; }
    long b() const { return d_b * (d_a - 1) / 2; }
};

// Mean Wigner norm under the Gaussian model as a function of the entropy
// deficit (nats). Exactly 1 at Delta = 0, increasing in Delta.
double gaussian_wigner_norm(double delta);

struct GaussianLimits {
    double large_delta = 0.0;  // sqrt(2/pi) e^{Delta/2}
    double small_delta = 0.0;  // 1 + sqrt(2/pi) Delta^{3/2} e^{-1/(2 Delta)}
};
GaussianLimits gaussian_limits(double delta);

// Gaussian-model variance of the Wigner norm, D^{-2}[e^Delta - <W>^2],
// clamped at zero near Delta = 0 where the model degenerates.
double gaussian_variance(long big_d, double delta);

// Exact Haar-average Wigner norm of pure states, d!!/(d-1)!!.
double exact_pure_norm(long d);

// Exact n-th absolute moment <|W(p,q)|^n> for Haar pure states, evaluated in
// rational arithmetic.
double pure_abs_moment(long d, long n, long cap = 20);

// n-th absolute moment of W(p,q) for the reduced ensemble, read off the
// characteristic function's terminating hypergeometric series.
double char_fn_moment(const ExactMixedParams& params, long n, long cap = 20);

// Exact mean Wigner norm of the reduced ensemble, d_A^2 <|W(p,q)|>.
double exact_mixed_norm(const ExactMixedParams& params);

// Saddle-point mean and variance of W(p,q) for the reduced ensemble:
// mu = d_B/(d_A (D-2)), sigma^2 = 1/(d_A^2 (D-2)).
GaussianParams saddle_params(long d_a, long d_b);

// Haar-average purity of the reduced state, (d_A + d_B)/(d_A d_B + 1).
double avg_purity(long d_a, long d_b);

// max(0, [l ln d - S2 - ln(pi/2)]/2), the quick mana estimate.
double mana_quick_estimate(long ell, long d, double s2);

}  // namespace manakit
