#pragma once

#include <iosfwd>
#include <vector>

#include "manakit/ensembles.hpp"
#include "manakit/wigner.hpp"

namespace manakit {

// Chebyshev coefficients tau_0..tau_K of |x| on [-1, 1]; the odd ones vanish
// and the even ones decay like k^{-2}.
struct ChebyshevSeries {
    std::vector<double> coeffs;
    int max_order = 0;
};

// Coefficients computed by quadrature of the Fourier integral of |cos theta|.
ChebyshevSeries chebyshev_coeffs(int max_order);

// Truncated reconstruction of the Wigner norm,
// sum_{pq} sum_{n<=K} tau_n T_n[W(p,q)]. Raw W values already lie inside
// [-1, 1], so no argument rescaling is applied.
double reconstruct_wigner_norm(const WignerFunction& w, const ChebyshevSeries& series);
double reconstruct_wigner_norm(const WignerFunction& w, int max_order);

// Chebyshev tail bound P[W < <W> - delta] <= 1/(D delta^2), clamped to 1.
double haar_tail_bound(double big_d, double delta);

// Bound on the probability of confusing a Haar state with the output of an
// approximate t-design whose Wigner norm is at most eps^{-c t^4 lg t}:
// 1 / (D [sqrt(2/pi) sqrt(D) - eps^{-c t^4 lg t}]), valid for
// D > eps^{-2 c t^4 lg t}. Throws out-of-regime otherwise.
double confusion_probability(double big_d, int t, double eps, double c = 1.0);

struct DistinguishResult {
    double haar_below_rate = 0.0;
    double bound = 0.0;
};

// Fraction of Haar pure states at dimension d whose Wigner norm falls below
// `threshold`, together with the analytic tail bound at
// delta = exact_pure_norm(d) - threshold.
DistinguishResult empirical_distinguish(long d, long n_samples, double threshold,
                                        const SeededStream& stream, int threads = 0);

// One grid point of the tail-bound experiment.
struct DistinguishRecord {
    long d = 0;
    double threshold = 0.0;
    long n_samples = 0;
    double empirical_rate = 0.0;
    double analytic_bound = 0.0;
};

// CSV with header `d,threshold,n_samples,empirical_rate,analytic_bound`.
void write_distinguish_csv(const std::vector<DistinguishRecord>& records, std::ostream& os);

}  // namespace manakit
