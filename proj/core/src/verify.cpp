#include "manakit/verify.hpp"

#include <cmath>
#include <numbers>

#include "manakit/design_probe.hpp"
#include "manakit/ensembles.hpp"
#include "manakit/predictions.hpp"
#include "manakit/qudit_algebra.hpp"
#include "manakit/special_functions.hpp"
#include "manakit/wigner.hpp"

namespace manakit {

namespace {

void push(std::vector<CheckResult>& out, std::string name, double residual, double tolerance) {
    out.push_back({std::move(name), residual, tolerance, residual <= tolerance});
}

// Dense construction straight off the definitions: A(0,0) = d^{-1} sum_a T_a,
// A(u) = T_u A(0,0) T_u^dag. The production path is checked against this.
CMatrix phase_point_literal(long d, PhasePoint u) {
    CMatrix a0 = CMatrix::Zero(d, d);
    for (long a1 = 0; a1 < d; ++a1)
        for (long a2 = 0; a2 < d; ++a2) a0 += pauli_op(d, {a1, a2}).entries;
    a0 /= static_cast<double>(d);
    const CMatrix t = pauli_op(d, {u.p, u.q}).entries;
    return t * a0 * t.adjoint();
}

void check_construction(std::vector<CheckResult>& out, long d) {
    double residual = 0.0;
    for (long p = 0; p < d; ++p)
        for (long q = 0; q < d; ++q) {
            const CMatrix fast = phase_point_op(d, {p, q}).entries;
            const CMatrix literal = phase_point_literal(d, {p, q});
            residual = std::max(residual, (fast - literal).cwiseAbs().maxCoeff());
        }
    push(out, "algebra.construction.d" + std::to_string(d), residual, 1e-12);
}

void check_covariance(std::vector<CheckResult>& out, long d) {
    // T_u A(p,q) T_u^dag = A(p + u1, q + u2)
    double residual = 0.0;
    const PhasePoint base{1 % d, 2 % d};
    const CMatrix a = phase_point_op(d, base).entries;
    for (long u1 = 0; u1 < d; ++u1)
        for (long u2 = 0; u2 < d; ++u2) {
            const CMatrix t = pauli_op(d, {u1, u2}).entries;
            const CMatrix moved = t * a * t.adjoint();
            const CMatrix target = phase_point_op(d, {(base.p + u1) % d, (base.q + u2) % d}).entries;
            residual = std::max(residual, (moved - target).cwiseAbs().maxCoeff());
        }
    push(out, "algebra.covariance.d" + std::to_string(d), residual, 1e-12);
}

void check_block_structure(std::vector<CheckResult>& out, long d) {
    // Permuting the basis by q -> 0, q+x -> 2x-1, q-x -> 2x turns A(p,q) into
    // 1 (+) blocks [[0, w^{2px}], [w^{-2px}, 0]]; reconstruct and compare.
    double residual = 0.0;
    for (long p = 0; p < d; ++p)
        for (long q = 0; q < d; ++q) {
            const CMatrix a = phase_point_literal(d, {p, q});
            std::vector<long> perm(static_cast<std::size_t>(d));
            perm[static_cast<std::size_t>(q)] = 0;
            for (long x = 1; x <= (d - 1) / 2; ++x) {
                perm[static_cast<std::size_t>((q + x) % d)] = 2 * x - 1;
                perm[static_cast<std::size_t>(((q - x) % d + d) % d)] = 2 * x;
            }
            CMatrix b(d, d);
            for (long j = 0; j < d; ++j)
                for (long k = 0; k < d; ++k)
                    b(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(k)]) = a(j, k);
            CMatrix expected = CMatrix::Zero(d, d);
            expected(0, 0) = 1.0;
            for (long x = 1; x <= (d - 1) / 2; ++x) {
                expected(2 * x - 1, 2 * x) = root_of_unity(d, 2 * p * x % d);
                expected(2 * x, 2 * x - 1) = root_of_unity(d, -(2 * p * x % d));
            }
            residual = std::max(residual, (b - expected).cwiseAbs().maxCoeff());
        }
    push(out, "algebra.blockstructure.d" + std::to_string(d), residual, 1e-12);
}

void check_wigner(std::vector<CheckResult>& out, const VerifyOptions& options) {
    double path_residual = 0.0, constraint_residual = 0.0, jensen_violation = 0.0, bound_violation = 0.0;
    std::uint64_t stream = 1000000;
    for (long d : {3L, 5L, 9L, 15L, 27L}) {
        if (d > options.max_d && d > 9) continue;
        for (int rep = 0; rep < 8; ++rep) {
            const PureState psi = sample_haar_pure(d, SeededStream{options.seed, stream++});
            const DensityMatrix dm = sample_reduced(d, 3, SeededStream{options.seed, stream++});
            for (int mixed = 0; mixed < 2; ++mixed) {
                const WignerFunction direct = mixed ? wigner_rho(dm, WignerPath::Direct)
                                                    : wigner_pure(psi, WignerPath::Direct);
                const WignerFunction fft = mixed ? wigner_fft(dm) : wigner_fft(psi);
                path_residual =
                    std::max(path_residual, (direct.values - fft.values).cwiseAbs().maxCoeff());
                if (d <= 15) {
                    const WignerFunction trace = mixed ? wigner_rho(dm, WignerPath::MatrixTrace)
                                                       : wigner_pure(psi, WignerPath::MatrixTrace);
                    path_residual =
                        std::max(path_residual, (direct.values - trace.values).cwiseAbs().maxCoeff());
                }
                const WignerResiduals res = constraint_residuals(direct);
                constraint_residual = std::max({constraint_residual, res.sum_one, res.sum_sq});
                jensen_violation = std::max(
                    jensen_violation,
                    mana(direct) - 0.5 * (std::log(static_cast<double>(d)) - direct.s2));
                // |W| <= sqrt(e^{-S2}/D), the tight pointwise bound.
                bound_violation = std::max(
                    bound_violation, direct.values.cwiseAbs().maxCoeff() -
                                         std::sqrt(std::exp(-direct.s2) / static_cast<double>(d)));
            }
        }
    }
    push(out, "wigner.path_equivalence", path_residual, 1e-9);
    push(out, "wigner.constraints", constraint_residual, 1e-10);
    push(out, "wigner.jensen_bound", jensen_violation, 1e-10);
    push(out, "wigner.pointwise_bound", bound_violation, 1e-12);

    // Stabilizer sanity: computational basis states and their Pauli images
    // have zero mana.
    double stabilizer_mana = 0.0;
    for (long d : {3L, 5L, 9L}) {
        for (long j = 0; j < d; ++j) {
            CVector e = CVector::Zero(d);
            e(j) = 1.0;
            for (long a1 = 0; a1 < d; ++a1)
                for (long a2 = 0; a2 < d; ++a2) {
                    const CVector v = pauli_op(d, {a1, a2}).entries * e;
                    const PureState s = PureState::make(v, QuditDim::single(d));
                    stabilizer_mana = std::max(stabilizer_mana, std::abs(mana(wigner_fft(s))));
                }
        }
    }
    push(out, "wigner.stabilizer_mana", stabilizer_mana, 1e-10);
}

void check_ensembles(std::vector<CheckResult>& out, const VerifyOptions& options) {
    // Determinism: identical stream -> identical bits.
    double determinism = 0.0;
    const SeededStream s{options.seed, 42};
    determinism = std::max(determinism, (sample_reduced(5, 7, s).rho - sample_reduced(5, 7, s).rho)
                                            .cwiseAbs()
                                            .maxCoeff());
    determinism =
        std::max(determinism, (sample_haar_pure(9, s).amps - sample_haar_pure(9, s).amps)
                                  .cwiseAbs()
                                  .maxCoeff());
    push(out, "ensembles.determinism", determinism, 0.0);

    // Simple mixtures hit the target deficit exactly.
    double deficit_residual = 0.0;
    for (long d : {3L, 11L, 27L}) {
        const double ln_d = std::log(static_cast<double>(d));
        for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const auto dm = sample_simple_mixture(d, frac * ln_d, SeededStream{options.seed, 77});
            deficit_residual = std::max(deficit_residual,
                                        std::abs(entropy_deficit(dm) - frac * ln_d));
        }
    }
    push(out, "ensembles.deficit_exactness", deficit_residual, 1e-10);
}

void check_predictions(std::vector<CheckResult>& out) {
    double ladder = 0.0, pure_match = 0.0;
    for (long d_a : {3L, 5L, 7L, 9L}) {
        for (long d_b = 1; d_b <= 9; ++d_b) {
            const ExactMixedParams params(d_a, d_b);
            const double via_moment = static_cast<double>(d_a * d_a) * char_fn_moment(params, 1);
            ladder = std::max(ladder, std::abs(exact_mixed_norm(params) - via_moment));
        }
        pure_match =
            std::max(pure_match, std::abs(exact_mixed_norm(ExactMixedParams(d_a, 1)) -
                                          exact_pure_norm(d_a)));
    }
    push(out, "predictions.consistency_ladder", ladder, 1e-10);
    push(out, "predictions.pure_reduction", pure_match, 1e-10);

    double monotone = 0.0;  // positive residual on any decrease
    double prev = gaussian_wigner_norm(0.0);
    for (double delta = 0.05; delta <= 6.0; delta += 0.05) {
        const double cur = gaussian_wigner_norm(delta);
        monotone = std::max(monotone, prev - cur);
        prev = cur;
    }
    push(out, "predictions.gaussian_monotone", monotone, 0.0);

    double jensen = 0.0;
    for (double delta = 0.0; delta <= 20.0; delta += 0.25)
        jensen = std::max(jensen, std::log(gaussian_wigner_norm(delta)) - delta / 2.0);
    push(out, "predictions.gaussian_jensen", jensen, 1e-12);
}

void check_special_functions(std::vector<CheckResult>& out) {
    double residual = 0.0;
    residual = std::max(residual, std::abs(log_gamma(5.0) - std::log(24.0)));
    residual = std::max(residual, std::abs(log_gamma(0.5) - 0.5 * std::log(std::numbers::pi)));
    residual = std::max(residual, std::abs(manakit::erf(6.0) - 1.0));
    residual = std::max(residual, std::abs(log_double_factorial_ratio(3) - std::log(1.5)));
    residual = std::max(residual, std::abs(log_double_factorial_ratio(5) - std::log(15.0 / 8.0)));
    residual = std::max(residual,
                        std::abs(hyp2f1_terminating(-1, 2.0, 3.0, -1.0).value() - 5.0 / 3.0));
    residual = std::max(residual, std::abs(hyp2f1_terminating(0, 2.0, 4.0, -1.0).value() - 1.0));
    push(out, "special_functions.reference_values", residual, 1e-12);
}

void check_chebyshev(std::vector<CheckResult>& out) {
    const ChebyshevSeries series = chebyshev_coeffs(100);
    double residual = std::abs(series.coeffs[0] - 2.0 / std::numbers::pi);
    for (int k = 1; k <= 50; ++k) {
        const double closed = 4.0 / std::numbers::pi * (k % 2 == 1 ? 1.0 : -1.0) /
                              static_cast<double>(4 * k * k - 1);
        residual = std::max(residual, std::abs(series.coeffs[static_cast<std::size_t>(2 * k)] - closed));
    }
    double odd = 0.0;
    for (int n = 1; n <= 99; n += 2) odd = std::max(odd, std::abs(series.coeffs[static_cast<std::size_t>(n)]));
    push(out, "design_probe.chebyshev_oracle", residual, 1e-8);
    push(out, "design_probe.chebyshev_odd_zero", odd, 1e-10);
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<CheckResult> out;

    for (long d = 3; d <= options.max_d; d += 2) {
        const AlgebraReport report = verify_algebra(d, options.max_d);
        push(out, "algebra.hermiticity.d" + std::to_string(d), report.hermiticity, 1e-12);
        push(out, "algebra.spectrum.d" + std::to_string(d), report.spectrum, 1e-9);
        push(out, "algebra.trace.d" + std::to_string(d), report.trace, 1e-12);
        push(out, "algebra.orthogonality.d" + std::to_string(d), report.orthogonality, 1e-9);
    }
    if (options.inject_fault) {
        // Negative control: perturb one operator entry and re-run the trace
        // check, which must now fail.
        CMatrix a = phase_point_op(3, {0, 0}).entries;
        a(0, 0) += 1e-3;
        push(out, "algebra.injected_fault.d3", std::abs(a.trace() - Complex(1.0)), 1e-12);
    }

    for (long d = 3; d <= std::min<long>(options.max_d, 9); d += 2) {
        check_construction(out, d);
        check_covariance(out, d);
        check_block_structure(out, d);
    }

    check_wigner(out, options);
    check_ensembles(out, options);
    check_predictions(out);
    check_special_functions(out);
    check_chebyshev(out);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace manakit
