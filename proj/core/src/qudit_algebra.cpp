#include "manakit/qudit_algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace manakit {

namespace {

void check_odd_dim(long d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("dimension must be odd and >= 3, got " + std::to_string(d));
}

long mod(long x, long d) {
    long r = x % d;
    return r < 0 ? r + d : r;
}

}  // namespace

QuditDim::QuditDim(std::vector<long> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("QuditDim: empty dimension list");
    total_ = 1;
    for (long d : dims_) {
        if (d < 2) throw std::invalid_argument("QuditDim: every factor must be >= 2");
        if (total_ > (1L << 24) / d)
            throw std::invalid_argument("QuditDim: total dimension exceeds addressable size");
        total_ *= d;
    }
}

QuditDim QuditDim::single(long d) { return QuditDim(std::vector<long>{d}); }

QuditDim QuditDim::multi(std::vector<long> dims) { return QuditDim(std::move(dims)); }

bool QuditDim::all_odd() const {
    for (long d : dims_)
        if (d < 3 || d % 2 == 0) return false;
    return true;
}

void QuditDim::require_odd(const char* what) const {
    if (!all_odd())
        throw std::invalid_argument(std::string(what) + ": every qudit dimension must be odd and >= 3");
}

long inv2(long d) {
    check_odd_dim(d);
    return (d + 1) / 2;
}

Complex root_of_unity(long d, long k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k, d)) / static_cast<double>(d);
    return Complex(std::cos(angle), std::sin(angle));
}

OperatorMatrix shift_op(long d) {
    check_odd_dim(d);
    CMatrix x = CMatrix::Zero(d, d);
    for (long j = 0; j < d; ++j) x(mod(j + 1, d), j) = 1.0;
    return {std::move(x), OperatorKind::Shift};
}

OperatorMatrix clock_op(long d) {
    check_odd_dim(d);
    CMatrix z = CMatrix::Zero(d, d);
    for (long j = 0; j < d; ++j) z(j, j) = root_of_unity(d, j);
    return {std::move(z), OperatorKind::Clock};
}

OperatorMatrix pauli_op(long d, PauliLabel a) {
    check_odd_dim(d);
    const long a1 = mod(a.a1, d);
    const long a2 = mod(a.a2, d);
    // (Z^{a1} X^{a2})_{jk} = w^{a1 j} [j == k + a2], times the phase prefactor.
    const Complex prefactor = root_of_unity(d, -inv2(d) * a1 * a2 % d);
    CMatrix t = CMatrix::Zero(d, d);
    for (long k = 0; k < d; ++k) {
        const long j = mod(k + a2, d);
        t(j, k) = prefactor * root_of_unity(d, a1 * j % d);
    }
    return {std::move(t), OperatorKind::Pauli};
}

OperatorMatrix phase_point_op(long d, PhasePoint u) {
    check_odd_dim(d);
    const long p = mod(u.p, d);
    const long q = mod(u.q, d);
    // A(0,0) = d^{-1} sum_a T_a is the parity matrix [j + k == 0 mod d];
    // conjugating by the monomial matrix T_{p,q} shifts the antidiagonal and
    // attaches phases: A(p,q)_{jk} = w^{p(j-k)} [j + k == 2q mod d].
    CMatrix a = CMatrix::Zero(d, d);
    for (long j = 0; j < d; ++j) {
        const long k = mod(2 * q - j, d);
        a(j, k) = root_of_unity(d, p * (j - k) % d);
    }
    return {std::move(a), OperatorKind::PhasePoint};
}

OperatorMatrix phase_point_op_multi(const QuditDim& dims, const std::vector<PhasePoint>& pts) {
    dims.require_odd("phase_point_op_multi");
    if (pts.size() != dims.qudits())
        throw std::invalid_argument("phase_point_op_multi: need exactly one phase point per qudit");
    CMatrix acc = CMatrix::Ones(1, 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const CMatrix factor = phase_point_op(dims.dims()[i], pts[i]).entries;
        CMatrix next(acc.rows() * factor.rows(), acc.cols() * factor.cols());
        for (long r = 0; r < acc.rows(); ++r)
            for (long c = 0; c < acc.cols(); ++c)
                next.block(r * factor.rows(), c * factor.cols(), factor.rows(), factor.cols()) =
                    acc(r, c) * factor;
        acc = std::move(next);
    }
    return {std::move(acc), OperatorKind::PhasePoint};
}

double AlgebraReport::max_residual() const {
    return std::max(std::max(hermiticity, spectrum), std::max(trace, orthogonality));
}

AlgebraReport verify_algebra(long d, long cap) {
    check_odd_dim(d);
    if (d > cap)
        throw std::invalid_argument("verify_algebra: d = " + std::to_string(d) +
                                    " exceeds cap " + std::to_string(cap));
    AlgebraReport report;
    report.d = d;

    const long n_ops = d * d;
    // Rows of `vecs` are the flattened operators; the Gram matrix of trace
    // inner products is then vecs * vecs^dag because each A is Hermitian.
    CMatrix vecs(n_ops, n_ops);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver;
    for (long p = 0; p < d; ++p) {
        for (long q = 0; q < d; ++q) {
            const CMatrix a = phase_point_op(d, {p, q}).entries;
            report.hermiticity = std::max(report.hermiticity,
                                          (a - a.adjoint()).cwiseAbs().maxCoeff());
            report.trace = std::max(report.trace, std::abs(a.trace() - Complex(1.0)));
            solver.compute(a, Eigen::EigenvaluesOnly);
            const RVector ev = solver.eigenvalues();  // ascending
            double spec = 0.0;
            for (long i = 0; i < d; ++i) {
                const double target = i < (d - 1) / 2 ? -1.0 : 1.0;
                spec = std::max(spec, std::abs(ev(i) - target));
            }
            report.spectrum = std::max(report.spectrum, spec);
            vecs.row(p * d + q) = Eigen::Map<const CVector>(a.data(), n_ops).transpose();
        }
    }
    const CMatrix gram = vecs * vecs.adjoint();
    const CMatrix target = Complex(static_cast<double>(d)) * CMatrix::Identity(n_ops, n_ops);
    report.orthogonality = (gram - target).cwiseAbs().maxCoeff();
    return report;
}

}  // namespace manakit
