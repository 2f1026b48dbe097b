#include "manakit/ensembles.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <Eigen/QR>

#include "manakit/csv.hpp"

namespace manakit {

namespace {

CVector gaussian_vector(long n, std::mt19937_64& engine) {
    std::normal_distribution<double> normal;
    CVector v(n);
    for (long i = 0; i < n; ++i) {
        const double re = normal(engine);
        const double im = normal(engine);
        v(i) = Complex(re, im);
    }
    return v;
}

}  // namespace

std::mt19937_64 SeededStream::engine() const {
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(stream_index), static_cast<std::uint32_t>(stream_index >> 32)};
    return std::mt19937_64(seq);
}

EnsembleSpec EnsembleSpec::simple(long d, double target_delta) {
    EnsembleSpec s;
    s.kind = EnsembleKind::SimpleMixture;
    s.d_a = d;
    s.target_delta = target_delta;
    return s;
}

EnsembleSpec EnsembleSpec::average(long d, long n_states) {
    EnsembleSpec s;
    s.kind = EnsembleKind::AverageMixture;
    s.d_a = d;
    s.n_states = n_states;
    return s;
}

EnsembleSpec EnsembleSpec::reduced(long d_a, long d_b) {
    EnsembleSpec s;
    s.kind = EnsembleKind::Reduced;
    s.d_a = d_a;
    s.d_b = d_b;
    return s;
}

double EnsembleSpec::knob() const {
    switch (kind) {
        case EnsembleKind::SimpleMixture: return target_delta;
        case EnsembleKind::AverageMixture: return static_cast<double>(n_states);
        case EnsembleKind::Reduced: return static_cast<double>(d_b);
    }
    return 0.0;
}

PureState sample_haar_pure(long big_d, const SeededStream& stream) {
    return sample_haar_pure(QuditDim::single(big_d), stream);
}

PureState sample_haar_pure(const QuditDim& dims, const SeededStream& stream) {
    if (dims.total() < 2) throw std::invalid_argument("sample_haar_pure: dimension must be >= 2");
    auto engine = stream.engine();
    CVector v = gaussian_vector(dims.total(), engine);
    v /= v.norm();
    return PureState{std::move(v), dims};
}

double alpha_for_deficit(long big_d, double s2_target) {
    const double d = static_cast<double>(big_d);
    const double purity = std::exp(-s2_target);
    if (purity < 1.0 / d - 1e-12 || purity > 1.0 + 1e-12)
        throw std::invalid_argument("alpha_for_deficit: purity outside [1/D, 1]");
    const double num = std::max(0.0, purity - 1.0 / d);
    return std::sqrt(num / (1.0 - 1.0 / d));
}

DensityMatrix sample_simple_mixture(long big_d, double target_delta, const SeededStream& stream) {
    const double ln_d = std::log(static_cast<double>(big_d));
    if (target_delta < -1e-12 || target_delta > ln_d + 1e-12)
        throw std::invalid_argument("sample_simple_mixture: target deficit outside [0, ln D]");
    const double alpha = alpha_for_deficit(big_d, ln_d - target_delta);
    const PureState psi = sample_haar_pure(big_d, stream);
    CMatrix rho = (1.0 - alpha) / static_cast<double>(big_d) *
                      CMatrix::Identity(big_d, big_d) +
                  alpha * (psi.amps * psi.amps.adjoint());
    return DensityMatrix::make_unchecked(std::move(rho), QuditDim::single(big_d));
}

DensityMatrix sample_average_mixture(long big_d, long n_states, const SeededStream& stream) {
    if (n_states < 1) throw std::invalid_argument("sample_average_mixture: need N >= 1");
    if (big_d < 2) throw std::invalid_argument("sample_average_mixture: dimension must be >= 2");
    auto engine = stream.engine();
    CMatrix rho = CMatrix::Zero(big_d, big_d);
    for (long j = 0; j < n_states; ++j) {
        CVector v = gaussian_vector(big_d, engine);
        v /= v.norm();
        rho.noalias() += v * v.adjoint();
    }
    rho /= static_cast<double>(n_states);
    rho = ((rho + rho.adjoint()) / 2.0).eval();  // scrub roundoff asymmetry
    return DensityMatrix::make_unchecked(std::move(rho), QuditDim::single(big_d));
}

DensityMatrix sample_reduced(long d_a, long d_b, const SeededStream& stream) {
    if (d_a < 3 || d_a % 2 == 0 || d_b < 1)
        throw std::invalid_argument("sample_reduced: need odd d_A >= 3 and d_B >= 1");
    auto engine = stream.engine();
    // psi_{ij} laid out as a d_A x d_B matrix; rho_A = M M^dag after normalization.
    CMatrix m(d_a, d_b);
    std::normal_distribution<double> normal;
    for (long i = 0; i < d_a; ++i)
        for (long j = 0; j < d_b; ++j) {
            const double re = normal(engine);
            const double im = normal(engine);
            m(i, j) = Complex(re, im);
        }
    m /= m.norm();
    CMatrix rho = m * m.adjoint();
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    rho /= rho.trace().real();
    return DensityMatrix::make_unchecked(std::move(rho), QuditDim::single(d_a));
}

DensityMatrix sample(const EnsembleSpec& spec, const SeededStream& stream) {
    switch (spec.kind) {
        case EnsembleKind::SimpleMixture:
            return sample_simple_mixture(spec.d_a, spec.target_delta, stream);
        case EnsembleKind::AverageMixture:
            return sample_average_mixture(spec.d_a, spec.n_states, stream);
        case EnsembleKind::Reduced:
            return sample_reduced(spec.d_a, spec.d_b, stream);
    }
    throw std::invalid_argument("sample: unknown ensemble kind");
}

CMatrix random_unitary(long big_d, const SeededStream& stream) {
    if (big_d < 2) throw std::invalid_argument("random_unitary: dimension must be >= 2");
    auto engine = stream.engine();
    CMatrix g(big_d, big_d);
    std::normal_distribution<double> normal;
    for (long j = 0; j < big_d; ++j)
        for (long i = 0; i < big_d; ++i) {
            const double re = normal(engine);
            const double im = normal(engine);
            g(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is exactly Haar.
    for (long j = 0; j < big_d; ++j) {
        const Complex rjj = r(j, j);
        q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

void write_sample_csv(const std::vector<SampleRecord>& records, std::ostream& os) {
    os << "sample_index,d_a,d_b_or_knob,s2,delta,wigner_norm,mana\n";
    for (const auto& r : records) {
        os << r.sample_index << ',' << r.d_a << ',' << csv_double(r.d_b_or_knob) << ','
           << csv_double(r.s2) << ',' << csv_double(r.delta) << ',' << csv_double(r.wigner_norm)
           << ',' << csv_double(r.mana) << '\n';
    }
}

}  // namespace manakit
