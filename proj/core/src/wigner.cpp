#include "manakit/wigner.hpp"

#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <fftw3.h>

#include <Eigen/Eigenvalues>

#include "manakit/csv.hpp"

namespace manakit {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigFloor = -1e-10;

long mod(long x, long d) {
    long r = x % d;
    return r < 0 ? r + d : r;
}

// Forward DFTs of length n, executed one row at a time on caller buffers.
// Plans are created once per length under a lock (FFTW planning is not
// thread-safe); execution on distinct buffers is.
class DftPlan {
public:
    static DftPlan& for_length(long n) {
        static std::mutex mutex;
        static std::unordered_map<long, DftPlan*> cache;
        std::scoped_lock lock(mutex);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, new DftPlan(n)).first;
        return *it->second;
    }

    void execute(Complex* in, Complex* out) const {
        fftw_execute_dft(plan_, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }

private:
    explicit DftPlan(long n) {
        std::vector<Complex> scratch_in(static_cast<std::size_t>(n));
        std::vector<Complex> scratch_out(static_cast<std::size_t>(n));
        plan_ = fftw_plan_dft_1d(static_cast<int>(n),
                                 reinterpret_cast<fftw_complex*>(scratch_in.data()),
                                 reinterpret_cast<fftw_complex*>(scratch_out.data()),
                                 FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_plan plan_;
};

// Autocorrelation row f_q(x) shared by the pure and mixed transforms.
template <class Source>
void fill_row(const Source& src, long d, long half, long q, Complex* row) {
    for (long x = 0; x < d; ++x) {
        const long t = mod(half * x, d);
        row[x] = src(mod(q + t, d), mod(q - t, d));
    }
}

template <class Source>
WignerFunction transform(const Source& src, const QuditDim& dims, double s2, WignerPath path) {
    dims.require_odd("wigner transform");
    const long d = dims.total();
    const long half = inv2(d);
    WignerFunction w{RMatrix(d, d), dims, s2};

    std::vector<Complex> row(static_cast<std::size_t>(d));
    if (path == WignerPath::Fft) {
        const DftPlan& plan = DftPlan::for_length(d);
        std::vector<Complex> out(static_cast<std::size_t>(d));
        for (long q = 0; q < d; ++q) {
            fill_row(src, d, half, q, row.data());
            plan.execute(row.data(), out.data());
            for (long p = 0; p < d; ++p)
                w.values(p, q) = out[static_cast<std::size_t>(p)].real() / static_cast<double>(d);
        }
        return w;
    }

    // Direct evaluation of W(p,q) = d^{-1} sum_x w^{-px} f_q(x).
    std::vector<Complex> roots(static_cast<std::size_t>(d));
    for (long k = 0; k < d; ++k) roots[static_cast<std::size_t>(k)] = root_of_unity(d, -k);
    for (long q = 0; q < d; ++q) {
        fill_row(src, d, half, q, row.data());
        for (long p = 0; p < d; ++p) {
            Complex acc = 0.0;
            for (long x = 0; x < d; ++x)
                acc += roots[static_cast<std::size_t>(p * x % d)] * row[static_cast<std::size_t>(x)];
            w.values(p, q) = acc.real() / static_cast<double>(d);
        }
    }
    return w;
}

WignerFunction transform_trace(const CMatrix& rho, const QuditDim& dims, double s2) {
    dims.require_odd("wigner transform");
    const long d = dims.total();
    WignerFunction w{RMatrix(d, d), dims, s2};
    for (long p = 0; p < d; ++p)
        for (long q = 0; q < d; ++q) {
            const CMatrix a = phase_point_op(d, {p, q}).entries;
            // Tr[rho A] = sum_{jk} rho_{jk} A_{kj}
            w.values(p, q) =
                rho.transpose().cwiseProduct(a).sum().real() / static_cast<double>(d);
        }
    return w;
}

}  // namespace

PureState PureState::make(CVector amps, QuditDim dims) {
    if (amps.size() != dims.total())
        throw std::invalid_argument("PureState: amplitude count does not match dimension");
    if (std::abs(amps.squaredNorm() - 1.0) > kNormTol)
        throw std::invalid_argument("PureState: state is not normalized");
    return {std::move(amps), std::move(dims)};
}

DensityMatrix DensityMatrix::make(CMatrix rho, QuditDim dims) {
    DensityMatrix dm = make_unchecked(std::move(rho), std::move(dims));
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(dm.rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < kEigFloor)
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    return dm;
}

DensityMatrix DensityMatrix::make_unchecked(CMatrix rho, QuditDim dims) {
    if (rho.rows() != dims.total() || rho.cols() != dims.total())
        throw std::invalid_argument("DensityMatrix: shape does not match dimension");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    return {std::move(rho), std::move(dims)};
}

WignerFunction wigner_pure(const PureState& state, WignerPath path) {
    if (std::abs(state.amps.squaredNorm() - 1.0) > kNormTol)
        throw std::invalid_argument("wigner_pure: state is not normalized");
    if (path == WignerPath::MatrixTrace) {
        const CMatrix rho = state.amps * state.amps.adjoint();
        return transform_trace(rho, state.dims, 0.0);
    }
    const auto& psi = state.amps;
    return transform([&psi](long j, long k) { return psi(j) * std::conj(psi(k)); },
                     state.dims, 0.0, path);
}

WignerFunction wigner_rho(const DensityMatrix& dm, WignerPath path) {
    const double s2 = renyi2(dm);
    if (path == WignerPath::MatrixTrace) return transform_trace(dm.rho, dm.dims, s2);
    const auto& rho = dm.rho;
    return transform([&rho](long j, long k) { return rho(j, k); }, dm.dims, s2, path);
}

WignerFunction wigner_fft(const PureState& state) { return wigner_pure(state, WignerPath::Fft); }

WignerFunction wigner_fft(const DensityMatrix& rho) { return wigner_rho(rho, WignerPath::Fft); }

double wigner_norm(const WignerFunction& w) { return w.values.cwiseAbs().sum(); }

double mana(const WignerFunction& w) { return std::log(wigner_norm(w)); }

double renyi2(const DensityMatrix& dm) {
    const double purity = dm.rho.squaredNorm();  // Tr rho^2 for Hermitian rho
    return -std::log(purity);
}

double entropy_deficit(const DensityMatrix& dm) {
    return std::log(static_cast<double>(dm.dims.total())) - renyi2(dm);
}

double entropy_deficit(const WignerFunction& w) {
    return std::log(static_cast<double>(w.dims.total())) - w.s2;
}

WignerResiduals constraint_residuals(const WignerFunction& w) {
    const double d = static_cast<double>(w.dims.total());
    WignerResiduals r;
    r.sum_one = std::abs(w.values.sum() - 1.0);
    r.sum_sq = std::abs(w.values.squaredNorm() - std::exp(-w.s2) / d);
    return r;
}

void write_csv(const WignerFunction& w, std::ostream& os) {
    os << "p,q,w\n";
    for (long p = 0; p < w.values.rows(); ++p)
        for (long q = 0; q < w.values.cols(); ++q)
            os << p << ',' << q << ',' << csv_double(w.values(p, q)) << '\n';
}

}  // namespace manakit
