#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "manakit/ensembles.hpp"
#include "manakit/wigner.hpp"
#include "support/oracles.hpp"

using namespace manakit;

namespace {

PureState basis_state(long d, long j) {
    CVector v = CVector::Zero(d);
    v(j) = 1.0;
    return PureState::make(v, QuditDim::single(d));
}

}  // namespace

TEST_SUITE_BEGIN("wigner");

TEST_CASE("basis state at d = 3 concentrates on its q column") {
    const WignerFunction w = wigner_pure(basis_state(3, 0));
    for (long p = 0; p < 3; ++p)
        for (long q = 0; q < 3; ++q) {
            const double expected = q == 0 ? 1.0 / 3.0 : 0.0;
            CHECK(std::abs(w.values(p, q) - expected) < 1e-14);
        }
    CHECK(wigner_norm(w) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(mana(w)) < 1e-12);
}

TEST_CASE("(|1> - |2>)/sqrt(2) at d = 3 has Wigner norm 5/3") {
    CVector v = CVector::Zero(3);
    v(1) = 1.0 / std::sqrt(2.0);
    v(2) = -1.0 / std::sqrt(2.0);
    const PureState psi = PureState::make(v, QuditDim::single(3));

    // Brute-force oracle: expectation values of the phase-point operators.
    const WignerFunction trace = wigner_pure(psi, WignerPath::MatrixTrace);
    CHECK(wigner_norm(trace) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));

    for (WignerPath path : {WignerPath::Direct, WignerPath::Fft}) {
        const WignerFunction w = wigner_pure(psi, path);
        CHECK((w.values - trace.values).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(wigner_norm(w) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
        CHECK(mana(w) == doctest::Approx(std::log(5.0 / 3.0)).epsilon(1e-12));
    }
}

TEST_CASE("constraints hold for Haar states at d = 5") {
    for (int rep = 0; rep < 20; ++rep) {
        const PureState psi = sample_haar_pure(5, SeededStream{11, static_cast<std::uint64_t>(rep)});
        const WignerFunction w = wigner_pure(psi);
        CHECK(std::abs(w.values.sum() - 1.0) < 1e-10);
        CHECK(std::abs(w.values.squaredNorm() - 1.0 / 5.0) < 1e-10);
        // Tighter pointwise consequence of the purity constraint.
        CHECK(w.values.cwiseAbs().maxCoeff() <= std::sqrt(1.0 / 5.0) + 1e-12);
    }
}

TEST_CASE("maximally mixed state is flat with zero mana") {
    const auto dm = DensityMatrix::make(CMatrix::Identity(3, 3) / 3.0, QuditDim::single(3));
    const WignerFunction w = wigner_rho(dm);
    for (long p = 0; p < 3; ++p)
        for (long q = 0; q < 3; ++q) CHECK(w.values(p, q) == doctest::Approx(1.0 / 9.0));
    CHECK(std::abs(mana(w)) < 1e-12);
    CHECK(w.s2 == doctest::Approx(std::log(3.0)));
}

TEST_CASE("rank-1 density matrix agrees with the pure transform") {
    const PureState psi = sample_haar_pure(5, SeededStream{23, 0});
    const auto dm = DensityMatrix::make(psi.amps * psi.amps.adjoint(), QuditDim::single(5));
    const WignerFunction wp = wigner_pure(psi);
    const WignerFunction wr = wigner_rho(dm);
    CHECK((wp.values - wr.values).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(wr.s2) < 1e-10);
}

TEST_CASE("reduced state of a 3x3 Haar state stays normalized") {
    const auto dm = sample_reduced(3, 3, SeededStream{5, 9});
    const WignerFunction w = wigner_rho(dm);
    CHECK(std::abs(w.values.sum() - 1.0) < 1e-10);
    const WignerResiduals res = constraint_residuals(w);
    CHECK(res.sum_one < 1e-10);
    CHECK(res.sum_sq < 1e-10);
}

TEST_CASE("FFT path is exact at d = 27") {
    const PureState psi = sample_haar_pure(27, SeededStream{7, 1});
    const WignerFunction direct = wigner_pure(psi, WignerPath::Direct);
    const WignerFunction fft = wigner_fft(psi);
    CHECK((direct.values - fft.values).cwiseAbs().maxCoeff() < 1e-10);

    const WignerFunction basis = wigner_fft(basis_state(3, 0));
    CHECK(basis.values(1, 0) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("path equivalence across dimensions") {
    // Matrix-trace, direct, and FFT paths agree pointwise on random pure and
    // mixed states.
    std::uint64_t stream = 0;
    for (long d : {3L, 5L, 7L, 9L, 15L, 27L}) {
        const int reps = d <= 9 ? 200 : 50;
        double residual = 0.0;
        for (int rep = 0; rep < reps; ++rep) {
            const PureState psi = sample_haar_pure(d, SeededStream{31, stream++});
            const DensityMatrix dm = sample_reduced(d, 4, SeededStream{31, stream++});
            const WignerFunction p_direct = wigner_pure(psi, WignerPath::Direct);
            const WignerFunction p_trace = wigner_pure(psi, WignerPath::MatrixTrace);
            const WignerFunction p_fft = wigner_fft(psi);
            residual = std::max(residual, (p_direct.values - p_trace.values).cwiseAbs().maxCoeff());
            residual = std::max(residual, (p_direct.values - p_fft.values).cwiseAbs().maxCoeff());
            const WignerFunction r_direct = wigner_rho(dm, WignerPath::Direct);
            const WignerFunction r_trace = wigner_rho(dm, WignerPath::MatrixTrace);
            const WignerFunction r_fft = wigner_fft(dm);
            residual = std::max(residual, (r_direct.values - r_trace.values).cwiseAbs().maxCoeff());
            residual = std::max(residual, (r_direct.values - r_fft.values).cwiseAbs().maxCoeff());
        }
        CAPTURE(d);
        CHECK(residual < 1e-9);
    }
}

TEST_CASE("multi-qudit registers flatten to a single register") {
    const PureState flat = sample_haar_pure(9, SeededStream{97, 0});
    const PureState pair = PureState::make(flat.amps, QuditDim::multi({3, 3}));
    const WignerFunction w_flat = wigner_pure(flat);
    const WignerFunction w_pair = wigner_pure(pair);
    CHECK((w_flat.values - w_pair.values).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(w_pair.dims.qudits() == 2);
}

TEST_CASE("stabilizer images of basis states have zero mana") {
    const long d = 5;
    for (long j = 0; j < d; ++j) {
        const PureState e = basis_state(d, j);
        for (long a1 = 0; a1 < d; ++a1)
            for (long a2 = 0; a2 < d; ++a2) {
                const CVector v = pauli_op(d, {a1, a2}).entries * e.amps;
                const PureState t = PureState::make(v, QuditDim::single(d));
                CHECK(std::abs(mana(wigner_pure(t))) < 1e-10);
            }
    }
}

TEST_CASE("Jensen bound holds on sampled states") {
    std::uint64_t stream = 0;
    for (long d : {3L, 9L}) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto dm = sample_reduced(d, 1 + rep % 6, SeededStream{47, stream++});
            const WignerFunction w = wigner_rho(dm);
            CHECK(mana(w) <= 0.5 * (std::log(static_cast<double>(d)) - w.s2) + 1e-10);
        }
    }
}

TEST_CASE("fixed phase-space points are identically distributed") {
    // Two-sample KS on W(0,0) versus W(1,3) over Haar samples at d = 5.
    const long d = 5;
    const int n = 10000;
    std::vector<double> at00, at13;
    at00.reserve(n);
    at13.reserve(n);
    for (int i = 0; i < n; ++i) {
        const WignerFunction w =
            wigner_fft(sample_haar_pure(d, SeededStream{61, static_cast<std::uint64_t>(i)}));
        at00.push_back(w.values(0, 0));
        at13.push_back(w.values(1, 3));
    }
    const double ks = oracles::ks_statistic(at00, at13);
    CHECK(ks < oracles::ks_threshold(at00.size(), at13.size()));
}

TEST_CASE("Renyi entropy and deficit") {
    const auto mixed = DensityMatrix::make(CMatrix::Identity(5, 5) / 5.0, QuditDim::single(5));
    CHECK(renyi2(mixed) == doctest::Approx(std::log(5.0)).epsilon(1e-12));
    CHECK(std::abs(entropy_deficit(mixed)) < 1e-12);

    const PureState psi = sample_haar_pure(5, SeededStream{3, 3});
    const auto pure_dm = DensityMatrix::make(psi.amps * psi.amps.adjoint(), QuditDim::single(5));
    CHECK(std::abs(renyi2(pure_dm)) < 1e-10);

    CMatrix half = CMatrix::Zero(3, 3);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5;
    const auto dm = DensityMatrix::make(half, QuditDim::single(3));
    CHECK(renyi2(dm) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(entropy_deficit(dm) == doctest::Approx(std::log(1.5)).epsilon(1e-12));
}

TEST_CASE("input validation") {
    CVector bad = CVector::Ones(3);
    CHECK_THROWS_AS(PureState::make(bad, QuditDim::single(3)), std::invalid_argument);

    CVector even = CVector::Zero(4);
    even(0) = 1.0;
    const PureState psi4 = PureState::make(even, QuditDim::single(4));
    CHECK_THROWS_AS(wigner_pure(psi4), std::invalid_argument);

    CMatrix nonherm = CMatrix::Zero(3, 3);
    nonherm(0, 1) = 1.0;
    nonherm(0, 0) = 1.0;
    CHECK_THROWS_AS(DensityMatrix::make(nonherm, QuditDim::single(3)), std::invalid_argument);

    CHECK_THROWS_AS(DensityMatrix::make(CMatrix::Identity(3, 3), QuditDim::single(3)),
                    std::invalid_argument);  // trace 3

    CMatrix negative = CMatrix::Zero(3, 3);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix::make(negative, QuditDim::single(3)), std::invalid_argument);
}

TEST_CASE("CSV serialization") {
    const WignerFunction w = wigner_pure(basis_state(3, 0));
    std::ostringstream os;
    write_csv(w, os);
    const std::string text = os.str();
    CHECK(text.rfind("p,q,w\n", 0) == 0);
    CHECK(text.find("0,0,0.33333333333333331\n") != std::string::npos);
    // 9 points plus header.
    CHECK(std::count(text.begin(), text.end(), '\n') == 10);
}

TEST_SUITE_END();
