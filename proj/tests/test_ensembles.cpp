#include <doctest.h>

#include <cmath>
#include <sstream>

#include "manakit/ensembles.hpp"
#include "manakit/stats.hpp"
#include "manakit/wigner.hpp"
#include "support/oracles.hpp"

using namespace manakit;

TEST_SUITE_BEGIN("ensembles");

TEST_CASE("streams are deterministic, distinct streams differ") {
    const SeededStream s{123456789ULL, 42};
    const PureState a = sample_haar_pure(7, s);
    const PureState b = sample_haar_pure(7, s);
    CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() == 0.0);

    const PureState c = sample_haar_pure(7, s.at(43));
    CHECK((a.amps - c.amps).cwiseAbs().maxCoeff() > 1e-3);

    const auto r1 = sample_reduced(3, 2, s);
    const auto r2 = sample_reduced(3, 2, s);
    CHECK((r1.rho - r2.rho).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Haar component statistics at D = 5") {
    const long n = 100000;
    RunningStats stats;
    for (long i = 0; i < n; ++i) {
        const PureState psi = sample_haar_pure(5, SeededStream{1, static_cast<std::uint64_t>(i)});
        stats.add(std::norm(psi.amps(0)));
    }
    CHECK(std::abs(stats.mean() - 0.2) < 4.0 * stats.stderr_mean());
}

TEST_CASE("Haar weight of a fixed 3-dimensional subspace at D = 9") {
    const long n = 10000;
    RunningStats stats;
    for (long i = 0; i < n; ++i) {
        const PureState psi = sample_haar_pure(9, SeededStream{2, static_cast<std::uint64_t>(i)});
        stats.add(std::norm(psi.amps(0)) + std::norm(psi.amps(4)) + std::norm(psi.amps(7)));
    }
    CHECK(std::abs(stats.mean() - 1.0 / 3.0) < 4.0 * stats.stderr_mean());
}

TEST_CASE("alpha_for_deficit closed form") {
    CHECK(alpha_for_deficit(9, std::log(9.0)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(alpha_for_deficit(9, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    // D = 3, purity 1/2 -> alpha = 1/2, checked against a direct purity computation.
    const double alpha = alpha_for_deficit(3, std::log(2.0));
    CHECK(alpha == doctest::Approx(0.5).epsilon(1e-12));
    const PureState psi = sample_haar_pure(3, SeededStream{9, 0});
    const CMatrix rho = (1.0 - alpha) / 3.0 * CMatrix::Identity(3, 3) +
                        alpha * (psi.amps * psi.amps.adjoint());
    CHECK(rho.squaredNorm() == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(alpha_for_deficit(3, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(alpha_for_deficit(3, std::log(4.0)), std::invalid_argument);
}

TEST_CASE("simple mixtures hit the target deficit exactly") {
    SUBCASE("limits") {
        const auto flat = sample_simple_mixture(5, 0.0, SeededStream{4, 0});
        CHECK((flat.rho - CMatrix::Identity(5, 5) / 5.0).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(std::abs(mana(wigner_rho(flat))) < 1e-12);

        const auto pure = sample_simple_mixture(5, std::log(5.0), SeededStream{4, 1});
        CHECK(renyi2(pure) == doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("interior targets, including Tr rho^2 = e/11 at Delta = 1") {
        const auto dm = sample_simple_mixture(11, 1.0, SeededStream{4, 2});
        CHECK(dm.rho.squaredNorm() ==
              doctest::Approx(std::exp(1.0) / 11.0).epsilon(1e-12));
        for (double target : {0.3, 0.8, 1.9}) {
            const auto sample = sample_simple_mixture(11, target, SeededStream{4, 3});
            CHECK(std::abs(entropy_deficit(sample) - target) < 1e-10);
        }
    }
    CHECK_THROWS_AS(sample_simple_mixture(5, 2.0, SeededStream{4, 4}), std::invalid_argument);
}

TEST_CASE("average mixtures") {
    const auto one = sample_average_mixture(7, 1, SeededStream{5, 0});
    CHECK(renyi2(one) == doctest::Approx(0.0).epsilon(1e-10));

    // Purity of an N-state mixture concentrates on 1/D + (1 - 1/D)/N.
    const auto big = sample_average_mixture(11, 1000, SeededStream{5, 1});
    const double expected = 1.0 / 11.0 + (1.0 - 1.0 / 11.0) / 1000.0;
    CHECK(std::abs(big.rho.squaredNorm() - expected) / expected < 0.10);

    const auto a = sample_average_mixture(3, 2, SeededStream{5, 2});
    const auto b = sample_average_mixture(3, 2, SeededStream{5, 2});
    CHECK((a.rho - b.rho).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(sample_average_mixture(3, 0, SeededStream{5, 3}), std::invalid_argument);
}

TEST_CASE("reduced density matrices") {
    const auto pure = sample_reduced(5, 1, SeededStream{6, 0});
    CHECK(renyi2(pure) == doctest::Approx(0.0).epsilon(1e-10));

    SUBCASE("average purity matches (d_A + d_B)/(d_A d_B + 1)") {
        struct Case { long d_a, d_b; double expected; };
        for (const Case c : {Case{3, 3, 6.0 / 10.0}, Case{5, 13, 18.0 / 66.0}}) {
            RunningStats stats;
            for (long i = 0; i < 10000; ++i) {
                const auto dm = sample_reduced(c.d_a, c.d_b,
                                               SeededStream{7, static_cast<std::uint64_t>(i)});
                stats.add(dm.rho.squaredNorm());
            }
            CAPTURE(c.d_a);
            CAPTURE(c.d_b);
            CHECK(std::abs(stats.mean() - c.expected) < 4.0 * stats.stderr_mean());
        }
    }

    CHECK_THROWS_AS(sample_reduced(4, 2, SeededStream{6, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_reduced(3, 0, SeededStream{6, 2}), std::invalid_argument);
}

TEST_CASE("sampler outputs satisfy the full density-matrix contract") {
    // Spot-check that the fast internal path produces matrices the checked
    // constructor accepts (Hermitian, unit trace, PSD within tolerance).
    for (int i = 0; i < 20; ++i) {
        const auto s = SeededStream{8, static_cast<std::uint64_t>(i)};
        CHECK_NOTHROW(DensityMatrix::make(sample_reduced(5, 3, s).rho, QuditDim::single(5)));
        CHECK_NOTHROW(DensityMatrix::make(sample_average_mixture(5, 4, s).rho, QuditDim::single(5)));
        CHECK_NOTHROW(
            DensityMatrix::make(sample_simple_mixture(5, 0.7, s).rho, QuditDim::single(5)));
    }
}

TEST_CASE("mana distribution is invariant under a fixed unitary") {
    const long d = 5;
    const int n = 2000;
    const CMatrix u = random_unitary(d, SeededStream{1001, 0});
    const EnsembleSpec specs[] = {EnsembleSpec::simple(d, 1.0), EnsembleSpec::average(d, 3),
                                  EnsembleSpec::reduced(d, 5)};
    for (const auto& spec : specs) {
        std::vector<double> plain, conjugated;
        plain.reserve(n);
        conjugated.reserve(n);
        for (int i = 0; i < n; ++i) {
            const auto dm = sample(spec, SeededStream{1002, static_cast<std::uint64_t>(i)});
            plain.push_back(mana(wigner_fft(dm)));
            const auto dm2 = sample(spec, SeededStream{1003, static_cast<std::uint64_t>(i)});
            const CMatrix rotated = u * dm2.rho * u.adjoint();
            const auto dm_rot = DensityMatrix::make_unchecked(
                (rotated + rotated.adjoint()) / 2.0, QuditDim::single(d));
            conjugated.push_back(mana(wigner_fft(dm_rot)));
        }
        const double ks = oracles::ks_statistic(plain, conjugated);
        CHECK(ks < oracles::ks_threshold(plain.size(), conjugated.size()));
    }
}

TEST_CASE("random unitaries are unitary") {
    const CMatrix u = random_unitary(6, SeededStream{77, 0});
    CHECK((u * u.adjoint() - CMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("batch CSV schema") {
    std::vector<SampleRecord> records;
    records.push_back({0, 3, 2.0, 0.5, 0.6, 1.25, 0.22});
    std::ostringstream os;
    write_sample_csv(records, os);
    CHECK(os.str().rfind("sample_index,d_a,d_b_or_knob,s2,delta,wigner_norm,mana\n", 0) == 0);
    CHECK(os.str().find("0,3,2,0.5,0.59999999999999998,1.25,0.22") != std::string::npos);
}

TEST_SUITE_END();
