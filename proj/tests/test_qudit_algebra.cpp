#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "manakit/qudit_algebra.hpp"

using namespace manakit;

TEST_SUITE_BEGIN("qudit_algebra");

TEST_CASE("inv2 on small odd dimensions") {
    CHECK(inv2(3) == 2);
    CHECK(inv2(5) == 3);
    CHECK(inv2(9) == 5);
    for (long d = 3; d <= 31; d += 2) CHECK((2 * inv2(d)) % d == 1);
    CHECK_THROWS_AS(inv2(4), std::invalid_argument);
    CHECK_THROWS_AS(inv2(1), std::invalid_argument);
}

TEST_CASE("shift and clock operators") {
    const CMatrix x = shift_op(3).entries;
    CVector e2 = CVector::Zero(3);
    e2(2) = 1.0;
    const CVector shifted = x * e2;
    CHECK(std::abs(shifted(0) - Complex(1.0)) < 1e-15);

    const CMatrix z = clock_op(3).entries;
    CHECK(std::abs(z(0, 0) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(z(1, 1) - root_of_unity(3, 1)) < 1e-15);
    CHECK(std::abs(z(2, 2) - root_of_unity(3, 2)) < 1e-15);

    // Defining relation ZX = w XZ at d = 5.
    const CMatrix x5 = shift_op(5).entries;
    const CMatrix z5 = clock_op(5).entries;
    const CMatrix comm = z5 * x5 - root_of_unity(5, 1) * x5 * z5;
    CHECK(comm.cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(shift_op(6), std::invalid_argument);
    CHECK_THROWS_AS(clock_op(2), std::invalid_argument);
}

TEST_CASE("generalized Pauli operators") {
    CHECK((pauli_op(3, {0, 0}).entries - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((pauli_op(3, {1, 0}).entries - clock_op(3).entries).cwiseAbs().maxCoeff() < 1e-15);

    // T_{1,1} = w^{-inv2} Z X at d = 3, and unitarity across all labels.
    const CMatrix expected =
        root_of_unity(3, -inv2(3)) * (clock_op(3).entries * shift_op(3).entries);
    CHECK((pauli_op(3, {1, 1}).entries - expected).cwiseAbs().maxCoeff() < 1e-14);
    for (long d : {3L, 5L, 9L}) {
        for (long a1 = 0; a1 < d; ++a1)
            for (long a2 = 0; a2 < d; ++a2) {
                const CMatrix t = pauli_op(d, {a1, a2}).entries;
                CHECK((t * t.adjoint() - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
            }
    }
}

TEST_CASE("phase-space point operators at d = 3 and d = 5") {
    const long d = 3;
    std::vector<CMatrix> ops;
    for (long p = 0; p < d; ++p)
        for (long q = 0; q < d; ++q) ops.push_back(phase_point_op(d, {p, q}).entries);

    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = 0; j < ops.size(); ++j) {
            const Complex ip = (ops[i] * ops[j]).trace();
            const double expected = i == j ? 3.0 : 0.0;
            CHECK(std::abs(ip - Complex(expected)) < 1e-12);
        }
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(ops[i], Eigen::EigenvaluesOnly);
        const RVector ev = solver.eigenvalues();
        CHECK(std::abs(ev(0) + 1.0) < 1e-12);
        CHECK(std::abs(ev(1) - 1.0) < 1e-12);
        CHECK(std::abs(ev(2) - 1.0) < 1e-12);
    }

    for (long p = 0; p < 5; ++p)
        for (long q = 0; q < 5; ++q)
            CHECK(std::abs(phase_point_op(5, {p, q}).entries.trace() - Complex(1.0)) < 1e-12);
}

TEST_CASE("multi-qudit phase-space point operators") {
    const QuditDim dims33 = QuditDim::multi({3, 3});
    const CMatrix a = phase_point_op_multi(dims33, {{1, 2}, {0, 1}}).entries;
    REQUIRE(a.rows() == 9);
    CHECK((a - a.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a, Eigen::EigenvaluesOnly);
    const RVector ev = solver.eigenvalues();
    for (long i = 0; i < 4; ++i) CHECK(std::abs(ev(i) + 1.0) < 1e-9);
    for (long i = 4; i < 9; ++i) CHECK(std::abs(ev(i) - 1.0) < 1e-9);

    // Single-factor register reduces to the plain operator.
    const CMatrix single = phase_point_op_multi(QuditDim::single(3), {{2, 1}}).entries;
    CHECK((single - phase_point_op(3, {2, 1}).entries).cwiseAbs().maxCoeff() < 1e-15);

    const CMatrix mixed = phase_point_op_multi(QuditDim::multi({3, 5}), {{1, 1}, {4, 2}}).entries;
    CHECK(std::abs(mixed.trace() - Complex(1.0)) < 1e-12);

    CHECK_THROWS_AS(phase_point_op_multi(dims33, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(phase_point_op_multi(QuditDim::multi({3, 4}), {{0, 0}, {0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("verify_algebra residuals stay below 1e-9") {
    for (long d : {3L, 7L, 15L}) {
        const AlgebraReport report = verify_algebra(d);
        CAPTURE(d);
        CHECK(report.max_residual() < 1e-9);
    }
    CHECK_THROWS_AS(verify_algebra(33, 31), std::invalid_argument);
    CHECK_THROWS_AS(verify_algebra(4), std::invalid_argument);
}

TEST_CASE("spectrum multiset across all d up to 31") {
    // Module invariant: multiplicities (d+1)/2 and (d-1)/2 for every point.
    for (long d = 3; d <= 31; d += 2) {
        const AlgebraReport report = verify_algebra(d);
        CAPTURE(d);
        CHECK(report.spectrum < 1e-9);
        CHECK(report.trace < 1e-12);
        CHECK(report.orthogonality < 1e-9);  // completeness: Gram = d * Identity
    }
}

TEST_CASE("covariance under Pauli conjugation") {
    for (long d : {3L, 5L, 7L, 9L}) {
        const CMatrix a = phase_point_op(d, {1 % d, 2 % d}).entries;
        for (long u1 = 0; u1 < d; ++u1)
            for (long u2 = 0; u2 < d; ++u2) {
                const CMatrix t = pauli_op(d, {u1, u2}).entries;
                const CMatrix moved = t * a * t.adjoint();
                const CMatrix target =
                    phase_point_op(d, {(1 + u1) % d, (2 % d + u2) % d}).entries;
                CHECK((moved - target).cwiseAbs().maxCoeff() < 1e-12);
            }
    }
}

TEST_CASE("QuditDim validation") {
    CHECK(QuditDim::single(3).total() == 3);
    CHECK(QuditDim::multi({3, 5, 7}).total() == 105);
    CHECK(QuditDim::multi({3, 4}).all_odd() == false);
    CHECK_THROWS_AS(QuditDim::single(1), std::invalid_argument);
    CHECK_THROWS_AS(QuditDim::multi({}), std::invalid_argument);
    CHECK_THROWS_AS(QuditDim::multi({4097, 4097}), std::invalid_argument);
}

TEST_SUITE_END();
