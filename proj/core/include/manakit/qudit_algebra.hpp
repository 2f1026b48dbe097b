#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace manakit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Local dimensions of a qudit register. Phase-space constructions require
// every factor odd and >= 3; intermediate bipartite states (system x ancilla)
// may carry even factors, so oddness is enforced by the consumers that need
// it rather than here.
class QuditDim {
public:
    static QuditDim single(long d);
    static QuditDim multi(std::vector<long> dims);

    const std::vector<long>& dims() const { return dims_; }
    long total() const { return total_; }
    std::size_t qudits() const { return dims_.size(); }
    bool all_odd() const;
    // Throws std::invalid_argument naming `what` unless every factor is odd >= 3.
    void require_odd(const char* what) const;

private:
    explicit QuditDim(std::vector<long> dims);
    std::vector<long> dims_;
    long total_ = 0;
};

// Exponents (a1, a2) of a generalized Pauli T_{a1,a2}, each reduced mod d.
struct PauliLabel {
    long a1 = 0;
    long a2 = 0;
};

// A single-qudit phase-space point (p, q), each coordinate mod d.
struct PhasePoint {
    long p = 0;
    long q = 0;
};

enum class OperatorKind { Shift, Clock, Pauli, PhasePoint };

struct OperatorMatrix {
    CMatrix entries;
    OperatorKind kind = OperatorKind::Pauli;
};

// (d+1)/2, the inverse of 2 in Z_d for odd d.
long inv2(long d);

// e^{2 pi i k / d}
Complex root_of_unity(long d, long k);

// X|j> = |j+1 mod d>
OperatorMatrix shift_op(long d);
// Z|j> = w^j |j>
OperatorMatrix clock_op(long d);
// T_{a1,a2} = w^{-inv2(d) a1 a2} Z^{a1} X^{a2}
OperatorMatrix pauli_op(long d, PauliLabel a);
// A(p,q) = T_{p,q} A(0,0) T_{p,q}^dag with A(0,0) = d^{-1} sum_a T_a (the
// parity operator). Spectrum is +1 with multiplicity (d+1)/2 and -1 with
// multiplicity (d-1)/2; Tr A = 1; Tr[A A'] = d delta.
OperatorMatrix phase_point_op(long d, PhasePoint u);
// Tensor product of per-qudit phase-space point operators, one point per factor.
OperatorMatrix phase_point_op_multi(const QuditDim& dims, const std::vector<PhasePoint>& pts);

// Residuals of the operator-algebra self-check at dimension d.
struct AlgebraReport {
    long d = 0;
    double hermiticity = 0.0;   // max |A - A^dag|
    double spectrum = 0.0;      // max deviation of sorted eigenvalues from (+/-)1
    double trace = 0.0;         // max |Tr A - 1|
    double orthogonality = 0.0; // max |Tr[A A'] - d delta|
    double max_residual() const;
};

// Runs the full eigendecomposition check across all d^2 operators.
// Throws when d exceeds `cap` (the check is dense and O(d^6) overall).
AlgebraReport verify_algebra(long d, long cap = 31);

}  // namespace manakit
