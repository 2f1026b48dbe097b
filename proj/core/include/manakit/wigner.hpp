#pragma once

#include <iosfwd>

#include "manakit/qudit_algebra.hpp"

namespace manakit {

// Normalized pure state on a register of total dimension D.
struct PureState {
    CVector amps;
    QuditDim dims;

    // Validates unit norm (1e-12).
    static PureState make(CVector amps, QuditDim dims);
};

// Hermitian, unit-trace, positive-semidefinite matrix on the register.
struct DensityMatrix {
    CMatrix rho;
    QuditDim dims;

    // Validates Hermiticity and trace (1e-12) and the minimum eigenvalue
    // (>= -1e-10, absorbing partial-trace roundoff).
    static DensityMatrix make(CMatrix rho, QuditDim dims);
    // Skips the eigenvalue check; for samplers whose output is
    // positive-semidefinite by construction.
    static DensityMatrix make_unchecked(CMatrix rho, QuditDim dims);
};

// Real phase-space array W(p, q) on D x D points, together with the second
// Renyi entropy of the source state. Multi-qudit registers are flattened to a
// single register of dimension D = prod(dims).
struct WignerFunction {
    RMatrix values;  // row p, column q
    QuditDim dims;
    double s2 = 0.0;  // nats
};

enum class WignerPath {
    MatrixTrace,  // d^{-1} Tr[rho A(p,q)] via qudit_algebra operators, O(D^4)
    Direct,       // definition sum over x, O(D^3)
    Fft,          // per-q length-D DFT, O(D^2 log D)
};

WignerFunction wigner_pure(const PureState& state, WignerPath path = WignerPath::Direct);
WignerFunction wigner_rho(const DensityMatrix& rho, WignerPath path = WignerPath::Direct);
WignerFunction wigner_fft(const PureState& state);
WignerFunction wigner_fft(const DensityMatrix& rho);

// L1 norm sum |W(p,q)| and its logarithm.
double wigner_norm(const WignerFunction& w);
double mana(const WignerFunction& w);

// Second Renyi entropy S2 = -ln Tr rho^2 (nats) and the entropy deficit
// Delta = ln D - S2.
double renyi2(const DensityMatrix& rho);
double entropy_deficit(const DensityMatrix& rho);
double entropy_deficit(const WignerFunction& w);

// Residuals of the two exact constraints: sum W = 1 and sum W^2 = e^{-S2}/D.
struct WignerResiduals {
    double sum_one = 0.0;
    double sum_sq = 0.0;
};
WignerResiduals constraint_residuals(const WignerFunction& w);

// CSV serialization: header `p,q,w`, one row per phase-space point,
// 17-significant-digit floats.
void write_csv(const WignerFunction& w, std::ostream& os);

}  // namespace manakit
