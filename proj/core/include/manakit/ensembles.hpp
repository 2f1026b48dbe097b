#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "manakit/wigner.hpp"

namespace manakit {

// Deterministic per-sample RNG stream: identical (master_seed, stream_index)
// reproduces identical samples bit-for-bit on a given build, so batches can
// run serial or parallel with the same output.
struct SeededStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    std::mt19937_64 engine() const;
    SeededStream at(std::uint64_t index) const { return {master_seed, index}; }
};

enum class EnsembleKind { SimpleMixture, AverageMixture, Reduced };

// One of the three unitarily-invariant mixed-state distributions, with its
// control knob: target entropy deficit (simple), number of mixed pure states
// (average), or ancilla dimension (reduced).
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::SimpleMixture;
    long d_a = 3;
    long d_b = 1;              // reduced only
    double target_delta = 0.0; // simple only
    long n_states = 1;         // average only

    static EnsembleSpec simple(long d, double target_delta);
    static EnsembleSpec average(long d, long n_states);
    static EnsembleSpec reduced(long d_a, long d_b);

    double knob() const;
};

// Haar-random normalized pure state on D >= 2 dimensions (normalized vector
// of i.i.d. standard complex Gaussians).
PureState sample_haar_pure(long big_d, const SeededStream& stream);
PureState sample_haar_pure(const QuditDim& dims, const SeededStream& stream);

// alpha such that (1-alpha) I/D + alpha |psi><psi| has Tr rho^2 = e^{-s2}.
double alpha_for_deficit(long big_d, double s2_target);

// rho = (1-alpha) I/D + alpha |psi><psi| hitting the target deficit exactly.
DensityMatrix sample_simple_mixture(long big_d, double target_delta, const SeededStream& stream);

// rho = N^{-1} sum_j |psi_j><psi_j| over i.i.d. Haar pure states.
DensityMatrix sample_average_mixture(long big_d, long n_states, const SeededStream& stream);

// rho_A = Tr_B |psi><psi| for a Haar pure state on d_A x d_B dimensions.
DensityMatrix sample_reduced(long d_a, long d_b, const SeededStream& stream);

DensityMatrix sample(const EnsembleSpec& spec, const SeededStream& stream);

// Haar-random unitary (QR of a complex Ginibre matrix with phase fixing).
CMatrix random_unitary(long big_d, const SeededStream& stream);

// One row of a batch-sampling run.
struct SampleRecord {
    long sample_index = 0;
    long d_a = 0;
    double d_b_or_knob = 0.0;
    double s2 = 0.0;
    double delta = 0.0;
    double wigner_norm = 0.0;
    double mana = 0.0;
};

// CSV with header `sample_index,d_a,d_b_or_knob,s2,delta,wigner_norm,mana`.
void write_sample_csv(const std::vector<SampleRecord>& records, std::ostream& os);

}  // namespace manakit
