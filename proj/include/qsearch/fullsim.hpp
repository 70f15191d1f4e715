#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qsearch/effective.hpp"
#include "qsearch/search_spec.hpp"

namespace qsearch {

inline constexpr int kMaxFullQubits = 14;
inline constexpr int kPi3MaxDepthFull = 5;

/// Brute-force statevector over all 2^n basis states.
/// Qubit 0 is the most significant bit of the basis index.
struct FullState {
    std::vector<Complex> amp;
    int n = 0;

    double norm_sq() const;
};

struct SchmidtReport {
    std::uint32_t part_mask;                     // bit q set <=> qubit q in P
    std::vector<double> singular_values_squared; // descending
    int rank;                                    // values above threshold
};

struct EffectiveProjection {
    EffectiveState projected;  // components along |X0>, |X1>
    double residual;           // squared norm outside the span
};

FullState init_uniform(int n);

/// Multiplies solution amplitudes by e^{i phase}. phase=pi is the Grover
/// oracle, phase=pi/3 the fixed-point one.
FullState apply_oracle(const FullState& state, const std::vector<std::uint64_t>& solutions,
                       double phase);

/// -(Id - (1 - e^{i phase})|psi0><psi0|), applied via the mean amplitude.
FullState apply_diffusion(const FullState& state, double phase);

FullState grover_full(const SearchSpec& spec, int k);

FullState pi3_full(const SearchSpec& spec, int m);

/// Full state with amplitude c0/sqrt(N-M) on non-solutions, c1/sqrt(M) on
/// solutions (the span{|X0>,|X1>} embedding).
FullState embed_effective(const SearchSpec& spec, const EffectiveState& state);

EffectiveProjection project_effective(const SearchSpec& spec, const FullState& state);

/// Squared singular values of the state reshaped across P : complement.
SchmidtReport schmidt_spectrum(const FullState& state, std::uint32_t part_mask,
                               double tol = 1e-10);

/// Max Schmidt rank over bipartitions. With symmetric=true only the
/// floor(n/2) leading-qubit bipartitions are enumerated.
int schmidt_rank_max(const FullState& state, double tol = 1e-10, bool symmetric = false);

/// Largest squared Schmidt coefficient over bipartitions (symmetric states:
/// sizes 1..floor(n/2); otherwise all 2^{n-1}-1 splits).
double max_schmidt_sq(const FullState& state, bool symmetric);

FullState swap_qubits(const FullState& state, int q1, int q2);

struct PauliClosureReport {
    bool is_in_pauli_group;
    int nonzero_pauli_terms;
};

/// Conjugates sigma_z x Id^(n-1) by the Grover diffusion operator and
/// expands the result in the n-qubit Pauli basis.
PauliClosureReport pauli_closure_check(int n);

/// Same expansion with the identity in place of the diffusion operator
/// (sanity baseline: exactly one term must survive).
PauliClosureReport pauli_closure_baseline(int n);

}  // namespace qsearch
