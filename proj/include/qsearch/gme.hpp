#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "qsearch/effective.hpp"
#include "qsearch/fullsim.hpp"
#include "qsearch/search_spec.hpp"

namespace qsearch {

/// Symmetric product ansatz cos(a/2)|0> + e^{ib} sin(a/2)|1>, tensored n times.
struct ProductAnsatz {
    double alpha;  // [0, pi]
    double beta;   // [0, 2pi)
};

struct OverlapMaximum {
    double value;        // max |<psi|phi^n>|^2, achieved at `arg`
    ProductAnsatz arg;
    bool converged;
};

class OptimizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// <psi_k | phi>^(x)n for the symmetric solution placements.
Complex overlap_symmetric(const EffectiveState& state, const SearchSpec& spec,
                          const ProductAnsatz& ansatz);

/// Grid + golden-section maximization of |overlap|^2. For real non-negative
/// states beta stays fixed at 0; complex states get the full 2-parameter search.
OverlapMaximum maximize_overlap(const EffectiveState& state, const SearchSpec& spec,
                                int alpha_grid = 1024, int beta_grid = 256);

/// E_n = 1 - max |overlap|^2 over the symmetric product ansatz.
double E_n_symmetric(const EffectiveState& state, const SearchSpec& spec,
                     int alpha_grid = 1024);

/// Cross-check path for M=1 real states: stationarity condition in
/// t = tan(alpha/2) solved by sign-change bisection.
double E_n_symmetric_poly(const EffectiveState& state, const SearchSpec& spec);

/// Structured description of the reduced density matrix over an m-qubit part.
/// M=1: all entries a, last row/col b, bottom corner c.
/// M=2: interior a, first/last row/col b, corners c, anti-corners d.
struct ReducedDensity {
    int n;
    int M;
    int m;
    double A, B;
    double a, b, c, d;  // d meaningful only for M=2

    double trace() const;
    /// Nonzero part of the spectrum (the rest of the 2^m eigenvalues are 0),
    /// descending. Computed from the rank<=3 span, never densely.
    std::vector<double> spectrum() const;
};

ReducedDensity reduced_density(const EffectiveState& state, const SearchSpec& spec, int m);

/// Closed-form maximal eigenvalue for M=1:
/// 1/2 + 1/2 sqrt(1 - 4(2^m-1)(2^{n-m}-1) A^2 (A-B)^2).
double lambda_max_m1(const EffectiveState& state, const SearchSpec& spec, int m);

/// Closed-form E_2 for a single symmetric solution.
double E2_m1(const EffectiveState& state, const SearchSpec& spec);

/// Closed-form E_2 for the antipodal two-solution instance.
double E2_m2(const EffectiveState& state, const SearchSpec& spec);

struct AsymptoticMeasures {
    double E_n;
    double E_2;
};

/// Large-N limits as functions of theta_k alone (the scale-invariant curves).
AsymptoticMeasures asymptotic_measures(double theta_k, int M);

struct BruteForceOptions {
    int starts = 48;
    int max_sweeps = 500;
    double tol = 1e-13;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

/// E_n by alternating single-qubit maximization over unconstrained product
/// states (multistart, fixed seed). Tractable for n <= 4.
double E_n_bruteforce(const FullState& state, const BruteForceOptions& opts = {});

}  // namespace qsearch
