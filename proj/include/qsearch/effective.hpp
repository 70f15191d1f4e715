#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "qsearch/search_spec.hpp"

namespace qsearch {

using Complex = std::complex<double>;

/// Amplitude pair on the invariant basis {|X0>, |X1>}, where |X0> / |X1>
/// are the uniform superpositions of non-solutions / solutions.
struct EffectiveState {
    Complex c0;  // amplitude on |X0>
    Complex c1;  // amplitude on |X1>

    double norm_sq() const { return std::norm(c0) + std::norm(c1); }
    bool is_real_nonnegative(double tol = 1e-14) const;
};

struct GroverAngle {
    double theta;         // 2 asin(sqrt(M/N)), exact
    double theta_approx;  // 2 sqrt(M/N), small-M/N limit
};

/// 2x2 complex matrix acting on the effective basis.
struct Mat2 {
    std::array<Complex, 4> e;  // row-major: e[0] e[1] / e[2] e[3]

    static Mat2 identity();
    Mat2 operator*(const Mat2& o) const;
    EffectiveState operator*(const EffectiveState& v) const;
    Mat2 adjoint() const;
    bool is_unitary(double tol = 1e-12) const;
};

GroverAngle grover_angle(const SearchSpec& spec);

/// Accumulated rotation angle (k + 1/2) * theta after k iterations.
double theta_k(const SearchSpec& spec, int k);

/// Closest integer to (pi/theta - 1)/2, ties rounding up.
int k_opt(const SearchSpec& spec);

/// State after k Grover iterations: (cos theta_k, sin theta_k).
EffectiveState grover_state(const SearchSpec& spec, int k);

double success_probability(const EffectiveState& state);

struct Pi3Operators {
    Mat2 oracle;     // U_{pi/3} restricted to the effective basis
    Mat2 diffusion;  // I_{pi/3} restricted to the effective basis
};

Pi3Operators pi3_operators(const SearchSpec& spec);

inline constexpr int kPi3MaxDepthEffective = 12;

/// State A_m |psi0> of the recursive fixed-point search,
/// A_{m+1} = A_m I A_m^dag U A_m, A_0 = Id.
EffectiveState pi3_state(const SearchSpec& spec, int m);

/// Oracle calls used by A_m: (3^m - 1)/2.
std::uint64_t pi3_oracle_calls(int m);

/// |<a|b>| compared to 1: equality up to global phase.
double state_fidelity(const EffectiveState& a, const EffectiveState& b);

}  // namespace qsearch
