#include "qsearch/effective.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsearch {

namespace {
constexpr double kNormTol = 1e-12;
}

bool EffectiveState::is_real_nonnegative(double tol) const {
    return std::abs(c0.imag()) <= tol && std::abs(c1.imag()) <= tol &&
           c0.real() >= -tol && c1.real() >= -tol;
}

Mat2 Mat2::identity() { return Mat2{{Complex{1}, Complex{0}, Complex{0}, Complex{1}}}; }

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                 e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]}};
}

EffectiveState Mat2::operator*(const EffectiveState& v) const {
    return EffectiveState{e[0] * v.c0 + e[1] * v.c1, e[2] * v.c0 + e[3] * v.c1};
}

Mat2 Mat2::adjoint() const {
    return Mat2{{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
}

bool Mat2::is_unitary(double tol) const {
    const Mat2 p = *this * adjoint();
    return std::abs(p.e[0] - Complex{1}) <= tol && std::abs(p.e[3] - Complex{1}) <= tol &&
           std::abs(p.e[1]) <= tol && std::abs(p.e[2]) <= tol;
}

GroverAngle grover_angle(const SearchSpec& spec) {
    spec.validate();
    const double ratio = spec.solution_ratio();
    return GroverAngle{2.0 * std::asin(std::sqrt(ratio)), 2.0 * std::sqrt(ratio)};
}

double theta_k(const SearchSpec& spec, int k) {
    return (k + 0.5) * grover_angle(spec).theta;
}

int k_opt(const SearchSpec& spec) {
    const double theta = grover_angle(spec).theta;
    const double x = (std::numbers::pi / theta - 1.0) / 2.0;
    return static_cast<int>(std::floor(x + 0.5));  // half-up
}

EffectiveState grover_state(const SearchSpec& spec, int k) {
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    const double tk = theta_k(spec, k);
    return EffectiveState{Complex{std::cos(tk)}, Complex{std::sin(tk)}};
}

double success_probability(const EffectiveState& state) {
    if (std::abs(state.norm_sq() - 1.0) > 1e-9)
        throw std::invalid_argument("state is not normalized");
    return std::norm(state.c1);
}

Pi3Operators pi3_operators(const SearchSpec& spec) {
    spec.validate();
    const Complex shift = 1.0 - std::polar(1.0, std::numbers::pi / 3.0);
    // Oracle: Id - shift |X1><X1|, diagonal in the effective basis.
    const Mat2 oracle{{Complex{1}, Complex{0}, Complex{0}, 1.0 - shift}};
    // Diffusion: -(Id - shift |psi0><psi0|) with |psi0> = (cos t0, sin t0).
    const double t0 = 0.5 * grover_angle(spec).theta;
    const double p0 = std::cos(t0), p1 = std::sin(t0);
    const Mat2 diffusion{{-(1.0 - shift * p0 * p0), shift * p0 * p1,
                          shift * p0 * p1, -(1.0 - shift * p1 * p1)}};
    return Pi3Operators{oracle, diffusion};
}

EffectiveState pi3_state(const SearchSpec& spec, int m) {
    if (m < 0) throw std::invalid_argument("recursion depth must be non-negative");
    if (m > kPi3MaxDepthEffective)
        throw std::invalid_argument("recursion depth exceeds the supported cap");
    const auto [oracle, diffusion] = pi3_operators(spec);
    Mat2 a = Mat2::identity();
    for (int i = 0; i < m; ++i)
        a = a * diffusion * a.adjoint() * oracle * a;
    const double t0 = 0.5 * grover_angle(spec).theta;
    EffectiveState psi = a * EffectiveState{Complex{std::cos(t0)}, Complex{std::sin(t0)}};
    const double nrm = std::sqrt(psi.norm_sq());
    if (std::abs(nrm - 1.0) > kNormTol)
        throw std::runtime_error("pi/3 recursion lost normalization");
    return EffectiveState{psi.c0 / nrm, psi.c1 / nrm};
}

std::uint64_t pi3_oracle_calls(int m) {
    if (m < 0) throw std::invalid_argument("recursion depth must be non-negative");
    if (m > 39) throw std::invalid_argument("oracle-call count would overflow");
    std::uint64_t pow3 = 1;
    for (int i = 0; i < m; ++i) pow3 *= 3;
    return (pow3 - 1) / 2;
}

double state_fidelity(const EffectiveState& a, const EffectiveState& b) {
    return std::abs(std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1);
}

}  // namespace qsearch
