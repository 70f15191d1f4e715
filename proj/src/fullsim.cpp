#include "qsearch/fullsim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsearch {

namespace {

int popcount32(std::uint32_t x) { return __builtin_popcount(x); }

void check_state(const FullState& state) {
    if (state.n < 1 || state.n > kMaxFullQubits)
        throw std::invalid_argument("qubit count out of supported range");
    if (state.amp.size() != (std::size_t{1} << state.n))
        throw std::invalid_argument("amplitude vector length mismatch");
}

}  // namespace

double FullState::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return s;
}

FullState init_uniform(int n) {
    if (n < 1 || n > kMaxFullQubits)
        throw std::invalid_argument("qubit count out of supported range");
    const std::size_t N = std::size_t{1} << n;
    FullState s;
    s.n = n;
    s.amp.assign(N, Complex{1.0 / std::sqrt(static_cast<double>(N))});
    return s;
}

FullState apply_oracle(const FullState& state, const std::vector<std::uint64_t>& solutions,
                       double phase) {
    check_state(state);
    FullState out = state;
    const Complex factor = std::polar(1.0, phase);
    for (auto s : solutions) {
        if (s >= out.amp.size()) throw std::invalid_argument("solution index out of range");
        out.amp[s] *= factor;
    }
    return out;
}

FullState apply_diffusion(const FullState& state, double phase) {
    check_state(state);
    const Complex shift = 1.0 - std::polar(1.0, phase);
    Complex sum{};
    for (const auto& a : state.amp) sum += a;
    // <psi0|state> |psi0> has constant amplitude sum/N.
    const Complex corr = shift * sum / static_cast<double>(state.amp.size());
    FullState out = state;
    for (auto& a : out.amp) a = -a + corr;
    return out;
}

FullState grover_full(const SearchSpec& spec, int k) {
    spec.validate();
    if (spec.n > kMaxFullQubits) throw std::invalid_argument("qubit count too large");
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    if (k > 10 * std::max(1, k_opt(spec)))
        throw std::invalid_argument("iteration count exceeds the resource guard");
    FullState s = init_uniform(spec.n);
    for (int i = 0; i < k; ++i) {
        s = apply_oracle(s, spec.solutions, std::numbers::pi);
        s = apply_diffusion(s, std::numbers::pi);
    }
    return s;
}

namespace {

// A_m and its adjoint as explicit gate sequences; the adjoint applies the
// individually inverted gates in reverse order.
void apply_A(const SearchSpec& spec, int m, bool adjoint, FullState& s) {
    if (m == 0) return;
    const double phi = std::numbers::pi / 3.0;
    if (!adjoint) {
        apply_A(spec, m - 1, false, s);
        s = apply_oracle(s, spec.solutions, phi);
        apply_A(spec, m - 1, true, s);
        s = apply_diffusion(s, phi);
        apply_A(spec, m - 1, false, s);
    } else {
        apply_A(spec, m - 1, true, s);
        s = apply_diffusion(s, -phi);
        apply_A(spec, m - 1, false, s);
        s = apply_oracle(s, spec.solutions, -phi);
        apply_A(spec, m - 1, true, s);
    }
}

}  // namespace

FullState pi3_full(const SearchSpec& spec, int m) {
    spec.validate();
    if (spec.n > 10) throw std::invalid_argument("qubit count exceeds the pi/3 full-sim guard");
    if (m < 0 || m > kPi3MaxDepthFull)
        throw std::invalid_argument("recursion depth out of supported range");
    FullState s = init_uniform(spec.n);
    apply_A(spec, m, false, s);
    return s;
}

FullState embed_effective(const SearchSpec& spec, const EffectiveState& state) {
    spec.validate();
    if (spec.n > kMaxFullQubits) throw std::invalid_argument("qubit count too large");
    const std::size_t N = std::size_t{1} << spec.n;
    FullState out;
    out.n = spec.n;
    out.amp.assign(N, state.c0 / std::sqrt(static_cast<double>(N - spec.M)));
    const Complex sol_amp = state.c1 / std::sqrt(static_cast<double>(spec.M));
    for (auto s : spec.solutions) out.amp[s] = sol_amp;
    return out;
}

EffectiveProjection project_effective(const SearchSpec& spec, const FullState& state) {
    check_state(state);
    if (state.n != spec.n) throw std::invalid_argument("qubit count mismatch");
    Complex p0{}, p1{};
    Complex total_sum{};
    for (const auto& a : state.amp) total_sum += a;
    Complex sol_sum{};
    for (auto s : spec.solutions) sol_sum += state.amp[s];
    p1 = sol_sum / std::sqrt(static_cast<double>(spec.M));
    p0 = (total_sum - sol_sum) / std::sqrt(static_cast<double>(state.amp.size() - spec.M));
    const double residual = state.norm_sq() - std::norm(p0) - std::norm(p1);
    return EffectiveProjection{EffectiveState{p0, p1}, residual};
}

SchmidtReport schmidt_spectrum(const FullState& state, std::uint32_t part_mask, double tol) {
    check_state(state);
    const int n = state.n;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    if (part_mask == 0 || (part_mask & ~full) != 0 || part_mask == full)
        throw std::invalid_argument("bipartition must be a proper non-empty qubit subset");
    const int m = popcount32(part_mask);
    const std::size_t rows = std::size_t{1} << m;
    const std::size_t cols = std::size_t{1} << (n - m);

    Eigen::MatrixXcd X(rows, cols);
    for (std::uint64_t x = 0; x < state.amp.size(); ++x) {
        // Row/column bits in ascending qubit order; qubit 0 is the MSB of x.
        std::size_t r = 0, c = 0;
        for (int q = 0; q < n; ++q) {
            const int bit = static_cast<int>((x >> (n - 1 - q)) & 1);
            if (part_mask & (1u << q))
                r = (r << 1) | bit;
            else
                c = (c << 1) | bit;
        }
        X(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = state.amp[x];
    }

    // Eigendecompose the Gram matrix of the smaller side: equivalent to the
    // squared SVD spectrum and numerically reliable on rank-deficient reshapes.
    const Eigen::MatrixXcd gram = (rows <= cols) ? Eigen::MatrixXcd(X * X.adjoint())
                                                 : Eigen::MatrixXcd(X.adjoint() * X);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        vals.push_back(std::max(es.eigenvalues()(i), 0.0));
    std::sort(vals.begin(), vals.end(), std::greater<>());
    int rank = 0;
    for (double v : vals)
        if (v > tol) ++rank;
    return SchmidtReport{part_mask, std::move(vals), std::max(rank, 1)};
}

namespace {

std::vector<std::uint32_t> bipartition_masks(int n, bool symmetric) {
    std::vector<std::uint32_t> masks;
    if (symmetric) {
        for (int m = 1; m <= n / 2; ++m) masks.push_back((1u << m) - 1);
    } else {
        // One representative per unordered split: require qubit 0 in P.
        const std::uint32_t full = (1u << n) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask)
            if (mask & 1u) masks.push_back(mask);
    }
    return masks;
}

}  // namespace

int schmidt_rank_max(const FullState& state, double tol, bool symmetric) {
    check_state(state);
    if (!symmetric && state.n > 12)
        throw std::invalid_argument("full bipartition enumeration limited to n <= 12");
    int rank = 1;
    for (auto mask : bipartition_masks(state.n, symmetric))
        rank = std::max(rank, schmidt_spectrum(state, mask, tol).rank);
    return rank;
}

double max_schmidt_sq(const FullState& state, bool symmetric) {
    check_state(state);
    double best = 0.0;
    for (auto mask : bipartition_masks(state.n, symmetric))
        best = std::max(best, schmidt_spectrum(state, mask).singular_values_squared.front());
    return best;
}

FullState swap_qubits(const FullState& state, int q1, int q2) {
    check_state(state);
    if (q1 < 0 || q2 < 0 || q1 >= state.n || q2 >= state.n)
        throw std::invalid_argument("qubit index out of range");
    FullState out = state;
    const int b1 = state.n - 1 - q1, b2 = state.n - 1 - q2;
    for (std::uint64_t x = 0; x < state.amp.size(); ++x) {
        const std::uint64_t v1 = (x >> b1) & 1, v2 = (x >> b2) & 1;
        std::uint64_t y = x;
        if (v1 != v2) y = x ^ (std::uint64_t{1} << b1) ^ (std::uint64_t{1} << b2);
        out.amp[y] = state.amp[x];
    }
    return out;
}

namespace {

constexpr double kPauliCoeffTol = 1e-10;

PauliClosureReport expand_in_pauli_basis(int n, const Eigen::MatrixXcd& op) {
    const std::uint64_t N = std::uint64_t{1} << n;
    int count = 0;
    double lone_coeff_mag = 0.0;
    std::uint64_t strings = 1;
    for (int q = 0; q < n; ++q) strings *= 4;
    for (std::uint64_t s = 0; s < strings; ++s) {
        // Digit q (base 4) selects the operator on qubit q: 0=I,1=X,2=Y,3=Z.
        std::uint64_t xmask = 0;
        std::uint64_t t = s;
        std::vector<int> digit(n);
        for (int q = 0; q < n; ++q) {
            digit[q] = static_cast<int>(t & 3);
            t >>= 2;
            if (digit[q] == 1 || digit[q] == 2) xmask |= std::uint64_t{1} << (n - 1 - q);
        }
        // Tr(P O) with P having one nonzero per row: P(k, k^xmask).
        Complex trace{};
        for (std::uint64_t k = 0; k < N; ++k) {
            const std::uint64_t j = k ^ xmask;  // P(k, j) nonzero for j's image k
            Complex phase{1.0};
            for (int q = 0; q < n; ++q) {
                const int bit = static_cast<int>((j >> (n - 1 - q)) & 1);
                switch (digit[q]) {
                    case 2: phase *= bit ? Complex{0, -1} : Complex{0, 1}; break;
                    case 3: phase *= bit ? -1.0 : 1.0; break;
                    default: break;
                }
            }
            trace += phase * op(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
        }
        const double mag = std::abs(trace) / static_cast<double>(N);
        if (mag > kPauliCoeffTol) {
            ++count;
            lone_coeff_mag = mag;
        }
    }
    const bool in_group = (count == 1) && std::abs(lone_coeff_mag - 1.0) <= 1e-8;
    return PauliClosureReport{in_group, count};
}

Eigen::MatrixXcd sigma_z_first(int n) {
    const Eigen::Index N = Eigen::Index{1} << n;
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(N, N);
    for (Eigen::Index i = 0; i < N; ++i)
        z(i, i) = ((i >> (n - 1)) & 1) ? -1.0 : 1.0;
    return z;
}

}  // namespace

PauliClosureReport pauli_closure_check(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("qubit count out of range for the check");
    const Eigen::Index N = Eigen::Index{1} << n;
    // Grover diffusion: entries 2/N - delta_ij.
    Eigen::MatrixXcd diff = Eigen::MatrixXcd::Constant(N, N, 2.0 / static_cast<double>(N));
    diff -= Eigen::MatrixXcd::Identity(N, N);
    const Eigen::MatrixXcd op = diff.adjoint() * sigma_z_first(n) * diff;
    return expand_in_pauli_basis(n, op);
}

PauliClosureReport pauli_closure_baseline(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("qubit count out of range for the check");
    return expand_in_pauli_basis(n, sigma_z_first(n));
}

}  // namespace qsearch
