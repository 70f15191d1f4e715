#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qsearch/fullsim.hpp"
#include "qsearch/gme.hpp"

using namespace qsearch;

namespace {

constexpr double kPi = std::numbers::pi;

FullState random_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    FullState s;
    s.n = n;
    s.amp.resize(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& a : s.amp) {
        a = Complex{gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    for (auto& a : s.amp) a /= std::sqrt(norm);
    return s;
}

}  // namespace

TEST_CASE("init_uniform") {
    const auto s1 = init_uniform(1);
    CHECK(s1.amp[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const auto s2 = init_uniform(2);
    for (const auto& a : s2.amp) CHECK(a.real() == doctest::Approx(0.5).epsilon(1e-15));
    for (int n : {1, 5, 10}) CHECK(init_uniform(n).norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(init_uniform(0), std::invalid_argument);
    CHECK_THROWS_AS(init_uniform(15), std::invalid_argument);
}

TEST_CASE("oracle phases") {
    auto s = init_uniform(3);
    s.amp[5] = Complex{0.5};
    const auto flipped = apply_oracle(s, {5}, kPi);
    CHECK(flipped.amp[5].real() == doctest::Approx(-0.5).epsilon(1e-15));

    auto one = init_uniform(1);
    one.amp = {Complex{0}, Complex{1}};
    const auto shifted = apply_oracle(one, {1}, kPi / 3.0);
    CHECK(std::abs(shifted.amp[1] - std::polar(1.0, kPi / 3.0)) < 1e-15);

    // Involution at phase pi.
    const auto twice = apply_oracle(apply_oracle(s, {5}, kPi), {5}, kPi);
    for (std::size_t i = 0; i < s.amp.size(); ++i) CHECK(std::abs(twice.amp[i] - s.amp[i]) < 1e-15);
}

TEST_CASE("diffusion operator") {
    // |psi0> is fixed (eigenvalue +1) at phase pi.
    const auto psi0 = init_uniform(4);
    const auto fixed = apply_diffusion(psi0, kPi);
    for (std::size_t i = 0; i < psi0.amp.size(); ++i)
        CHECK(std::abs(fixed.amp[i] - psi0.amp[i]) < 1e-14);

    // An orthogonal state is negated.
    FullState orth;
    orth.n = 2;
    orth.amp = {Complex{1.0 / std::sqrt(2.0)}, Complex{-1.0 / std::sqrt(2.0)}, Complex{0},
                Complex{0}};
    const auto negated = apply_diffusion(orth, kPi);
    for (std::size_t i = 0; i < orth.amp.size(); ++i)
        CHECK(std::abs(negated.amp[i] + orth.amp[i]) < 1e-14);

    // Unitarity on random states, both phase variants.
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto s = random_state(6, seed);
        CHECK(apply_diffusion(s, kPi).norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(apply_diffusion(s, kPi / 3.0).norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("grover_full basics") {
    const auto spec = symmetric_single(2);
    const auto s0 = grover_full(spec, 0);
    for (const auto& a : s0.amp) CHECK(a.real() == doctest::Approx(0.5).epsilon(1e-15));

    // Two qubits, one solution: a single iteration is exact.
    const auto s1 = grover_full(spec, 1);
    CHECK(std::abs(s1.amp[3]) == doctest::Approx(1.0).epsilon(1e-14));

    // Projection reproduces the effective state at a generic k.
    const auto spec12 = symmetric_single(12);
    const auto proj = project_effective(spec12, grover_full(spec12, 25));
    const auto eff = grover_state(spec12, 25);
    CHECK(std::abs(proj.projected.c0 - eff.c0) < 1e-10);
    CHECK(std::abs(proj.projected.c1 - eff.c1) < 1e-10);
    CHECK(std::abs(proj.residual) < 1e-12);
}

TEST_CASE("pi3_full matches the effective recursion") {
    for (int n : {2, 4, 8}) {
        const auto spec = symmetric_single(n);
        for (int m = 0; m <= 4; ++m) {
            const auto full = pi3_full(spec, m);
            CHECK(full.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
            const auto proj = project_effective(spec, full);
            CHECK(std::abs(proj.residual) < 1e-12);
            CHECK(state_fidelity(proj.projected, pi3_state(spec, m)) ==
                  doctest::Approx(1.0).epsilon(1e-10));
            const double fail = std::pow(1.0 - spec.solution_ratio(), std::pow(3.0, m));
            CHECK(std::norm(proj.projected.c1) == doctest::Approx(1.0 - fail).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(pi3_full(symmetric_single(11), 1), std::invalid_argument);
    CHECK_THROWS_AS(pi3_full(symmetric_single(4), kPi3MaxDepthFull + 1), std::invalid_argument);
}

TEST_CASE("schmidt spectrum") {
    // Product state: single unit coefficient.
    const auto uniform = init_uniform(4);
    for (std::uint32_t mask : {0x1u, 0x3u, 0x5u}) {
        const auto report = schmidt_spectrum(uniform, mask);
        CHECK(report.singular_values_squared.front() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.rank == 1);
    }

    // GHZ: {1/2, 1/2} for every bipartition.
    FullState ghz;
    ghz.n = 4;
    ghz.amp.assign(16, Complex{});
    ghz.amp[0] = ghz.amp[15] = Complex{1.0 / std::sqrt(2.0)};
    for (std::uint32_t mask = 1; mask < 15; ++mask) {
        const auto report = schmidt_spectrum(ghz, mask);
        CHECK(report.singular_values_squared[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(report.singular_values_squared[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(report.rank == 2);
        double sum = 0.0;
        for (double v : report.singular_values_squared) sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }

    CHECK_THROWS_AS(schmidt_spectrum(ghz, 0), std::invalid_argument);
    CHECK_THROWS_AS(schmidt_spectrum(ghz, 0xF), std::invalid_argument);
}

TEST_CASE("schmidt spectrum vs lambda_max closed form") {
    const auto spec = symmetric_single(8);
    for (int k : {1, 4, 8, 12}) {
        const auto full = grover_full(spec, k);
        const auto state = grover_state(spec, k);
        for (int m = 1; m <= 4; ++m) {
            const std::uint32_t mask = (1u << m) - 1;
            const double svd_max = schmidt_spectrum(full, mask).singular_values_squared.front();
            CHECK(svd_max == doctest::Approx(lambda_max_m1(state, spec, m)).epsilon(1e-10));
        }
    }
}

TEST_CASE("schmidt rank bounds") {
    const auto spec = symmetric_single(8);
    CHECK(schmidt_rank_max(grover_full(spec, 0)) == 1);
    for (int k = 1; k < k_opt(spec); ++k) CHECK(schmidt_rank_max(grover_full(spec, k)) == 2);

    const auto pair = antipodal_pair(8);
    for (int k = 0; k <= k_opt(pair); ++k) CHECK(schmidt_rank_max(grover_full(pair, k)) <= 3);
}

TEST_CASE("permutation invariance of symmetric instances") {
    const auto spec = symmetric_single(6);
    const auto full = grover_full(spec, 3);
    for (auto [q1, q2] : {std::pair{0, 5}, {1, 3}, {2, 4}}) {
        const auto swapped = swap_qubits(full, q1, q2);
        for (std::size_t i = 0; i < full.amp.size(); ++i)
            CHECK(swapped.amp[i] == full.amp[i]);  // exact, by index remapping
    }
}

TEST_CASE("pauli closure") {
    for (int n : {2, 3, 4}) {
        const auto baseline = pauli_closure_baseline(n);
        CHECK(baseline.is_in_pauli_group);
        CHECK(baseline.nonzero_pauli_terms == 1);
    }

    // n=2 is the Clifford special case: the conjugated witness collapses to
    // the single unit-coefficient term -(Z x X) and stays in the group.
    const auto clifford = pauli_closure_check(2);
    CHECK(clifford.is_in_pauli_group);
    CHECK(clifford.nonzero_pauli_terms == 1);

    for (int n : {3, 4}) {
        const auto report = pauli_closure_check(n);
        CHECK_FALSE(report.is_in_pauli_group);
        CHECK(report.nonzero_pauli_terms > 1);
    }
    CHECK_THROWS_AS(pauli_closure_check(1), std::invalid_argument);
    CHECK_THROWS_AS(pauli_closure_check(7), std::invalid_argument);
}

TEST_CASE("embedding round trip") {
    const auto spec = antipodal_pair(6);
    const auto eff = grover_state(spec, 2);
    const auto proj = project_effective(spec, embed_effective(spec, eff));
    CHECK(std::abs(proj.projected.c0 - eff.c0) < 1e-14);
    CHECK(std::abs(proj.projected.c1 - eff.c1) < 1e-14);
    CHECK(std::abs(proj.residual) < 1e-14);
}
