#include "qsearch/gme.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace qsearch {

namespace {

constexpr double kPi = std::numbers::pi;

Complex pow_int(Complex base, int n) {
    Complex r{1.0};
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

double pow_int(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

void require_symmetric(const SearchSpec& spec) {
    spec.validate();
    if (spec.solution_class == SolutionClass::Generic)
        throw std::invalid_argument("symmetric ansatz requires a symmetric solution placement");
}

// Golden-section maximization on [lo, hi]; unimodal near a grid seed.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-12) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

Complex overlap_symmetric(const EffectiveState& state, const SearchSpec& spec,
                          const ProductAnsatz& ansatz) {
    require_symmetric(spec);
    if (std::abs(state.norm_sq() - 1.0) > 1e-9)
        throw std::invalid_argument("state is not normalized");
    const int n = spec.n;
    const double N = static_cast<double>(spec.N());
    const double cc = std::cos(ansatz.alpha / 2.0);
    const double sc = std::sin(ansatz.alpha / 2.0);
    const Complex eib = std::polar(1.0, ansatz.beta);
    const Complex full = pow_int(cc + eib * sc, n);  // sum over all basis states
    const Complex ones = pow_int(eib * sc, n);       // |1...1> term
    if (spec.M == 1) {
        return std::conj(state.c0) / std::sqrt(N - 1.0) * (full - ones) +
               std::conj(state.c1) * ones;
    }
    const Complex zeros = Complex{pow_int(cc, n)};   // |0...0> term
    return std::conj(state.c0) / std::sqrt(N - 2.0) * (full - zeros - ones) +
           std::conj(state.c1) / std::sqrt(2.0) * (zeros + ones);
}

OverlapMaximum maximize_overlap(const EffectiveState& state, const SearchSpec& spec,
                                int alpha_grid, int beta_grid) {
    require_symmetric(spec);
    const bool real_state = state.is_real_nonnegative();
    const auto objective = [&](double alpha, double beta) {
        return std::norm(overlap_symmetric(state, spec, ProductAnsatz{alpha, beta}));
    };

    struct Seed {
        double alpha, beta, value;
    };
    std::vector<Seed> seeds;
    const int nb = real_state ? 1 : beta_grid;
    for (int ib = 0; ib < nb; ++ib) {
        const double beta = real_state ? 0.0 : 2.0 * kPi * ib / beta_grid;
        for (int ia = 0; ia <= alpha_grid; ++ia) {
            const double alpha = kPi * ia / alpha_grid;
            seeds.push_back({alpha, beta, objective(alpha, beta)});
        }
    }
    std::sort(seeds.begin(), seeds.end(),
              [](const Seed& a, const Seed& b) { return a.value > b.value; });

    const double da = kPi / alpha_grid;
    const double db = real_state ? 0.0 : 2.0 * kPi / beta_grid;
    OverlapMaximum best{-1.0, {0.0, 0.0}, false};
    const int multistart = std::min<int>(3, static_cast<int>(seeds.size()));
    for (int i = 0; i < multistart; ++i) {
        double alpha = seeds[i].alpha, beta = seeds[i].beta;
        double value = seeds[i].value;
        bool converged = false;
        for (int round = 0; round < 200; ++round) {
            alpha = golden_max([&](double a) { return objective(a, beta); },
                               std::max(0.0, alpha - da), std::min(kPi, alpha + da));
            if (!real_state)
                beta = golden_max([&](double b) { return objective(alpha, b); },
                                  beta - db, beta + db);
            const double v = objective(alpha, beta);
            if (std::abs(v - value) < 1e-12 && round > 0) {
                value = std::max(value, v);
                converged = true;
                break;
            }
            value = std::max(value, v);
        }
        if (!converged)
            throw OptimizationError("overlap maximization did not converge");
        // Report only what the returned maximizer achieves.
        const double achieved = objective(alpha, beta);
        if (achieved > best.value) best = OverlapMaximum{achieved, {alpha, beta}, true};
    }
    return best;
}

double E_n_symmetric(const EffectiveState& state, const SearchSpec& spec, int alpha_grid) {
    require_symmetric(spec);
    // Exact GHZ target: the analytic value, optimizer-free.
    if (spec.M == 2 && std::abs(state.c0) < 1e-14) return 0.5;
    return 1.0 - maximize_overlap(state, spec, alpha_grid).value;
}

double E_n_symmetric_poly(const EffectiveState& state, const SearchSpec& spec) {
    require_symmetric(spec);
    if (spec.M != 1) throw std::invalid_argument("polynomial path covers M=1 only");
    if (!state.is_real_nonnegative())
        throw std::invalid_argument("polynomial path covers real states only");
    const int n = spec.n;
    const double N = static_cast<double>(spec.N());
    const double c0 = state.c0.real(), c1 = state.c1.real();
    const double w = c0 / std::sqrt(N - 1.0);
    // overlap(t) = (1+t^2)^{-n/2} p(t), t = tan(alpha/2),
    // p(t) = w ((1+t)^n - t^n) + c1 t^n. Stationary points solve
    // q(t) = (1+t^2) p'(t) - n t p(t) = 0.
    const auto p = [&](double t) {
        return w * (pow_int(1.0 + t, n) - pow_int(t, n)) + c1 * pow_int(t, n);
    };
    const auto dp = [&](double t) {
        return n * (w * (pow_int(1.0 + t, n - 1) - pow_int(t, n - 1)) +
                    c1 * pow_int(t, n - 1));
    };
    const auto q = [&](double t) { return (1.0 + t * t) * dp(t) - n * t * p(t); };
    const auto overlap_sq = [&](double alpha) {
        return std::norm(overlap_symmetric(state, spec, ProductAnsatz{alpha, 0.0}));
    };

    // Sample q along alpha (uniform), bisect each sign change in t.
    double best = std::max(overlap_sq(0.0), overlap_sq(kPi));
    const int samples = 4096;
    double prev_t = 0.0, prev_q = q(0.0);
    for (int i = 1; i < samples; ++i) {
        const double alpha = kPi * i / samples;
        const double t = std::tan(alpha / 2.0);
        const double qt = q(t);
        if (std::signbit(qt) != std::signbit(prev_q)) {
            double lo = prev_t, hi = t, flo = prev_q;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = q(mid);
                if (std::signbit(fm) == std::signbit(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
                if (hi - lo < 1e-14 * (1.0 + hi)) break;
            }
            best = std::max(best, overlap_sq(2.0 * std::atan(0.5 * (lo + hi))));
        }
        prev_t = t;
        prev_q = qt;
    }
    return 1.0 - best;
}

ReducedDensity reduced_density(const EffectiveState& state, const SearchSpec& spec, int m) {
    require_symmetric(spec);
    if (m < 1 || m >= spec.n) throw std::invalid_argument("bipartition size out of range");
    if (std::abs(state.c0.imag()) > 1e-12 || std::abs(state.c1.imag()) > 1e-12)
        throw std::invalid_argument("structured reduced density requires real amplitudes");
    const double N = static_cast<double>(spec.N());
    ReducedDensity rd;
    rd.n = spec.n;
    rd.M = spec.M;
    rd.m = m;
    if (spec.M == 1) {
        rd.A = state.c0.real() / std::sqrt(N - 1.0);
        rd.B = state.c1.real();
        rd.d = 0.0;
    } else {
        rd.A = state.c0.real() / std::sqrt(N - 2.0);
        rd.B = state.c1.real() / std::sqrt(2.0);
        rd.d = 0.0;  // filled below
    }
    const double A = rd.A, B = rd.B;
    rd.a = std::ldexp(A * A, spec.n - m);  // 2^{n-m} A^2
    rd.b = rd.a - A * (A - B);
    rd.c = rd.a - A * A + B * B;
    if (spec.M == 2) rd.d = rd.a - 2.0 * A * (A - B);
    return rd;
}

double ReducedDensity::trace() const {
    const double dim = std::ldexp(1.0, m);
    if (M == 1) return (dim - 1.0) * a + c;
    if (m == 1) return 2.0 * c;
    return (dim - 2.0) * a + 2.0 * c;
}

std::vector<double> ReducedDensity::spectrum() const {
    std::vector<double> vals;
    const double dim = std::ldexp(1.0, m);
    if (M == 1) {
        // Span of the all-ones and last coordinate vectors; orthonormal basis
        // {f, (e-f)/sqrt(K)} with K = 2^m - 1 gives a 2x2 block.
        const double K = dim - 1.0;
        const double s11 = c, s12 = std::sqrt(K) * b, s22 = K * a;
        const double tr = s11 + s22, det = s11 * s22 - s12 * s12;
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
        vals = {0.5 * (tr + disc), 0.5 * (tr - disc)};
    } else if (m == 1) {
        vals = {c + d, c - d};
    } else {
        // Basis {f0, f1, (e-f0-f1)/sqrt(K)}, K = 2^m - 2. The antisymmetric
        // combination (f0-f1)/sqrt(2) decouples with eigenvalue c - d; the
        // symmetric part reduces to a 2x2 block.
        const double K = dim - 2.0;
        const double s11 = c + d, s12 = std::sqrt(2.0 * K) * b, s22 = K * a;
        const double tr = s11 + s22, det = s11 * s22 - s12 * s12;
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
        vals = {0.5 * (tr + disc), 0.5 * (tr - disc), c - d};
    }
    std::sort(vals.begin(), vals.end(), std::greater<>());
    for (double& v : vals)
        if (v < 0.0 && v > -1e-12) v = 0.0;
    return vals;
}

double lambda_max_m1(const EffectiveState& state, const SearchSpec& spec, int m) {
    require_symmetric(spec);
    if (spec.M != 1) throw std::invalid_argument("closed form covers M=1 only");
    if (m < 1 || m >= spec.n) throw std::invalid_argument("bipartition size out of range");
    const ReducedDensity rd = reduced_density(state, spec, m);
    const double A = rd.A, B = rd.B;
    const double km = std::ldexp(1.0, m) - 1.0;
    const double knm = std::ldexp(1.0, spec.n - m) - 1.0;
    double disc = 1.0 - 4.0 * km * knm * A * A * (A - B) * (A - B);
    if (disc < -1e-12) throw std::runtime_error("negative discriminant in lambda_max");
    disc = std::max(disc, 0.0);
    return 0.5 + 0.5 * std::sqrt(disc);
}

double E2_m1(const EffectiveState& state, const SearchSpec& spec) {
    require_symmetric(spec);
    if (spec.M != 1) throw std::invalid_argument("closed form covers M=1 only");
    const double N = static_cast<double>(spec.N());
    const double ct = state.c0.real(), st = state.c1.real();
    double disc = 1.0 - 4.0 * ((N / 2.0 - 1.0) / (N - 1.0)) * ct * ct *
                            (ct / std::sqrt(N - 1.0) - st) * (ct / std::sqrt(N - 1.0) - st);
    if (disc < -1e-12) throw std::runtime_error("negative discriminant in E2");
    disc = std::max(disc, 0.0);
    return 0.5 - 0.5 * std::sqrt(disc);
}

double E2_m2(const EffectiveState& state, const SearchSpec& spec) {
    require_symmetric(spec);
    if (spec.M != 2) throw std::invalid_argument("closed form covers M=2 only");
    const double N = static_cast<double>(spec.N());
    const double ct = state.c0.real(), st = state.c1.real();
    // Single-qubit marginal has eigenvalues 1/2 +- d; taking |d| keeps the
    // larger branch when the rotation angle passes pi/2 and d turns negative.
    const double A = ct / std::sqrt(N - 2.0);
    const double B = st / std::sqrt(2.0);
    const double d = 0.5 * (N - 4.0) * A * A + 2.0 * A * B;
    return 0.5 - std::abs(d);
}

AsymptoticMeasures asymptotic_measures(double theta_k, int M) {
    if (theta_k < -1e-12 || theta_k > kPi)
        throw std::invalid_argument("angle out of range");
    const double s2 = std::sin(theta_k) * std::sin(theta_k);
    const double c2 = std::cos(theta_k) * std::cos(theta_k);
    if (M == 1) {
        const double en = (theta_k <= kPi / 4.0) ? s2 : c2;
        const double s2t = std::sin(2.0 * theta_k);
        const double e2 = 0.5 * (1.0 - std::sqrt(1.0 - 0.5 * s2t * s2t));
        return AsymptoticMeasures{en, e2};
    }
    if (M == 2) {
        const double crossover = std::acos(1.0 / std::sqrt(3.0));
        const double en = (theta_k <= crossover) ? s2 : 0.5 * (1.0 + c2);
        return AsymptoticMeasures{en, 0.5 * s2};
    }
    throw std::invalid_argument("asymptotic forms cover M=1 and M=2 only");
}

double E_n_bruteforce(const FullState& state, const BruteForceOptions& opts) {
    if (state.n > 4) throw std::invalid_argument("brute-force path limited to n <= 4");
    if (std::abs(state.norm_sq() - 1.0) > 1e-9)
        throw std::invalid_argument("state is not normalized");
    const int n = state.n;
    const std::size_t N = state.amp.size();

    // Alternating single-qubit updates: with all other factors fixed, the
    // overlap is linear in qubit i's state, so the optimum is the normalized
    // environment vector.
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double best = -1.0;
    bool any_converged = false;
    for (int start = 0; start < opts.starts; ++start) {
        std::vector<std::array<Complex, 2>> q(n);
        for (int i = 0; i < n; ++i) {
            if (start == 0) {
                q[i] = {Complex{1.0 / std::sqrt(2.0)}, Complex{1.0 / std::sqrt(2.0)}};
            } else {
                const double a = kPi * unit(rng);
                const double b = 2.0 * kPi * unit(rng);
                q[i] = {Complex{std::cos(a / 2.0)}, std::polar(std::sin(a / 2.0), b)};
            }
        }
        double value = 0.0;
        bool converged = false;
        for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
            for (int i = 0; i < n; ++i) {
                std::array<Complex, 2> env{Complex{}, Complex{}};
                for (std::size_t x = 0; x < N; ++x) {
                    Complex prod = std::conj(state.amp[x]);
                    for (int j = 0; j < n; ++j) {
                        if (j == i) continue;
                        prod *= q[j][(x >> (n - 1 - j)) & 1];
                    }
                    env[(x >> (n - 1 - i)) & 1] += prod;
                }
                const double nrm = std::sqrt(std::norm(env[0]) + std::norm(env[1]));
                if (nrm < 1e-300) continue;
                q[i] = {std::conj(env[0]) / nrm, std::conj(env[1]) / nrm};
            }
            Complex ov{};
            for (std::size_t x = 0; x < N; ++x) {
                Complex prod = std::conj(state.amp[x]);
                for (int j = 0; j < n; ++j) prod *= q[j][(x >> (n - 1 - j)) & 1];
                ov += prod;
            }
            const double v = std::norm(ov);
            if (std::abs(v - value) < opts.tol) {
                value = std::max(value, v);
                converged = true;
                break;
            }
            value = std::max(value, v);
        }
        if (converged) {
            any_converged = true;
            best = std::max(best, value);
        }
    }
    if (!any_converged)
        throw OptimizationError("product-state maximization exhausted its budget");
    return 1.0 - best;
}

}  // namespace qsearch
