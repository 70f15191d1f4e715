#include <doctest.h>

#include <cmath>

#include "qsearch/analysis.hpp"

using namespace qsearch;

TEST_CASE("grover dynamics table, small instance") {
    const auto spec = symmetric_single(8);
    const auto rows = grover_dynamics_table(spec);
    CHECK(rows.size() == static_cast<std::size_t>(k_opt(spec) + 1));
    CHECK(rows.front().E_n == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rows.front().E_2 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rows.front().success == doctest::Approx(spec.solution_ratio()).epsilon(1e-12));
    CHECK(rows.back().relative_step == 1.0);
    for (const auto& r : rows) {
        CHECK(r.relative_step >= 0.0);
        CHECK(r.relative_step <= 1.0);
        CHECK(r.E_2 <= r.E_n + 1e-9);
    }
}

TEST_CASE("pi3 dynamics table") {
    const auto spec = symmetric_single(8);
    const auto rows = pi3_dynamics_table(spec, 8);
    CHECK(rows.size() == 9);
    CHECK(rows.front().E_n == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(rows.front().E_2 == doctest::Approx(0.0).epsilon(1e-8));
    double prev = -1.0;
    for (const auto& r : rows) {
        CHECK(r.success > prev);
        prev = r.success;
        CHECK(r.E_2 <= r.E_n + 1e-8);
    }
    CHECK(rows.back().success > 0.999);
    CHECK_THROWS_AS(pi3_dynamics_table(symmetric_single(14), 2), std::invalid_argument);
}

TEST_CASE("scale invariance sweep, reduced scope") {
    const auto result = scale_invariance_sweep({8, 10}, 1, 512);
    REQUIRE(result.deviation_summary.size() == 2);
    CHECK(result.deviation_summary[0].max_dev_E_2 >= result.deviation_summary[1].max_dev_E_2);
    for (const auto& dev : result.deviation_summary) {
        CHECK(dev.max_dev_E_n >= 0.0);
        CHECK(dev.max_dev_E_2 >= 0.0);
        CHECK(dev.max_dev_E_2 < 0.1);
    }
    CHECK_THROWS_AS(scale_invariance_sweep({4}, 1), std::invalid_argument);
    CHECK_THROWS_AS(scale_invariance_sweep({10}, 3), std::invalid_argument);
}

TEST_CASE("table determinism") {
    const auto spec = symmetric_single(8);
    const auto a = grover_dynamics_table(spec);
    const auto b = grover_dynamics_table(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].E_n == b[i].E_n);
        CHECK(a[i].E_2 == b[i].E_2);
        CHECK(a[i].success == b[i].success);
    }
}
