#pragma once

#include <string>
#include <vector>

#include "qsearch/gme.hpp"
#include "qsearch/search_spec.hpp"

namespace qsearch {

/// One row of the entanglement dynamics: step index, relative step,
/// success probability, both measures and their asymptotic references.
struct EntanglementPoint {
    int step;
    double relative_step;
    double success;
    double E_n;
    double E_2;
    double E_n_asym;
    double E_2_asym;
};

struct DeviationSummary {
    int n;
    double max_dev_E_n;  // max_k |E_n - E_n_asym|
    double max_dev_E_2;
};

struct SweepResult {
    std::vector<int> n_list;
    int M;
    std::vector<std::vector<EntanglementPoint>> tables;  // per n, sorted by k
    std::vector<DeviationSummary> deviation_summary;
};

/// k = 0..k_opt: success, E_n (optimizer), E_2 (closed form), asymptotics.
std::vector<EntanglementPoint> grover_dynamics_table(const SearchSpec& spec,
                                                     int alpha_grid = 1024);

/// Recursive steps m = 0..m_max of the pi/3 search. E_2 comes from the
/// Schmidt spectrum of the embedded state; asymptotic columns are evaluated
/// at the success-equivalent angle arcsin |c1|.
std::vector<EntanglementPoint> pi3_dynamics_table(const SearchSpec& spec, int m_max,
                                                  int alpha_grid = 1024);

SweepResult scale_invariance_sweep(const std::vector<int>& n_list, int M,
                                   int grid_points = 1024);

struct CheckResult {
    std::string name;
    bool passed;
    double measured;   // worst deviation observed (check-specific units)
    double tolerance;
    std::string detail;
};

struct VerifyOptions {
    double tol_closed_form = 1e-9;   // closed form vs SVD oracle
    double tol_effective = 1e-10;    // effective vs full per component
};

/// Consolidated cross-check run: closed-form vs SVD, effective vs full,
/// local-unitary invariance, m=1 optimality, Schmidt rank bounds, Pauli
/// closure, plus a negative control with the approximate angle.
std::vector<CheckResult> verification_suite(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qsearch
