#include "qsearch/search_spec.hpp"

#include <algorithm>
#include <set>

namespace qsearch {

void SearchSpec::validate() const {
    if (n < 1) throw std::invalid_argument("qubit count must be positive");
    if (n > 62) throw std::invalid_argument("qubit count too large for 64-bit indexing");
    if (M < 1) throw std::invalid_argument("solution count must be positive");
    if (static_cast<std::uint64_t>(M) >= N())
        throw std::invalid_argument("solution count must be smaller than the search space");
    if (solutions.size() != static_cast<std::size_t>(M))
        throw std::invalid_argument("solution set size does not match M");
    std::set<std::uint64_t> uniq(solutions.begin(), solutions.end());
    if (uniq.size() != solutions.size())
        throw std::invalid_argument("duplicate solution indices");
    for (auto s : solutions)
        if (s >= N()) throw std::invalid_argument("solution index out of range");
    if (solution_class == SolutionClass::AntipodalPair) {
        if (M != 2) throw std::invalid_argument("antipodal pair requires M=2");
        if ((solutions[0] ^ solutions[1]) != N() - 1)
            throw std::invalid_argument("antipodal pair must differ in every bit");
    }
    if (solution_class == SolutionClass::SymmetricSingle && M != 1)
        throw std::invalid_argument("symmetric single-solution class requires M=1");
}

static SolutionClass classify(int n, const std::vector<std::uint64_t>& sols) {
    const std::uint64_t all_ones = (std::uint64_t{1} << n) - 1;
    if (sols.size() == 1 && sols[0] == all_ones) return SolutionClass::SymmetricSingle;
    if (sols.size() == 2 && (sols[0] ^ sols[1]) == all_ones) return SolutionClass::AntipodalPair;
    return SolutionClass::Generic;
}

SearchSpec make_spec(int n, std::vector<std::uint64_t> solutions) {
    std::sort(solutions.begin(), solutions.end());
    SearchSpec spec;
    spec.n = n;
    spec.M = static_cast<int>(solutions.size());
    spec.solutions = std::move(solutions);
    spec.solution_class = classify(n, spec.solutions);
    spec.validate();
    return spec;
}

SearchSpec symmetric_single(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("qubit count out of range");
    return make_spec(n, {(std::uint64_t{1} << n) - 1});
}

SearchSpec antipodal_pair(int n) {
    if (n < 2 || n > 62) throw std::invalid_argument("qubit count out of range");
    return make_spec(n, {0, (std::uint64_t{1} << n) - 1});
}

}  // namespace qsearch
