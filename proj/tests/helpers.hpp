#ifndef SDEPTH_TEST_HELPERS_HPP
#define SDEPTH_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "sdepth/monomial.hpp"

namespace sdepth::testing {

inline Monomial mono(Exponents e) { return Monomial(std::move(e)); }

inline MonomialIdeal ideal(int n, std::vector<Exponents> gens) {
    std::vector<Monomial> ms;
    for (auto& e : gens) ms.emplace_back(std::move(e));
    return MonomialIdeal(n, std::move(ms));
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, int max_degree) {
    std::uniform_int_distribution<int> pick_var(0, n - 1);
    std::uniform_int_distribution<int> pick_deg(1, max_degree);
    Exponents e(static_cast<size_t>(n), 0);
    const int d = pick_deg(rng);
    for (int k = 0; k < d; ++k) ++e[static_cast<size_t>(pick_var(rng))];
    return Monomial(std::move(e));
}

} // namespace sdepth::testing

#endif
