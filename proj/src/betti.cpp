#include "sdepth/betti.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdepth {

using boost::multiprecision::cpp_int;

int SimplicialComplex::dim() const {
    int d = -1;
    for (std::uint32_t f : faces) d = std::max(d, std::popcount(f) - 1);
    return d;
}

SimplicialComplex complex_from_facets(std::vector<int> vertices,
                                      const std::vector<std::uint32_t>& facets) {
    std::set<std::uint32_t> faces;
    for (std::uint32_t f : facets) {
        // enumerate all submasks, including 0
        std::uint32_t s = f;
        while (true) {
            faces.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::sort(vertices.begin(), vertices.end());
    return SimplicialComplex{std::move(vertices),
                             std::vector<std::uint32_t>(faces.begin(), faces.end())};
}

bool downward_closed(const SimplicialComplex& c) {
    std::set<std::uint32_t> have(c.faces.begin(), c.faces.end());
    for (std::uint32_t f : c.faces) {
        std::uint32_t rest = f;
        while (rest) {
            const std::uint32_t bit = rest & (~rest + 1);
            if (!have.count(f ^ bit)) return false;
            rest ^= bit;
        }
    }
    return c.faces.empty() || have.count(0) > 0;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a) {
    const std::vector<int> supp = a.support();
    if (supp.size() > 31) throw resource_limit_error("upper_koszul_complex: support too large");
    std::vector<std::uint32_t> faces;
    for (std::uint32_t s = 0; s < (1u << supp.size()); ++s) {
        Exponents e = a.exponents();
        for (size_t p = 0; p < supp.size(); ++p)
            if (s & (1u << p)) --e[static_cast<size_t>(supp[p])];
        if (contains(I, Monomial(std::move(e)))) faces.push_back(s);
    }
    std::sort(faces.begin(), faces.end());
    return SimplicialComplex{supp, std::move(faces)};
}

namespace {

// Rank over Q by fraction-free (Bareiss) elimination; entries stay integral.
int rank_exact(std::vector<std::vector<cpp_int>> m) {
    if (m.empty() || m.front().empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    size_t r = 0;
    cpp_int prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

std::vector<int> reduced_homology_ranks(const SimplicialComplex& c) {
    if (c.is_void()) return {};
    const int top = c.dim();

    std::vector<std::vector<std::uint32_t>> by_dim(static_cast<size_t>(top + 2));
    for (std::uint32_t f : c.faces)
        by_dim[static_cast<size_t>(std::popcount(f))].push_back(f);
    // c.faces is sorted, so each dimension slice is sorted too.

    // boundary_rank[d+1] = rank of the map from d-chains to (d-1)-chains
    std::vector<int> boundary_rank(static_cast<size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d) {
        const auto& domain = by_dim[static_cast<size_t>(d + 1)];
        const auto& image = by_dim[static_cast<size_t>(d)];
        if (domain.empty() || image.empty()) continue;
        std::vector<std::vector<cpp_int>> mat(image.size(),
                                              std::vector<cpp_int>(domain.size(), 0));
        for (size_t j = 0; j < domain.size(); ++j) {
            const std::uint32_t f = domain[j];
            int sign = 1;
            std::uint32_t rest = f;
            while (rest) {
                const std::uint32_t bit = rest & (~rest + 1);
                const std::uint32_t sub = f ^ bit;
                const auto it = std::lower_bound(image.begin(), image.end(), sub);
                mat[static_cast<size_t>(it - image.begin())][j] = sign;
                sign = -sign;
                rest ^= bit;
            }
        }
        boundary_rank[static_cast<size_t>(d + 1)] = rank_exact(std::move(mat));
    }

    std::vector<int> ranks(static_cast<size_t>(top + 2), 0);
    for (int d = -1; d <= top; ++d) {
        const int f_d = static_cast<int>(by_dim[static_cast<size_t>(d + 1)].size());
        ranks[static_cast<size_t>(d + 1)] =
            f_d - boundary_rank[static_cast<size_t>(d + 1)] - boundary_rank[static_cast<size_t>(d + 2)];
    }
    return ranks;
}

long reduced_euler_characteristic(const SimplicialComplex& c) {
    long chi = 0;
    for (std::uint32_t f : c.faces)
        chi += (std::popcount(f) % 2 == 0) ? -1 : 1;  // dim = popcount - 1
    return chi;
}

int BettiTable::rank_ideal(int i, const Exponents& a) const {
    const auto it = ideal_ranks.find({i, a});
    return it == ideal_ranks.end() ? 0 : it->second;
}

int BettiTable::total_ideal(int i) const {
    int total = 0;
    for (const auto& [key, rank] : ideal_ranks)
        if (key.first == i) total += rank;
    return total;
}

int BettiTable::pd_ideal() const {
    int pd = 0;
    for (const auto& [key, rank] : ideal_ranks)
        if (rank > 0) pd = std::max(pd, key.first);
    return pd;
}

BettiTable betti_numbers(const MonomialIdeal& I, const Limits& limits) {
    const int m = I.generator_count();
    if (m > limits.max_betti_generators)
        throw resource_limit_error("betti_numbers: generator cap exceeded");

    std::set<Exponents> degrees;
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        Monomial deg = Monomial::unit(I.vars());
        for (int k = 0; k < m; ++k)
            if (s & (1u << k)) deg = lcm(deg, I.generator(k));
        degrees.insert(deg.exponents());
    }

    BettiTable table;
    table.n = I.vars();
    for (const Exponents& a : degrees) {
        const SimplicialComplex koszul = upper_koszul_complex(I, Monomial(a));
        const std::vector<int> ranks = reduced_homology_ranks(koszul);
        for (size_t idx = 0; idx < ranks.size(); ++idx)
            if (ranks[idx] > 0) table.ideal_ranks[{static_cast<int>(idx), a}] = ranks[idx];
    }
    return table;
}

int depth_oracle(const MonomialIdeal& I, const Limits& limits) {
    return betti_numbers(I, limits).depth_module();
}

} // namespace sdepth
