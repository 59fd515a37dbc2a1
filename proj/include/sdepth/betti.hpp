#ifndef SDEPTH_BETTI_HPP
#define SDEPTH_BETTI_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sdepth/common.hpp"
#include "sdepth/monomial.hpp"

namespace sdepth {

/// A finite simplicial complex on a subset of the variables. Faces are
/// bitmasks over positions in `vertices` and must be closed under subsets;
/// the empty face (mask 0) is present in every non-void complex.
struct SimplicialComplex {
    std::vector<int> vertices;        // sorted variable indices
    std::vector<std::uint32_t> faces; // sorted masks

    bool is_void() const { return faces.empty(); }
    int dim() const;  // -1 for {empty face}; meaningless for void complexes
};

/// Downward closure of the given facets.
SimplicialComplex complex_from_facets(std::vector<int> vertices,
                                      const std::vector<std::uint32_t>& facets);

bool downward_closed(const SimplicialComplex& c);

/// The squarefree complex at multidegree a: faces are the subsets S of
/// supp(a) with x^a / x^S in I. Void when a itself is outside I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a);

/// Ranks of reduced rational homology, exact. Entry [d+1] is the rank in
/// dimension d (so [0] is the rank in dimension -1). Empty for the void
/// complex.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& c);

/// f-vector alternating sum, dimensions -1 and up (reduced Euler characteristic).
long reduced_euler_characteristic(const SimplicialComplex& c);

/// Multigraded Betti ranks of a monomial ideal, scanned over the lcms of
/// generator subsets (the only multidegrees that can carry homology).
struct BettiTable {
    int n = 0;
    std::map<std::pair<int, Exponents>, int> ideal_ranks;  // (i, a) -> b_{i,a}(I)

    int rank_ideal(int i, const Exponents& a) const;
    int total_ideal(int i) const;       // b_i(I)
    int pd_ideal() const;               // largest i with b_i(I) != 0
    int pd_module() const { return pd_ideal() + 1; }  // pd(S/I)
    int depth_module() const { return n - pd_module(); }
};

BettiTable betti_numbers(const MonomialIdeal& I, const Limits& limits = {});

/// depth(S/I) = n - pd(S/I); the arbiter for every depth claim here.
int depth_oracle(const MonomialIdeal& I, const Limits& limits = {});

} // namespace sdepth

#endif
