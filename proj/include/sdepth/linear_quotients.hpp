#ifndef SDEPTH_LINEAR_QUOTIENTS_HPP
#define SDEPTH_LINEAR_QUOTIENTS_HPP

#include <optional>
#include <vector>

#include "sdepth/common.hpp"
#include "sdepth/monomial.hpp"
#include "sdepth/stanley.hpp"

namespace sdepth {

/// An ordering u_1..u_m of the minimal generators under which every colon
/// ideal (u_1..u_{k-1}) : u_k is generated by variables, together with those
/// variable sets. Step indices are 0-based: colon_vars[0] is empty by
/// convention, colon_vars[k] is the sorted variable set of step k+1.
struct AdmissibleOrder {
    MonomialIdeal ideal;
    std::vector<Monomial> order;
    std::vector<std::vector<int>> colon_vars;

    int vars() const { return ideal.vars(); }
    int size() const { return static_cast<int>(order.size()); }

    /// |colon_vars[k]|; 0 for the first step.
    int colon_count(int k) const { return static_cast<int>(colon_vars[static_cast<size_t>(k)].size()); }

    /// Z_{k+1}: all variables for k = 0, else the complement of colon_vars[k].
    std::vector<int> free_vars(int k) const;
};

/// Recomputes every colon from scratch and compares against the stored sets.
bool check_admissible_order(const AdmissibleOrder& o);

/// The variable set generating (prefix : u), if the colon is generated by
/// variables; nullopt otherwise. Throws std::invalid_argument when u lies in
/// prefix (the colon would be the unit ideal).
std::optional<std::vector<int>> colon_variable_set(const MonomialIdeal& prefix,
                                                   const Monomial& u);

/// Searches for an admissible order by DFS over subsets of the generators
/// (admissibility of appending u depends only on the chosen subset). Dead
/// subsets are memoized; extensions are tried in canonical generator order,
/// so the result is deterministic. nullopt iff I has no linear quotients.
std::optional<AdmissibleOrder> find_admissible_order(const MonomialIdeal& I,
                                                     const Limits& limits = {});

/// Test oracle: every admissible order of I. Exponential; keep m small.
std::vector<AdmissibleOrder> all_admissible_orders(const MonomialIdeal& I,
                                                   const Limits& limits = {});

/// The direct-sum decomposition I = u_1 K[Z_1] + u_2 K[Z_2] + ... read off
/// an admissible order. Target kind is Ideal.
StanleyDecomposition linear_quotient_decomposition(const AdmissibleOrder& o);

/// depth(S/I) = n - max_k n_k - 1 over the colon sizes, n - 1 for principal.
int depth_via_linear_quotients(const AdmissibleOrder& o);

/// Result of adjoining a variable: an admissible order for (x_i, I) in the
/// same ring, and one for J = (generators of I not divisible by x_i) viewed
/// in n-1 variables. `restricted` is empty when every generator of I is
/// divisible by x_i, in which case (x_i, I) = (x_i).
struct VariableAdjunction {
    AdmissibleOrder extended;
    std::optional<AdmissibleOrder> restricted;
};

/// Adjoins x_i to an ideal with linear quotients. The surviving generators
/// keep their relative order; step k of the extended order has colon set
/// {i} joined with the original step's set, and the restricted order drops i
/// from each set. Throws std::invalid_argument if x_i is itself in I.
VariableAdjunction add_variable(const AdmissibleOrder& o, int var);

} // namespace sdepth

#endif
