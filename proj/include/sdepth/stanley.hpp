#ifndef SDEPTH_STANLEY_HPP
#define SDEPTH_STANLEY_HPP

#include <optional>
#include <span>
#include <vector>

#include "sdepth/common.hpp"
#include "sdepth/monomial.hpp"

namespace sdepth {

enum class TargetKind { Ideal, Quotient };

/// One Stanley space v * K[Z]: all monomials v*w with supp(w) inside Z.
struct StanleyPiece {
    Monomial v;
    std::vector<int> z;  // sorted variable indices

    friend bool operator==(const StanleyPiece&, const StanleyPiece&) = default;
};

/// A claimed Stanley decomposition of I or of S/I. Nothing is verified at
/// construction; verify_decomposition is the judge.
struct StanleyDecomposition {
    TargetKind kind;
    MonomialIdeal ideal;
    std::vector<StanleyPiece> pieces;
};

/// Exhaustive check on the reduction box: every monomial of the target must
/// lie in exactly one piece, every other monomial in none. The box bound is
/// max(ideal cap, piece coefficient cap) + 1 per coordinate, which determines
/// all membership indicators everywhere.
bool verify_decomposition(const StanleyDecomposition& d);

/// Same check on an explicit inclusive box; used to validate the default
/// box reduction against larger boxes.
bool verify_decomposition_on_box(const StanleyDecomposition& d, const Exponents& box);

/// The per-coordinate inclusive bound used by verify_decomposition.
Exponents verification_box(const StanleyDecomposition& d);

/// min |Z_i|. Throws std::invalid_argument on an empty piece list.
int sdepth_of_decomposition(const StanleyDecomposition& d);

/// The finite poset that controls Stanley depth: exponent vectors below the
/// per-variable cap g, filtered by membership (Ideal) or non-membership
/// (Quotient). Points are sorted lexicographically.
struct CharacteristicPoset {
    MonomialIdeal ideal;
    TargetKind kind;
    Exponents cap;                  // g_j = max exponent of x_j over G(I)
    std::vector<Exponents> points;  // sorted

    int vars() const { return ideal.vars(); }
};

CharacteristicPoset characteristic_poset(const MonomialIdeal& I, TargetKind kind);

/// Closed interval [lo, hi] in the componentwise order.
struct Interval {
    Exponents lo, hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
    CharacteristicPoset poset;
    std::vector<Interval> intervals;
};

/// True iff the intervals have poset-point endpoints, are pairwise disjoint
/// as boxes, and cover every poset point.
bool valid_partition(const IntervalPartition& p);

/// Backtracking exact-cover search for a partition whose every interval top
/// has at least `t` coordinates at the cap. Deterministic: always covers the
/// lexicographically smallest uncovered point, trying tops with more capped
/// coordinates first.
std::optional<IntervalPartition> find_interval_partition(const CharacteristicPoset& poset,
                                                         int t, const Limits& limits = {});

/// Exact Stanley depth of the chosen target, via the poset search with t
/// descending from n. t = 0 always succeeds with singleton intervals.
int sdepth_exact(const MonomialIdeal& I, TargetKind kind, const Limits& limits = {});

/// Expands a partition into the Stanley decomposition it encodes: interval
/// [a, b] contributes pieces (x^c, Z_b) with Z_b = {j : b_j = g_j}, where c
/// runs over [a, b] with the Z_b coordinates frozen at a. The output passes
/// verify_decomposition.
StanleyDecomposition partition_to_decomposition(const IntervalPartition& p);

/// Pieces of the staircase decomposition of v0 * (K[Z]/(w0)), where w0 is a
/// monomial supported on Z: splitting along the support variables of w0 in
/// ascending order, each piece frees all of Z but one variable. Empty when
/// w0 is the unit (the quotient is zero).
std::vector<StanleyPiece> staircase_quotient_pieces(const Monomial& v0,
                                                    std::span<const int> z,
                                                    const Monomial& w0);

/// Smallest index of a piece (v, Z) with Z = complement(colon_vars) and
/// u inside v*K[Z], i.e. v | u and supp(u/v) within Z. Such a piece is what
/// the one-step quotient transform consumes.
std::optional<int> find_transform_slot(const StanleyDecomposition& d, const Monomial& u,
                                       std::span<const int> colon_vars);

/// One-step transform of a decomposition of S/I into one of S/(I, u), valid
/// when (I : u) is generated exactly by the variables in colon_vars: the slot
/// piece v*K[Z] is replaced by the staircase of v*(K[Z]/(u/v)), everything
/// else is kept. Returns nullopt when no slot qualifies. The result's sdepth
/// is >= min(sdepth(d), n - |colon_vars| - 1).
std::optional<StanleyDecomposition> apply_quotient_transform(const StanleyDecomposition& d,
                                                             const Monomial& u,
                                                             std::span<const int> colon_vars);

} // namespace sdepth

#endif
