#include "sdepth/theorems.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sdepth/betti.hpp"

namespace sdepth {

namespace {

// Next k-subset of {0..n-1} in ascending lexicographic order.
bool next_subset(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[static_cast<size_t>(i)] < n - k + i) {
            ++s[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

bool in_variable_ideal(const Monomial& g, const std::vector<int>& tau) {
    return std::any_of(tau.begin(), tau.end(), [&](int i) { return g.exponent(i) > 0; });
}

} // namespace

std::optional<CollapseWitness> find_principal_collapse(const AdmissibleOrder& o,
                                                       const Limits& limits) {
    const MonomialIdeal& I = o.ideal;
    const int n = I.vars();
    const int s = n - 1 - depth_oracle(I, limits);
    std::vector<int> tau(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) tau[static_cast<size_t>(i)] = i;
    bool more = true;
    while (more) {
        for (const Monomial& u : I.generators()) {
            if (in_variable_ideal(u, tau)) continue;
            const bool rest_inside =
                std::all_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) {
                    return g == u || in_variable_ideal(g, tau);
                });
            if (rest_inside) return CollapseWitness{tau, u};
        }
        more = s > 0 && next_subset(tau, n);
    }
    return std::nullopt;
}

bool check_collapse_witness(const MonomialIdeal& I, const CollapseWitness& w) {
    const int n = I.vars();
    std::vector<Monomial> tau_gens;
    for (int i : w.tau) tau_gens.push_back(Monomial::variable(n, i));

    std::vector<Monomial> left(I.generators());
    left.insert(left.end(), tau_gens.begin(), tau_gens.end());
    std::vector<Monomial> right(tau_gens);
    right.push_back(w.u);
    const MonomialIdeal lhs(n, std::move(left));
    const MonomialIdeal rhs(n, std::move(right));
    const auto inside = [](const MonomialIdeal& big, const MonomialIdeal& small) {
        return std::all_of(small.generators().begin(), small.generators().end(),
                           [&](const Monomial& g) { return contains(big, g); });
    };
    return inside(lhs, rhs) && inside(rhs, lhs);
}

DepthCodim2Verdict verify_depth_nminus2(const MonomialIdeal& I, const Limits& limits) {
    const int depth = depth_oracle(I, limits);
    if (depth != I.vars() - 2)
        throw std::invalid_argument("verify_depth_nminus2: depth(S/I) is not n-2");
    return DepthCodim2Verdict{depth, sdepth_exact(I, TargetKind::Quotient, limits)};
}

PipelineResult run_iterative_pipeline(const AdmissibleOrder& o) {
    const int n = o.vars();
    std::vector<int> all_vars(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) all_vars[static_cast<size_t>(j)] = j;

    PipelineResult result;
    const Monomial& u1 = o.order.front();
    MonomialIdeal prefix(n, {u1});
    StanleyDecomposition current{
        TargetKind::Quotient, prefix,
        staircase_quotient_pieces(Monomial::unit(n), all_vars, u1)};
    result.steps.push_back(
        PipelineStep{prefix, current, -1, sdepth_of_decomposition(current), n - 1});

    int max_nj = 0;
    for (int k = 1; k < o.size(); ++k) {
        const Monomial& u = o.order[static_cast<size_t>(k)];
        const auto& cvars = o.colon_vars[static_cast<size_t>(k)];
        auto next = apply_quotient_transform(current, u, cvars);
        if (!next) {
            result.failed_step = k;
            return result;
        }
        const auto slot = find_transform_slot(current, u, cvars);
        current = std::move(*next);
        max_nj = std::max(max_nj, static_cast<int>(cvars.size()));
        result.steps.push_back(PipelineStep{current.ideal, current, *slot,
                                            sdepth_of_decomposition(current),
                                            n - max_nj - 1});
    }
    return result;
}

int sdepth_after_adding_variable(const MonomialIdeal& I, int var, const Limits& limits) {
    const int n = I.vars();
    std::vector<Monomial> survivors;
    for (const Monomial& g : I.generators())
        if (g.exponent(var) == 0) survivors.push_back(g);
    if (survivors.empty()) return n - 1;  // (I, x_i) = (x_i)
    const MonomialIdeal J = drop_variable(MonomialIdeal(n, std::move(survivors)), var);
    return sdepth_exact(J, TargetKind::Quotient, limits);
}

ConjectureReport conjecture_scan(const MonomialIdeal& I, bool strong, const Limits& limits) {
    const int n = I.vars();
    ConjectureReport report{I, strong, depth_oracle(I, limits), std::nullopt, {}, std::nullopt};
    if (strong) report.base_sdepth = sdepth_exact(I, TargetKind::Quotient, limits);
    for (int i = 0; i < n; ++i) {
        ConjectureScanEntry entry{i, 0, std::nullopt, false};
        if (contains(I, Monomial::variable(n, i))) {
            // x_i is a minimal generator: (I, x_i) = I, both conditions trivial.
            entry.depth_added = report.base_depth;
            entry.sdepth_added = report.base_sdepth;
            entry.qualifies = true;
        } else {
            const MonomialIdeal added = add(I, Monomial::variable(n, i)).ideal();
            entry.depth_added = depth_oracle(added, limits);
            entry.qualifies = entry.depth_added >= report.base_depth;
            if (strong) {
                entry.sdepth_added = sdepth_after_adding_variable(I, i, limits);
                entry.qualifies = entry.qualifies && *entry.sdepth_added <= *report.base_sdepth;
            }
        }
        if (entry.qualifies && !report.witness) report.witness = i;
        report.per_variable.push_back(std::move(entry));
    }
    return report;
}

std::optional<int> conjecture_witness(const MonomialIdeal& I, const Limits& limits) {
    const int n = I.vars();
    const int base = depth_oracle(I, limits);
    for (int i = 0; i < n; ++i) {
        if (contains(I, Monomial::variable(n, i))) return i;
        if (depth_oracle(add(I, Monomial::variable(n, i)).ideal(), limits) >= base) return i;
    }
    return std::nullopt;
}

std::optional<int> strong_conjecture_witness(const MonomialIdeal& I, const Limits& limits) {
    const int n = I.vars();
    const int base_depth = depth_oracle(I, limits);
    std::optional<int> base_sdepth;
    for (int i = 0; i < n; ++i) {
        if (contains(I, Monomial::variable(n, i))) return i;
        const MonomialIdeal added = add(I, Monomial::variable(n, i)).ideal();
        if (depth_oracle(added, limits) < base_depth) continue;
        if (!base_sdepth) base_sdepth = sdepth_exact(I, TargetKind::Quotient, limits);
        if (sdepth_after_adding_variable(I, i, limits) <= *base_sdepth) return i;
    }
    return std::nullopt;
}

std::optional<int> combinatorial_witness(const AdmissibleOrder& o) {
    const int n = o.vars();
    int min_free = n;  // |Z_1| = n
    for (int k = 1; k < o.size(); ++k) min_free = std::min(min_free, n - o.colon_count(k));

    for (int i = 0; i < n; ++i) {
        bool blocked = false;
        for (int k = 0; k < o.size() && !blocked; ++k) {
            const int free_count = k == 0 ? n : n - o.colon_count(k);
            if (free_count != min_free) continue;
            if (o.order[static_cast<size_t>(k)].exponent(i) > 0) continue;
            const bool free_at_k =
                k == 0 || !std::binary_search(o.colon_vars[static_cast<size_t>(k)].begin(),
                                              o.colon_vars[static_cast<size_t>(k)].end(), i);
            blocked = free_at_k;
        }
        if (!blocked) return i;
    }
    return std::nullopt;
}

ChainVerdict conditional_chain_verify(const MonomialIdeal& I, const Limits& limits) {
    ChainVerdict verdict{true, std::nullopt, {}};
    MonomialIdeal current = I;
    while (true) {
        const int n = current.vars();
        ChainLevel level{n,
                         current,
                         std::nullopt,
                         depth_oracle(current, limits),
                         sdepth_exact(current, TargetKind::Quotient, limits),
                         -1,
                         -1,
                         -1,
                         -1,
                         true};
        if (current.is_principal()) {
            level.inequalities_hold = level.sdepth_full == n - 1 && level.depth_full == n - 1;
            verdict.certified = verdict.certified && level.inequalities_hold;
            verdict.levels.push_back(std::move(level));
            return verdict;
        }

        const auto witness = strong_conjecture_witness(current, limits);
        if (!witness) {
            verdict.certified = false;
            verdict.stuck_n = n;
            verdict.levels.push_back(std::move(level));
            return verdict;
        }
        level.witness = witness;
        const int i = *witness;

        const MonomialIdeal added = add(current, Monomial::variable(n, i)).ideal();
        level.depth_added = depth_oracle(added, limits);
        level.sdepth_added = sdepth_exact(added, TargetKind::Quotient, limits);

        // J: generators of I not divisible by x_i, in n-1 variables. Never
        // empty here: a non-principal I with all generators divisible by x_i
        // would give sdepth(S/(I,x_i)) = n-1 > sdepth(S/I), which the strong
        // witness condition already excludes.
        std::vector<Monomial> survivors;
        for (const Monomial& g : current.generators())
            if (g.exponent(i) == 0) survivors.push_back(g);
        const MonomialIdeal J = drop_variable(MonomialIdeal(n, std::move(survivors)), i);
        level.depth_sub = depth_oracle(J, limits);
        level.sdepth_sub = sdepth_exact(J, TargetKind::Quotient, limits);

        level.inequalities_hold = level.sdepth_full >= level.sdepth_added &&
                                  level.sdepth_added == level.sdepth_sub &&
                                  level.sdepth_sub >= level.depth_sub &&
                                  level.depth_sub == level.depth_added &&
                                  level.depth_added >= level.depth_full;
        verdict.certified = verdict.certified && level.inequalities_hold;
        verdict.levels.push_back(level);
        current = J;
    }
}

ExactSequenceReport exact_sequence_checks(const MonomialIdeal& I, int var,
                                          const Limits& limits) {
    const int n = I.vars();
    ExactSequenceReport r{var,  0,     0,     0,     0,    std::nullopt,
                          std::nullopt, false, false, false, false};
    r.depth_base = depth_oracle(I, limits);
    r.sdepth_base = sdepth_exact(I, TargetKind::Quotient, limits);

    const Monomial xi = Monomial::variable(n, var);
    const MonomialIdeal added = add(I, xi).ideal();
    r.depth_added = depth_oracle(added, limits);
    r.sdepth_added = sdepth_exact(added, TargetKind::Quotient, limits);

    const IdealOrUnit colon_ideal = colon(I, xi);
    if (!colon_ideal.is_unit()) {
        r.depth_colon = depth_oracle(colon_ideal.ideal(), limits);
        r.sdepth_colon = sdepth_exact(colon_ideal.ideal(), TargetKind::Quotient, limits);
    }

    // Zero module (unit colon): both invariants are +infinity.
    const int depth_colon = r.depth_colon.value_or(n + 1);
    const int sdepth_colon = r.sdepth_colon.value_or(n + 1);
    r.depth_min_inequality = r.depth_base >= std::min(depth_colon, r.depth_added);
    r.sdepth_min_inequality = r.sdepth_base >= std::min(sdepth_colon, r.sdepth_added);
    r.depth_colon_monotone = depth_colon >= r.depth_base;
    r.sdepth_colon_monotone = sdepth_colon >= r.sdepth_base;
    return r;
}

namespace {

std::vector<Monomial> monomial_pool(int n, int max_degree) {
    std::vector<Monomial> pool;
    Exponents e(static_cast<size_t>(n), 0);
    while (true) {
        int d = 0;
        for (int x : e) d += x;
        if (d >= 1 && d <= max_degree) pool.emplace_back(e);
        int j = n - 1;
        while (j >= 0 && e[static_cast<size_t>(j)] == max_degree) e[static_cast<size_t>(j--)] = 0;
        if (j < 0) break;
        ++e[static_cast<size_t>(j)];
    }
    std::sort(pool.begin(), pool.end(), canonical_less);
    return pool;
}

} // namespace

std::pair<MonomialIdeal, AdmissibleOrder> random_linear_quotient_ideal(
    const RandomIdealParams& params, std::uint64_t seed) {
    if (params.n < 1 || params.m < 1 || params.max_degree < 1)
        throw std::invalid_argument("random_linear_quotient_ideal: bad parameters");
    const std::vector<Monomial> pool = monomial_pool(params.n, params.max_degree);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);

    std::vector<Monomial> order{pool[pick(rng)]};
    std::vector<std::vector<int>> colon_vars{{}};
    while (static_cast<int>(order.size()) < params.m) {
        bool extended = false;
        for (int attempt = 0; attempt < params.retry_cap && !extended; ++attempt) {
            const Monomial& u = pool[pick(rng)];
            const MonomialIdeal prefix(params.n, order);
            if (contains(prefix, u)) continue;
            const bool breaks_minimality =
                std::any_of(order.begin(), order.end(),
                            [&](const Monomial& g) { return divides(u, g); });
            if (breaks_minimality) continue;
            const auto vars = colon_variable_set(prefix, u);
            if (!vars) continue;
            order.push_back(u);
            colon_vars.push_back(*vars);
            extended = true;
        }
        if (!extended) break;  // return the shorter ideal built so far
    }
    MonomialIdeal ideal(params.n, order);
    AdmissibleOrder admissible{ideal, std::move(order), std::move(colon_vars)};
    return {std::move(ideal), std::move(admissible)};
}

} // namespace sdepth
