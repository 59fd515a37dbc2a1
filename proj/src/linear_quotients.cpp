#include "sdepth/linear_quotients.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sdepth {

std::vector<int> AdmissibleOrder::free_vars(int k) const {
    std::vector<int> z;
    const auto& barred = colon_vars[static_cast<size_t>(k)];
    for (int j = 0; j < vars(); ++j)
        if (!std::binary_search(barred.begin(), barred.end(), j)) z.push_back(j);
    return z;
}

std::optional<std::vector<int>> colon_variable_set(const MonomialIdeal& prefix,
                                                   const Monomial& u) {
    if (contains(prefix, u))
        throw std::invalid_argument("colon_variable_set: u lies in the prefix ideal");
    const IdealOrUnit c = colon(prefix, u);
    std::vector<int> vars;
    for (const Monomial& g : c.ideal().generators()) {
        if (!g.is_variable()) return std::nullopt;
        vars.push_back(g.support().front());
    }
    std::sort(vars.begin(), vars.end());
    return vars;
}

namespace {

MonomialIdeal subset_ideal(const MonomialIdeal& I, std::uint32_t mask) {
    std::vector<Monomial> gens;
    for (int k = 0; k < I.generator_count(); ++k)
        if (mask & (1u << k)) gens.push_back(I.generator(k));
    return MonomialIdeal(I.vars(), std::move(gens));
}

AdmissibleOrder build_order(const MonomialIdeal& I, const std::vector<int>& picks,
                            std::vector<std::vector<int>> colon_vars) {
    std::vector<Monomial> order;
    order.reserve(picks.size());
    for (int k : picks) order.push_back(I.generator(k));
    return AdmissibleOrder{I, std::move(order), std::move(colon_vars)};
}

bool order_dfs(const MonomialIdeal& I, std::uint32_t mask, std::vector<int>& picks,
               std::vector<std::vector<int>>& colon_vars,
               std::unordered_set<std::uint32_t>& dead) {
    const int m = I.generator_count();
    if (static_cast<int>(picks.size()) == m) return true;
    if (dead.count(mask)) return false;
    for (int k = 0; k < m; ++k) {
        if (mask & (1u << k)) continue;
        std::optional<std::vector<int>> vars;
        if (mask == 0) {
            vars.emplace();  // first generator: no colon condition
        } else {
            vars = colon_variable_set(subset_ideal(I, mask), I.generator(k));
            if (!vars) continue;
        }
        picks.push_back(k);
        colon_vars.push_back(std::move(*vars));
        if (order_dfs(I, mask | (1u << k), picks, colon_vars, dead)) return true;
        picks.pop_back();
        colon_vars.pop_back();
    }
    dead.insert(mask);
    return false;
}

} // namespace

std::optional<AdmissibleOrder> find_admissible_order(const MonomialIdeal& I,
                                                     const Limits& limits) {
    if (I.generator_count() > limits.max_order_generators)
        throw resource_limit_error("find_admissible_order: generator cap exceeded");
    std::vector<int> picks;
    std::vector<std::vector<int>> colon_vars;
    std::unordered_set<std::uint32_t> dead;
    if (!order_dfs(I, 0, picks, colon_vars, dead)) return std::nullopt;
    return build_order(I, picks, std::move(colon_vars));
}

namespace {

void enumerate_orders(const MonomialIdeal& I, std::uint32_t mask, std::vector<int>& picks,
                      std::vector<std::vector<int>>& colon_vars,
                      std::vector<AdmissibleOrder>& out) {
    const int m = I.generator_count();
    if (static_cast<int>(picks.size()) == m) {
        out.push_back(build_order(I, picks, colon_vars));
        return;
    }
    for (int k = 0; k < m; ++k) {
        if (mask & (1u << k)) continue;
        std::optional<std::vector<int>> vars;
        if (mask == 0) {
            vars.emplace();
        } else {
            vars = colon_variable_set(subset_ideal(I, mask), I.generator(k));
            if (!vars) continue;
        }
        picks.push_back(k);
        colon_vars.push_back(std::move(*vars));
        enumerate_orders(I, mask | (1u << k), picks, colon_vars, out);
        picks.pop_back();
        colon_vars.pop_back();
    }
}

} // namespace

std::vector<AdmissibleOrder> all_admissible_orders(const MonomialIdeal& I,
                                                   const Limits& limits) {
    if (I.generator_count() > limits.max_order_generators)
        throw resource_limit_error("all_admissible_orders: generator cap exceeded");
    std::vector<AdmissibleOrder> out;
    std::vector<int> picks;
    std::vector<std::vector<int>> colon_vars;
    enumerate_orders(I, 0, picks, colon_vars, out);
    return out;
}

bool check_admissible_order(const AdmissibleOrder& o) {
    const int m = o.size();
    if (m != o.ideal.generator_count()) return false;
    if (static_cast<int>(o.colon_vars.size()) != m) return false;
    std::vector<Monomial> sorted(o.order);
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    if (sorted != o.ideal.generators()) return false;
    if (!o.colon_vars[0].empty()) return false;
    for (int k = 1; k < m; ++k) {
        std::vector<Monomial> prefix(o.order.begin(), o.order.begin() + k);
        const auto vars =
            colon_variable_set(MonomialIdeal(o.vars(), std::move(prefix)), o.order[static_cast<size_t>(k)]);
        if (!vars || *vars != o.colon_vars[static_cast<size_t>(k)]) return false;
        if (vars->empty()) return false;
    }
    return true;
}

StanleyDecomposition linear_quotient_decomposition(const AdmissibleOrder& o) {
    std::vector<StanleyPiece> pieces;
    pieces.reserve(static_cast<size_t>(o.size()));
    for (int k = 0; k < o.size(); ++k)
        pieces.push_back(StanleyPiece{o.order[static_cast<size_t>(k)], o.free_vars(k)});
    return StanleyDecomposition{TargetKind::Ideal, o.ideal, std::move(pieces)};
}

int depth_via_linear_quotients(const AdmissibleOrder& o) {
    if (o.size() == 1) return o.vars() - 1;
    int max_nj = 0;
    for (int k = 1; k < o.size(); ++k) max_nj = std::max(max_nj, o.colon_count(k));
    return o.vars() - max_nj - 1;
}

VariableAdjunction add_variable(const AdmissibleOrder& o, int var) {
    const int n = o.vars();
    if (var < 0 || var >= n) throw std::invalid_argument("variable index out of range");
    if (contains(o.ideal, Monomial::variable(n, var)))
        throw std::invalid_argument("add_variable: x_i already lies in I");

    // Surviving generators keep their relative order behind x_i.
    std::vector<Monomial> ext_order{Monomial::variable(n, var)};
    std::vector<std::vector<int>> ext_colon{{}};
    std::vector<Monomial> sub_order;
    std::vector<std::vector<int>> sub_colon;
    for (int k = 0; k < o.size(); ++k) {
        const Monomial& u = o.order[static_cast<size_t>(k)];
        if (u.exponent(var) > 0) continue;
        const bool first_survivor = sub_order.empty();

        std::vector<int> ext_vars = first_survivor ? std::vector<int>{}
                                                   : o.colon_vars[static_cast<size_t>(k)];
        if (!std::binary_search(ext_vars.begin(), ext_vars.end(), var)) {
            ext_vars.push_back(var);
            std::sort(ext_vars.begin(), ext_vars.end());
        }
        ext_order.push_back(u);
        ext_colon.push_back(std::move(ext_vars));

        std::vector<int> sub_vars;
        if (!first_survivor) {
            for (int j : o.colon_vars[static_cast<size_t>(k)]) {
                if (j == var) continue;
                sub_vars.push_back(j < var ? j : j - 1);
            }
        }
        Exponents e = u.exponents();
        e.erase(e.begin() + var);
        sub_order.emplace_back(std::move(e));
        sub_colon.push_back(std::move(sub_vars));
    }

    std::vector<Monomial> ext_gens(ext_order);
    AdmissibleOrder extended{MonomialIdeal(n, std::move(ext_gens)), std::move(ext_order),
                             std::move(ext_colon)};

    std::optional<AdmissibleOrder> restricted;
    if (!sub_order.empty()) {
        std::vector<Monomial> sub_gens(sub_order);
        restricted = AdmissibleOrder{MonomialIdeal(n - 1, std::move(sub_gens)),
                                     std::move(sub_order), std::move(sub_colon)};
    }
    return VariableAdjunction{std::move(extended), std::move(restricted)};
}

} // namespace sdepth
