#include "sdepth/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sdepth {

Monomial::Monomial(Exponents exponents) : e_(std::move(exponents)) {
    if (e_.empty())
        throw std::invalid_argument("monomial needs at least one variable");
    for (int x : e_)
        if (x < 0)
            throw std::invalid_argument("negative exponent");
}

Monomial Monomial::unit(int n) { return Monomial(Exponents(static_cast<size_t>(n), 0)); }

Monomial Monomial::variable(int n, int var) {
    Exponents e(static_cast<size_t>(n), 0);
    e.at(static_cast<size_t>(var)) = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Monomial::is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

bool Monomial::is_variable() const { return degree() == 1; }

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int j = 0; j < vars(); ++j)
        if (e_[static_cast<size_t>(j)] > 0) s.push_back(j);
    return s;
}

namespace {

void check_same_vars(const Monomial& u, const Monomial& v) {
    if (u.vars() != v.vars())
        throw std::invalid_argument("monomials live in different ambient rings");
}

} // namespace

bool divides(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    for (int j = 0; j < u.vars(); ++j)
        if (u.exponent(j) > v.exponent(j)) return false;
    return true;
}

Monomial gcd(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    Exponents e(static_cast<size_t>(u.vars()));
    for (int j = 0; j < u.vars(); ++j)
        e[static_cast<size_t>(j)] = std::min(u.exponent(j), v.exponent(j));
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    Exponents e(static_cast<size_t>(u.vars()));
    for (int j = 0; j < u.vars(); ++j)
        e[static_cast<size_t>(j)] = std::max(u.exponent(j), v.exponent(j));
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    Exponents e(static_cast<size_t>(u.vars()));
    for (int j = 0; j < u.vars(); ++j)
        e[static_cast<size_t>(j)] = u.exponent(j) + v.exponent(j);
    return Monomial(std::move(e));
}

Monomial quotient_by_gcd(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    Exponents e(static_cast<size_t>(u.vars()));
    for (int j = 0; j < u.vars(); ++j)
        e[static_cast<size_t>(j)] = std::max(u.exponent(j) - v.exponent(j), 0);
    return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
}

std::vector<Monomial> minimize_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const Monomial& g : gens) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Monomial& h) { return divides(h, g); });
        if (!redundant) minimal.push_back(g);
    }
    return minimal;
}

MonomialIdeal::MonomialIdeal(int ambient_n, std::vector<Monomial> gens) : n_(ambient_n) {
    if (ambient_n <= 0) throw std::invalid_argument("ambient variable count must be positive");
    for (const Monomial& g : gens)
        if (g.vars() != ambient_n)
            throw std::invalid_argument("generator does not match ambient ring");
    gens_ = minimize_generators(std::move(gens));
    if (gens_.empty()) throw std::invalid_argument("zero ideal is not representable");
    if (gens_.front().is_unit())
        throw std::invalid_argument("unit ideal is not representable as MonomialIdeal");
}

Exponents MonomialIdeal::exponent_caps() const {
    Exponents g(static_cast<size_t>(n_), 0);
    for (const Monomial& u : gens_)
        for (int j = 0; j < n_; ++j)
            g[static_cast<size_t>(j)] = std::max(g[static_cast<size_t>(j)], u.exponent(j));
    return g;
}

const MonomialIdeal& IdealOrUnit::ideal() const {
    if (!ideal_) throw std::logic_error("unit ideal has no generator representation");
    return *ideal_;
}

bool contains(const MonomialIdeal& I, const Monomial& a) {
    if (a.vars() != I.vars())
        throw std::invalid_argument("monomial does not match ambient ring");
    return std::any_of(I.generators().begin(), I.generators().end(),
                       [&](const Monomial& g) { return divides(g, a); });
}

IdealOrUnit colon(const MonomialIdeal& I, const Monomial& u) {
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const Monomial& g : I.generators())
        gens.push_back(quotient_by_gcd(g, u));
    gens = minimize_generators(std::move(gens));
    if (gens.front().is_unit()) return IdealOrUnit::unit();  // u was in I
    return MonomialIdeal(I.vars(), std::move(gens));
}

IdealOrUnit add(const MonomialIdeal& I, std::span<const Monomial> us) {
    std::vector<Monomial> gens(I.generators());
    for (const Monomial& u : us) {
        if (u.vars() != I.vars())
            throw std::invalid_argument("monomial does not match ambient ring");
        if (u.is_unit()) return IdealOrUnit::unit();
        gens.push_back(u);
    }
    return MonomialIdeal(I.vars(), std::move(gens));
}

IdealOrUnit add(const MonomialIdeal& I, const Monomial& u) {
    return add(I, std::span<const Monomial>(&u, 1));
}

MonomialIdeal drop_variable(const MonomialIdeal& I, int var) {
    if (var < 0 || var >= I.vars()) throw std::invalid_argument("variable index out of range");
    if (I.vars() == 1) throw std::invalid_argument("cannot drop the last variable");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const Monomial& g : I.generators()) {
        if (g.exponent(var) != 0)
            throw std::invalid_argument("generator involves the dropped variable");
        Exponents e = g.exponents();
        e.erase(e.begin() + var);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(I.vars() - 1, std::move(gens));
}

} // namespace sdepth
