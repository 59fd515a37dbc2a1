#ifndef SDEPTH_MONOMIAL_HPP
#define SDEPTH_MONOMIAL_HPP

#include <optional>
#include <span>
#include <vector>

namespace sdepth {

using Exponents = std::vector<int>;

/// A monomial in a fixed ambient ring K[x_1..x_n], stored as its exponent
/// vector. Index 0 is x_1. Exponents are small non-negative machine ints.
class Monomial {
public:
    explicit Monomial(Exponents exponents);

    static Monomial unit(int n);
    static Monomial variable(int n, int var);  // x_{var+1}

    int vars() const { return static_cast<int>(e_.size()); }
    int exponent(int var) const { return e_[static_cast<size_t>(var)]; }
    const Exponents& exponents() const { return e_; }

    int degree() const;
    bool is_unit() const;
    bool is_variable() const;              // exactly one exponent, equal to 1
    std::vector<int> support() const;      // variables with positive exponent

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Exponents e_;
};

bool divides(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial operator*(const Monomial& u, const Monomial& v);

/// u / gcd(u, v): componentwise max(u_j - v_j, 0).
Monomial quotient_by_gcd(const Monomial& u, const Monomial& v);

/// Canonical order: total degree, then lexicographic on exponent vectors.
/// Used everywhere a deterministic generator ordering is needed.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Reduces a generating multiset to the unique minimal generating set:
/// drops duplicates and anything divisible by another element, then sorts
/// canonically. Unit monomials are kept (callers decide what they mean).
std::vector<Monomial> minimize_generators(std::vector<Monomial> gens);

/// A proper non-zero monomial ideal, held by its minimal generating set in
/// canonical order. The unit ideal and the zero ideal are not representable.
class MonomialIdeal {
public:
    /// Minimizes `gens`. Throws std::invalid_argument if the result would be
    /// empty, contain the unit monomial, or mix ambient sizes.
    MonomialIdeal(int ambient_n, std::vector<Monomial> gens);

    int vars() const { return n_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const std::vector<Monomial>& generators() const { return gens_; }
    const Monomial& generator(int k) const { return gens_[static_cast<size_t>(k)]; }
    bool is_principal() const { return gens_.size() == 1; }

    /// Per-variable exponent cap: max exponent of x_j over the generators.
    Exponents exponent_caps() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_;
    std::vector<Monomial> gens_;
};

/// Result of operations that may collapse to the whole ring. The unit ideal
/// is deliberately not a MonomialIdeal, so every caller must branch.
class IdealOrUnit {
public:
    static IdealOrUnit unit() { return IdealOrUnit(); }
    IdealOrUnit(MonomialIdeal ideal) : ideal_(std::move(ideal)) {}

    bool is_unit() const { return !ideal_.has_value(); }
    const MonomialIdeal& ideal() const;

private:
    IdealOrUnit() = default;
    std::optional<MonomialIdeal> ideal_;
};

/// Membership: true iff some generator divides a.
bool contains(const MonomialIdeal& I, const Monomial& a);

/// (I : u), minimized. Unit outcome exactly when u is in I.
IdealOrUnit colon(const MonomialIdeal& I, const Monomial& u);

/// I + (us), minimized. Unit outcome when a unit monomial is added.
IdealOrUnit add(const MonomialIdeal& I, std::span<const Monomial> us);
IdealOrUnit add(const MonomialIdeal& I, const Monomial& u);

/// Re-indexes I into n-1 variables by deleting variable `var`. Throws if a
/// generator involves it.
MonomialIdeal drop_variable(const MonomialIdeal& I, int var);

} // namespace sdepth

#endif
