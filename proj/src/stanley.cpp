#include "sdepth/stanley.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdepth {

namespace {

// Odometer over the inclusive box [lo, hi]; returns false after the last point.
bool next_point(Exponents& a, const Exponents& lo, const Exponents& hi) {
    for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
        auto sj = static_cast<size_t>(j);
        if (a[sj] < hi[sj]) {
            ++a[sj];
            std::fill(a.begin() + j + 1, a.end(), 0);
            for (size_t t = sj + 1; t < a.size(); ++t) a[t] = lo[t];
            return true;
        }
    }
    return false;
}

struct PieceMask {
    const Monomial* v;
    std::vector<char> in_z;
};

std::vector<PieceMask> piece_masks(const StanleyDecomposition& d) {
    std::vector<PieceMask> masks;
    masks.reserve(d.pieces.size());
    const int n = d.ideal.vars();
    for (const StanleyPiece& p : d.pieces) {
        if (p.v.vars() != n) throw std::invalid_argument("piece coefficient has wrong arity");
        std::vector<char> z(static_cast<size_t>(n), 0);
        for (int j : p.z) {
            if (j < 0 || j >= n) throw std::invalid_argument("piece variable index out of range");
            z[static_cast<size_t>(j)] = 1;
        }
        masks.push_back(PieceMask{&p.v, std::move(z)});
    }
    return masks;
}

bool piece_contains(const PieceMask& p, const Exponents& a) {
    for (size_t j = 0; j < a.size(); ++j) {
        const int vj = p.v->exponent(static_cast<int>(j));
        if (a[j] < vj) return false;
        if (a[j] > vj && !p.in_z[j]) return false;
    }
    return true;
}

int count_capped(const Exponents& b, const Exponents& cap) {
    int c = 0;
    for (size_t j = 0; j < b.size(); ++j)
        if (b[j] == cap[j]) ++c;
    return c;
}

bool leq(const Exponents& a, const Exponents& b) {
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

} // namespace

Exponents verification_box(const StanleyDecomposition& d) {
    Exponents box = d.ideal.exponent_caps();
    for (const StanleyPiece& p : d.pieces)
        for (int j = 0; j < d.ideal.vars(); ++j)
            box[static_cast<size_t>(j)] = std::max(box[static_cast<size_t>(j)], p.v.exponent(j));
    for (int& b : box) ++b;
    return box;
}

bool verify_decomposition_on_box(const StanleyDecomposition& d, const Exponents& box) {
    const auto masks = piece_masks(d);
    const Exponents lo(box.size(), 0);
    Exponents a = lo;
    do {
        const bool in_ideal = contains(d.ideal, Monomial(a));
        const bool in_target = (d.kind == TargetKind::Ideal) ? in_ideal : !in_ideal;
        int cover = 0;
        for (const PieceMask& p : masks) {
            if (piece_contains(p, a) && ++cover > 1) break;
        }
        if (cover != (in_target ? 1 : 0)) return false;
    } while (next_point(a, lo, box));
    return true;
}

bool verify_decomposition(const StanleyDecomposition& d) {
    return verify_decomposition_on_box(d, verification_box(d));
}

int sdepth_of_decomposition(const StanleyDecomposition& d) {
    if (d.pieces.empty()) throw std::invalid_argument("decomposition has no pieces");
    size_t best = d.pieces.front().z.size();
    for (const StanleyPiece& p : d.pieces) best = std::min(best, p.z.size());
    return static_cast<int>(best);
}

CharacteristicPoset characteristic_poset(const MonomialIdeal& I, TargetKind kind) {
    const Exponents cap = I.exponent_caps();
    const Exponents lo(cap.size(), 0);
    std::vector<Exponents> points;
    Exponents a = lo;
    do {
        const bool in_ideal = contains(I, Monomial(a));
        if ((kind == TargetKind::Ideal) ? in_ideal : !in_ideal) points.push_back(a);
    } while (next_point(a, lo, cap));
    return CharacteristicPoset{I, kind, cap, std::move(points)};
}

namespace {

class PartitionSearch {
public:
    PartitionSearch(const CharacteristicPoset& poset, int t, const Limits& limits)
        : poset_(poset), t_(t), budget_(limits.max_partition_nodes),
          covered_(poset.points.size(), 0) {}

    std::optional<std::vector<Interval>> run() {
        if (!feasible()) return std::nullopt;
        if (!cover_next()) return std::nullopt;
        return std::move(intervals_);
    }

private:
    int index_of(const Exponents& p) const {
        const auto it = std::lower_bound(poset_.points.begin(), poset_.points.end(), p);
        if (it == poset_.points.end() || *it != p) return -1;
        return static_cast<int>(it - poset_.points.begin());
    }

    // Every point must see at least one potential top, or t is hopeless.
    bool feasible() const {
        const auto& pts = poset_.points;
        for (size_t i = 0; i < pts.size(); ++i) {
            bool ok = false;
            for (size_t k = i; k < pts.size() && !ok; ++k)
                ok = leq(pts[i], pts[k]) && count_capped(pts[k], poset_.cap) >= t_;
            if (!ok) return false;
        }
        return true;
    }

    // Indices of the poset points inside [lo, hi]; empty result on any
    // covered point (the caller only asks about fully free boxes).
    bool box_points(const Exponents& lo, const Exponents& hi, std::vector<int>& out) const {
        out.clear();
        Exponents c = lo;
        do {
            const int idx = index_of(c);
            if (idx < 0 || covered_[static_cast<size_t>(idx)]) return false;
            out.push_back(idx);
        } while (next_point(c, lo, hi));
        return true;
    }

    bool cover_next() {
        if (budget_-- == 0)
            throw resource_limit_error("interval partition search: node budget exhausted");
        const auto& pts = poset_.points;
        size_t first = 0;
        while (first < pts.size() && covered_[first]) ++first;
        if (first == pts.size()) return true;

        // Candidate tops above the forced bottom, most capped coordinates first.
        std::vector<std::pair<int, int>> cands;  // (-capped, index)
        for (size_t k = first; k < pts.size(); ++k) {
            if (covered_[k] || !leq(pts[first], pts[k])) continue;
            const int capped = count_capped(pts[k], poset_.cap);
            if (capped >= t_) cands.emplace_back(-capped, static_cast<int>(k));
        }
        std::sort(cands.begin(), cands.end());

        std::vector<int> box;
        for (const auto& [neg_capped, k] : cands) {
            (void)neg_capped;
            if (!box_points(pts[first], pts[static_cast<size_t>(k)], box)) continue;
            for (int idx : box) covered_[static_cast<size_t>(idx)] = 1;
            intervals_.push_back(Interval{pts[first], pts[static_cast<size_t>(k)]});
            if (cover_next()) return true;
            intervals_.pop_back();
            for (int idx : box) covered_[static_cast<size_t>(idx)] = 0;
        }
        return false;
    }

    const CharacteristicPoset& poset_;
    int t_;
    std::uint64_t budget_;
    std::vector<char> covered_;
    std::vector<Interval> intervals_;
};

} // namespace

std::optional<IntervalPartition> find_interval_partition(const CharacteristicPoset& poset,
                                                         int t, const Limits& limits) {
    PartitionSearch search(poset, t, limits);
    auto intervals = search.run();
    if (!intervals) return std::nullopt;
    return IntervalPartition{poset, std::move(*intervals)};
}

int sdepth_exact(const MonomialIdeal& I, TargetKind kind, const Limits& limits) {
    const CharacteristicPoset poset = characteristic_poset(I, kind);
    int t_max = 0;
    for (const Exponents& p : poset.points)
        t_max = std::max(t_max, count_capped(p, poset.cap));
    for (int t = t_max; t >= 1; --t)
        if (find_interval_partition(poset, t, limits)) return t;
    return 0;
}

bool valid_partition(const IntervalPartition& p) {
    std::vector<int> seen(p.poset.points.size(), 0);
    for (const Interval& iv : p.intervals) {
        if (iv.lo.size() != p.poset.cap.size() || iv.hi.size() != p.poset.cap.size()) return false;
        if (!leq(iv.lo, iv.hi) || !leq(iv.hi, p.poset.cap)) return false;
        Exponents c = iv.lo;
        do {
            const auto it = std::lower_bound(p.poset.points.begin(), p.poset.points.end(), c);
            if (it == p.poset.points.end() || *it != c) return false;
            if (++seen[static_cast<size_t>(it - p.poset.points.begin())] > 1) return false;
        } while (next_point(c, iv.lo, iv.hi));
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

StanleyDecomposition partition_to_decomposition(const IntervalPartition& p) {
    if (!valid_partition(p)) throw std::invalid_argument("invalid interval partition");
    const size_t n = p.poset.cap.size();
    std::vector<StanleyPiece> pieces;
    for (const Interval& iv : p.intervals) {
        std::vector<int> z;
        Exponents fan_hi = iv.hi;
        for (size_t j = 0; j < n; ++j) {
            if (iv.hi[j] == p.poset.cap[j]) {
                z.push_back(static_cast<int>(j));
                fan_hi[j] = iv.lo[j];  // capped coordinates stay at the bottom
            }
        }
        Exponents c = iv.lo;
        do {
            pieces.push_back(StanleyPiece{Monomial(c), z});
        } while (next_point(c, iv.lo, fan_hi));
    }
    return StanleyDecomposition{p.poset.kind, p.poset.ideal, std::move(pieces)};
}

std::vector<StanleyPiece> staircase_quotient_pieces(const Monomial& v0,
                                                    std::span<const int> z,
                                                    const Monomial& w0) {
    for (int j : w0.support())
        if (!std::binary_search(z.begin(), z.end(), j))
            throw std::invalid_argument("staircase: w0 not supported on Z");
    std::vector<StanleyPiece> pieces;
    Exponents prefix = v0.exponents();
    for (int j : w0.support()) {
        std::vector<int> sub_z;
        for (int k : z)
            if (k != j) sub_z.push_back(k);
        for (int e = 0; e < w0.exponent(j); ++e) {
            Exponents ve = prefix;
            ve[static_cast<size_t>(j)] += e;
            pieces.push_back(StanleyPiece{Monomial(std::move(ve)), sub_z});
        }
        prefix[static_cast<size_t>(j)] += w0.exponent(j);
    }
    return pieces;
}

std::optional<int> find_transform_slot(const StanleyDecomposition& d, const Monomial& u,
                                       std::span<const int> colon_vars) {
    const int n = d.ideal.vars();
    std::vector<int> required_z;
    for (int j = 0; j < n; ++j)
        if (!std::binary_search(colon_vars.begin(), colon_vars.end(), j)) required_z.push_back(j);
    for (size_t i = 0; i < d.pieces.size(); ++i) {
        const StanleyPiece& p = d.pieces[i];
        if (p.z != required_z || !divides(p.v, u)) continue;
        const Monomial w0 = quotient_by_gcd(u, p.v);
        bool supported = true;
        for (int j : w0.support())
            supported = supported && std::binary_search(p.z.begin(), p.z.end(), j);
        if (supported) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::optional<StanleyDecomposition> apply_quotient_transform(const StanleyDecomposition& d,
                                                             const Monomial& u,
                                                             std::span<const int> colon_vars) {
    if (d.kind != TargetKind::Quotient)
        throw std::invalid_argument("quotient transform expects a decomposition of S/I");
    const IdealOrUnit c = colon(d.ideal, u);
    if (c.is_unit()) throw std::invalid_argument("quotient transform: u already lies in I");
    std::vector<int> cvars;
    for (const Monomial& g : c.ideal().generators()) {
        if (!g.is_variable())
            throw std::invalid_argument("quotient transform: (I : u) is not generated by variables");
        cvars.push_back(g.support().front());
    }
    std::sort(cvars.begin(), cvars.end());
    if (!std::equal(cvars.begin(), cvars.end(), colon_vars.begin(), colon_vars.end()))
        throw std::invalid_argument("quotient transform: colon variable set mismatch");

    const auto slot = find_transform_slot(d, u, colon_vars);
    if (!slot) return std::nullopt;
    const StanleyPiece& hit = d.pieces[static_cast<size_t>(*slot)];
    const Monomial w0 = quotient_by_gcd(u, hit.v);
    std::vector<StanleyPiece> pieces(d.pieces.begin(), d.pieces.begin() + *slot);
    for (StanleyPiece& p : staircase_quotient_pieces(hit.v, hit.z, w0))
        pieces.push_back(std::move(p));
    pieces.insert(pieces.end(), d.pieces.begin() + *slot + 1, d.pieces.end());
    return StanleyDecomposition{TargetKind::Quotient, add(d.ideal, u).ideal(), std::move(pieces)};
}

} // namespace sdepth
