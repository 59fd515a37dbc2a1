#include "sdepth/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sdepth {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    size_t pos() const { return pos_; }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected a number", start);
        if (pos_ - start > 6) throw parse_error("number too large", start);
        return std::stol(text_.substr(start, pos_ - start));
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

struct RawFactor {
    int var;  // -1 for a literal "1"
    int exp;
    size_t pos;
};

RawFactor parse_factor(Scanner& s) {
    s.skip_ws();
    const size_t at = s.pos();
    if (s.accept('1')) return RawFactor{-1, 0, at};
    if (!s.accept('x')) throw parse_error("expected a factor 'x<k>' or '1'", at);
    const long var = s.integer();
    if (var < 1) throw parse_error("variable index must be at least 1", at);
    long exp = 1;
    if (s.accept('^')) {
        const size_t exp_at = s.pos();
        exp = s.integer();
        if (exp < 0) throw parse_error("negative exponent", exp_at);
    }
    return RawFactor{static_cast<int>(var - 1), static_cast<int>(exp), at};
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text) {
    Scanner s(text);
    if (s.done()) throw parse_error("empty input", 0);

    long declared_n = 0;
    if (s.peek() == 'n') {
        s.accept('n');
        if (!s.accept('=')) throw parse_error("expected '=' after 'n'", s.pos());
        declared_n = s.integer();
        if (declared_n < 1) throw parse_error("n must be at least 1", s.pos());
        if (!s.accept(';')) throw parse_error("expected ';' after the n header", s.pos());
    }

    std::vector<std::vector<RawFactor>> raw;
    do {
        if (s.done()) throw parse_error("expected a monomial", s.pos());
        std::vector<RawFactor> factors{parse_factor(s)};
        while (s.accept('*')) factors.push_back(parse_factor(s));
        raw.push_back(std::move(factors));
    } while (s.accept(','));
    if (!s.done()) throw parse_error("unexpected trailing input", s.pos());
    if (raw.empty()) throw parse_error("empty input", 0);

    int n = static_cast<int>(declared_n);
    for (const auto& factors : raw)
        for (const RawFactor& f : factors) {
            if (declared_n > 0 && f.var >= declared_n)
                throw parse_error("variable index exceeds the declared n", f.pos);
            n = std::max(n, f.var + 1);
        }
    if (n == 0) throw parse_error("unit generator", raw.front().front().pos);

    std::vector<Monomial> gens;
    for (const auto& factors : raw) {
        Exponents e(static_cast<size_t>(n), 0);
        for (const RawFactor& f : factors)
            if (f.var >= 0) e[static_cast<size_t>(f.var)] += f.exp;
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
            throw parse_error("unit generator", factors.front().pos);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

std::string format_monomial(const Monomial& u) {
    if (u.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j < u.vars(); ++j) {
        if (u.exponent(j) == 0) continue;
        if (!first) out << '*';
        out << 'x' << (j + 1);
        if (u.exponent(j) > 1) out << '^' << u.exponent(j);
        first = false;
    }
    return out.str();
}

std::string format_generators(const MonomialIdeal& I) {
    std::ostringstream out;
    for (size_t k = 0; k < I.generators().size(); ++k) {
        if (k) out << ", ";
        out << format_monomial(I.generators()[k]);
    }
    return out.str();
}

std::string format_ideal(const MonomialIdeal& I) {
    return "n=" + std::to_string(I.vars()) + "; " + format_generators(I);
}

std::string format_variable(int var) { return "x" + std::to_string(var + 1); }

std::string format_variable_set(std::span<const int> vars) {
    if (vars.empty()) return "-";
    std::ostringstream out;
    for (size_t k = 0; k < vars.size(); ++k) {
        if (k) out << ',';
        out << format_variable(vars[k]);
    }
    return out.str();
}

std::string format_decomposition(const StanleyDecomposition& d) {
    std::ostringstream out;
    for (const StanleyPiece& p : d.pieces)
        out << format_monomial(p.v) << " | " << format_variable_set(p.z) << '\n';
    return out.str();
}

} // namespace sdepth
