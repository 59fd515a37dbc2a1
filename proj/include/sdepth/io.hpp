#ifndef SDEPTH_IO_HPP
#define SDEPTH_IO_HPP

#include <span>
#include <stdexcept>
#include <string>

#include "sdepth/monomial.hpp"
#include "sdepth/stanley.hpp"

namespace sdepth {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Grammar: optional "n=<count>;" header, then comma-separated monomials.
/// A monomial is '*'-joined factors "x<k>" or "x<k>^<e>"; "1" is accepted
/// syntactically but rejected as a unit generator. Without a header, the
/// ambient size is the largest variable index used. The result is minimized.
MonomialIdeal parse_ideal(const std::string& text);

std::string format_monomial(const Monomial& u);          // "x1^2*x2", "1"
std::string format_generators(const MonomialIdeal& I);   // "x1^2, x1*x2"
std::string format_ideal(const MonomialIdeal& I);        // "n=4; x1^2, x1*x2"
std::string format_variable(int var);                    // "x3"
std::string format_variable_set(std::span<const int> vars);  // "x1,x3" or "-"

/// One piece per line, "v | Z".
std::string format_decomposition(const StanleyDecomposition& d);

} // namespace sdepth

#endif
