#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "syzlab/hpoly.hpp"

namespace syzlab {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what), position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Recursive-descent parser for homogeneous polynomial expressions:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := rational | var | '(' expr ')' | factor '^' nat
/// Variables x, y, z; rationals like 7 or 2/3; implicit products such as
/// 3x^2y are accepted. Non-homogeneous input raises ParseError naming two
/// offending degrees.
HPoly parse_poly(const std::string& src);

/// Canonical rendering: descending monomial order, explicit '*' and '^'.
/// parse_poly(print_poly(f)) == f.
std::string print_poly(const HPoly& f);

/// Factored-curve file: one component expression per line, '#' comments and
/// blank lines ignored.
std::vector<HPoly> parse_curve_components(const std::string& text);

}  // namespace syzlab
