#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gkres/laurent.hpp>

namespace gkres
{

// On-disk form of a system:
//   {"variables": ["x", "y"],
//    "system": [[{"coeff": "p/q", "exponent": [i, j]}, ...], ...]}
// Coefficients are strings so that rationals survive exactly.
struct SystemFile {
    std::vector<std::string> variables;
    std::vector<LaurentPoly> polynomials;

    std::size_t variable_index(std::string_view name) const; // throws UnknownVariable
};

// Throws ParseError (with line and column for syntax errors), DimensionMismatch or
// ZeroPolynomial.
SystemFile parse_system(std::string_view json_text);
SystemFile read_system_file(const std::string &path);

std::string write_system(const SystemFile &file);

// A polynomial as a JSON term list, e.g. [{"coeff": "1", "exponent": [3, 0]}].
LaurentPoly parse_polynomial(std::string_view json_text, std::size_t nvars);
std::string write_polynomial(const LaurentPoly &p);

} // namespace gkres
