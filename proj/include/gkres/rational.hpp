#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace gkres
{

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p", "p/q" and surrounding whitespace; result is canonical.
// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational &r);

bool is_integer(const Rational &r);

} // namespace gkres
