#include <gkres/rational.hpp>

#include <cctype>

#include <gkres/errors.hpp>

namespace gkres
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    // The (num, den) constructor canonicalizes; string construction does not.
    return Rational(num, den);
}

std::string format_rational(const Rational &r)
{
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rational &r)
{
    return denominator(r) == 1;
}

} // namespace gkres
