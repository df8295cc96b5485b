#include <gkres/exponent.hpp>

#include <numeric>

#include <gkres/errors.hpp>

namespace gkres
{

Exponent checked_add(Exponent a, Exponent b)
{
    Exponent r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in exponent arithmetic");
    }
    return r;
}

Exponent checked_sub(Exponent a, Exponent b)
{
    Exponent r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in exponent arithmetic");
    }
    return r;
}

Exponent checked_mul(Exponent a, Exponent b)
{
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in exponent arithmetic");
    }
    return r;
}

Exponent dot(std::span<const Exponent> a, std::span<const Exponent> b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot product of vectors of different length");
    }
    Exponent s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s = checked_add(s, checked_mul(a[i], b[i]));
    }
    return s;
}

ExponentVector operator+(const ExponentVector &a, const ExponentVector &b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("adding exponent vectors of different length");
    }
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = checked_add(a[i], b[i]);
    }
    return r;
}

ExponentVector operator-(const ExponentVector &a, const ExponentVector &b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("subtracting exponent vectors of different length");
    }
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = checked_sub(a[i], b[i]);
    }
    return r;
}

ExponentVector operator-(const ExponentVector &a)
{
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = checked_sub(0, a[i]);
    }
    return r;
}

ExponentVector scaled(const ExponentVector &a, Exponent k)
{
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = checked_mul(a[i], k);
    }
    return r;
}

bool is_zero(std::span<const Exponent> v)
{
    for (auto x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

ExponentVector primitive(ExponentVector v)
{
    Exponent g = 0;
    for (auto x : v) {
        g = std::gcd(g, x);
    }
    if (g > 1) {
        for (auto &x : v) {
            x /= g;
        }
    }
    return v;
}

std::string to_string(const ExponentVector &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(v[i]);
    }
    s += ')';
    return s;
}

} // namespace gkres
