#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gkres
{

using Exponent = std::int64_t;

// A monomial exponent, equivalently a lattice point of Z^n. Ordered lexicographically.
using ExponentVector = std::vector<Exponent>;

// Overflow-checked int64 arithmetic; throws OverflowError.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_sub(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

Exponent dot(std::span<const Exponent> a, std::span<const Exponent> b);

ExponentVector operator+(const ExponentVector &a, const ExponentVector &b);
ExponentVector operator-(const ExponentVector &a, const ExponentVector &b);
ExponentVector operator-(const ExponentVector &a);
ExponentVector scaled(const ExponentVector &a, Exponent k);

bool is_zero(std::span<const Exponent> v);

// Divide by the gcd of the entries (zero vector is returned unchanged).
ExponentVector primitive(ExponentVector v);

// "(a,b,c)"
std::string to_string(const ExponentVector &v);

} // namespace gkres
