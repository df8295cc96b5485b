#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gkres/exponent.hpp>
#include <gkres/rational.hpp>

namespace gkres
{

// Sparse Laurent polynomial in a fixed number of variables with exact rational
// coefficients. No zero coefficient is ever stored; exponents may be negative.
class LaurentPoly
{
public:
    using Terms = std::map<ExponentVector, Rational>;

    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    LaurentPoly(std::size_t nvars, Terms terms);

    static LaurentPoly constant(std::size_t nvars, const Rational &c);
    static LaurentPoly monomial(const ExponentVector &e, const Rational &c = Rational(1));
    // The coordinate function t_i (0-based).
    static LaurentPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const ExponentVector &e) const;
    std::vector<ExponentVector> support() const;

    // Adds c·t^e, pruning the term if it cancels.
    void add_term(const ExponentVector &e, const Rational &c);

    LaurentPoly &operator+=(const LaurentPoly &g);
    LaurentPoly &operator-=(const LaurentPoly &g);
    LaurentPoly &operator*=(const Rational &c);

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly &g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly &g) { return f -= g; }
    friend LaurentPoly operator*(LaurentPoly f, const Rational &c) { return f *= c; }
    friend LaurentPoly operator*(const Rational &c, LaurentPoly f) { return f *= c; }
    friend LaurentPoly operator*(const LaurentPoly &f, const LaurentPoly &g);
    LaurentPoly operator-() const;

    // Multiplies by the monomial t^e.
    LaurentPoly shifted(const ExponentVector &e) const;
    LaurentPoly pow(unsigned k) const;

    // Exact evaluation at a point of (Q \ 0)^n.
    Rational evaluate(std::span<const Rational> point) const;

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

    // Canonical text: terms in lexicographic exponent order as "num/den*(e1,...,en)",
    // joined by " + ". The zero polynomial is "0".
    std::string to_string() const;

    // Human-readable rendering with variable names, highest exponents first,
    // e.g. "x^6 - x^3 + 1/4".
    std::string format(std::span<const std::string> names) const;

private:
    std::size_t nvars_;
    Terms terms_;
};

// d/dt_i, 0-based variable index.
LaurentPoly partial_derivative(const LaurentPoly &f, std::size_t i);

// Determinant of the n x n matrix of partial derivatives of n polynomials in n variables.
LaurentPoly jacobian(std::span<const LaurentPoly> fs);

LaurentPoly product(std::span<const LaurentPoly> fs);

} // namespace gkres
