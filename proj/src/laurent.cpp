#include <gkres/laurent.hpp>

#include <algorithm>

#include <gkres/errors.hpp>

namespace gkres
{

LaurentPoly::LaurentPoly(std::size_t nvars, Terms terms) : nvars_(nvars)
{
    for (auto &[e, c] : terms) {
        add_term(e, c);
    }
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational &c)
{
    LaurentPoly p(nvars);
    p.add_term(ExponentVector(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector &e, const Rational &c)
{
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i)
{
    if (i >= nvars) {
        throw DimensionMismatch("variable index out of range");
    }
    ExponentVector e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

Rational LaurentPoly::coefficient(const ExponentVector &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ExponentVector> LaurentPoly::support() const
{
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto &[e, c] : terms_) {
        s.push_back(e);
    }
    return s;
}

void LaurentPoly::add_term(const ExponentVector &e, const Rational &c)
{
    if (e.size() != nvars_) {
        throw DimensionMismatch("exponent " + gkres::to_string(e) + " has length " + std::to_string(e.size())
                                + ", expected " + std::to_string(nvars_));
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &g)
{
    if (g.nvars_ != nvars_) {
        throw DimensionMismatch("adding polynomials in different numbers of variables");
    }
    for (const auto &[e, c] : g.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &g)
{
    if (g.nvars_ != nvars_) {
        throw DimensionMismatch("subtracting polynomials in different numbers of variables");
    }
    for (const auto &[e, c] : g.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &f, const LaurentPoly &g)
{
    if (f.nvars_ != g.nvars_) {
        throw DimensionMismatch("multiplying polynomials in different numbers of variables");
    }
    LaurentPoly r(f.nvars_);
    for (const auto &[e1, c1] : f.terms_) {
        for (const auto &[e2, c2] : g.terms_) {
            r.add_term(e1 + e2, c1 * c2);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*this);
    for (auto &[e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector &e) const
{
    LaurentPoly r(nvars_);
    for (const auto &[k, c] : terms_) {
        r.terms_.emplace(k + e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly result = constant(nvars_, Rational(1));
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1u;
        if (k) {
            base = base * base;
        }
    }
    return result;
}

namespace
{

Rational int_power(const Rational &x, Exponent k)
{
    Rational base = x;
    if (k < 0) {
        if (x == 0) {
            throw PreconditionError("negative power of zero in Laurent evaluation");
        }
        base = 1 / x;
        k = -k;
    }
    Rational r(1);
    while (k) {
        if (k & 1) {
            r *= base;
        }
        k >>= 1;
        if (k) {
            base *= base;
        }
    }
    return r;
}

} // namespace

Rational LaurentPoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != nvars_) {
        throw DimensionMismatch("evaluation point has the wrong dimension");
    }
    Rational s(0);
    for (const auto &[e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] != 0) {
                m *= int_power(point[i], e[i]);
            }
        }
        s += m;
    }
    return s;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[e, c] : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        s += numerator(c).str() + "/" + denominator(c).str() + "*" + gkres::to_string(e);
    }
    return s;
}

std::string LaurentPoly::format(std::span<const std::string> names) const
{
    if (names.size() != nvars_) {
        throw DimensionMismatch("wrong number of variable names");
    }
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (s.empty()) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += names[i];
            if (e[i] != 1) {
                mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
            }
        }
        if (mono.empty()) {
            s += format_rational(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += format_rational(mag) + "*" + mono;
        }
    }
    return s;
}

LaurentPoly partial_derivative(const LaurentPoly &f, std::size_t i)
{
    if (i >= f.nvars()) {
        throw DimensionMismatch("variable index out of range");
    }
    LaurentPoly r(f.nvars());
    for (const auto &[e, c] : f.terms()) {
        if (e[i] == 0) {
            continue;
        }
        ExponentVector k = e;
        k[i] = checked_sub(k[i], 1);
        r.add_term(k, c * e[i]);
    }
    return r;
}

namespace
{

// Laplace expansion along the first row; rows are the remaining polynomials,
// columns the remaining variables.
LaurentPoly laplace(const std::vector<std::vector<LaurentPoly>> &m, std::vector<std::size_t> &cols, std::size_t row)
{
    const std::size_t nvars = m[0][0].nvars();
    if (row == m.size()) {
        return LaurentPoly::constant(nvars, Rational(1));
    }
    LaurentPoly det(nvars);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::size_t col = cols[k];
        if (m[row][col].is_zero()) {
            continue;
        }
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        LaurentPoly minor = laplace(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
        LaurentPoly term = m[row][col] * minor;
        if (k % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

} // namespace

LaurentPoly jacobian(std::span<const LaurentPoly> fs)
{
    const std::size_t n = fs.size();
    if (n == 0) {
        throw DimensionMismatch("jacobian of an empty system");
    }
    for (const auto &f : fs) {
        if (f.nvars() != n) {
            throw DimensionMismatch("jacobian requires n polynomials in n variables");
        }
    }
    std::vector<std::vector<LaurentPoly>> m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m[r].push_back(partial_derivative(fs[r], c));
        }
    }
    std::vector<std::size_t> cols(n);
    for (std::size_t c = 0; c < n; ++c) {
        cols[c] = c;
    }
    return laplace(m, cols, 0);
}

LaurentPoly product(std::span<const LaurentPoly> fs)
{
    if (fs.empty()) {
        throw DimensionMismatch("product of an empty list");
    }
    LaurentPoly p = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) {
        p = p * fs[i];
    }
    return p;
}

} // namespace gkres
