#pragma once

#include <optional>
#include <span>
#include <vector>

#include <gkres/exponent.hpp>
#include <gkres/laurent.hpp>
#include <gkres/rational.hpp>

namespace gkres
{

// Integer xi with <xi, p> >= 1 for every given (nonzero) point. Throws NotPointed if
// the points do not lie in a pointed cone, InputError on an empty set or a zero point.
ExponentVector positive_functional(std::span<const ExponentVector> points);

struct ExpansionOptions {
    // Filtration functional; must be strictly positive on the support of h.
    // Defaults to positive_functional(supp h).
    std::optional<ExponentVector> functional;
    // Added to the computed truncation level.
    Exponent extra_levels = 0;
};

// Truncated Laurent expansion of 1/P at a vertex A of the Newton polytope of P:
//   1/P = lambda_A^{-1} t^{-A} (1 + h + h^2 + ...),  P = lambda_A t^A (1 - h).
// Monomials t^e are kept while <xi, e + A> <= level, where they agree with the
// infinite expansion.
class VertexExpansion
{
public:
    // Throws NotVertex if A is not a vertex of the Newton polytope of P.
    VertexExpansion(const LaurentPoly &denominator, const ExponentVector &vertex,
                    std::optional<ExponentVector> functional = std::nullopt);

    const ExponentVector &vertex() const noexcept { return vertex_; }
    const ExponentVector &functional() const noexcept { return functional_; }
    Exponent level() const noexcept { return level_; }
    const LaurentPoly &series() const noexcept { return series_; }

    // Level needed for coefficient(g, target) to be exact. May be negative (no term
    // of g can reach the target).
    Exponent required_level(const LaurentPoly &g, const ExponentVector &target) const;

    // Recomputes the partial series if the current level is below `level`.
    void ensure_level(Exponent level);

    // Coefficient of t^target in g times the expansion. Throws ConsistencyError if the
    // truncation level is insufficient.
    Rational coefficient(const LaurentPoly &g, const ExponentVector &target) const;

private:
    ExponentVector vertex_;
    Rational inverse_lead_;
    LaurentPoly h_;
    ExponentVector functional_;
    Exponent level_ = -1;
    LaurentPoly series_;
};

// Coefficient of t^target in the expansion of g / (f_1 ... f_n) at the vertex A of
// the product's Newton polytope.
Rational expansion_coefficient(const LaurentPoly &g, std::span<const LaurentPoly> fs, const ExponentVector &a,
                               const ExponentVector &target, const ExpansionOptions &options = {});

// Coefficient of 1/(t_1...t_n) in the expansion of q J_f / (f_1 ... f_n) at A.
Rational residue_at_vertex(const LaurentPoly &q, std::span<const LaurentPoly> fs, const ExponentVector &a,
                           const ExpansionOptions &options = {});

} // namespace gkres
