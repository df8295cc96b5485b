#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gkres/coefficients.hpp>
#include <gkres/geometry.hpp>
#include <gkres/laurent.hpp>
#include <gkres/rational.hpp>

namespace gkres
{

// A square Laurent system whose Newton polytopes are in generic relative position,
// with everything the residue sums need precomputed.
class SystemInstance
{
public:
    // Throws DimensionMismatch, ZeroPolynomial, DegenerateSum, NotGeneric or NoFlags.
    explicit SystemInstance(std::vector<LaurentPoly> fs);

    std::size_t nvars() const noexcept { return fs_.size(); }
    const std::vector<LaurentPoly> &polynomials() const noexcept { return fs_; }
    const SumComplex &complex() const noexcept { return complex_; }
    const CoefficientTable &coefficients() const noexcept { return coefficients_; }
    const LaurentPoly &product() const noexcept { return product_; }
    const LaurentPoly &jacobian() const noexcept { return jacobian_; }

private:
    std::vector<LaurentPoly> fs_;
    SumComplex complex_;
    CoefficientTable coefficients_;
    LaurentPoly product_;
    LaurentPoly jacobian_;
};

struct VertexResidue {
    ExponentVector vertex;
    std::vector<ExponentVector> summands;
    int coefficient = 0;
    Rational residue;
};

// Residue of q df_1/f_1 ^ ... ^ df_n/f_n at every vertex, in vertex order. `jobs`
// spreads vertices over threads without changing the result.
std::vector<VertexResidue> residue_breakdown(const LaurentPoly &q, const SystemInstance &system, unsigned jobs = 1);

// Sum of q over the solutions in the torus, counted with multiplicity:
// (-1)^n sum_A c_A res_A(q).
Rational solution_sum(const LaurentPoly &q, const SystemInstance &system, unsigned jobs = 1);

// solution_sum for several q at once, sharing one expansion per vertex.
std::vector<Rational> solution_sums(std::span<const LaurentPoly> qs, const SystemInstance &system, unsigned jobs = 1);

// Number of solutions with multiplicity. Throws ConsistencyError unless the residue
// sum is a non-negative integer.
Exponent count_solutions(const SystemInstance &system, unsigned jobs = 1);

// (-1)^n / n! sum_A c_A det(A_1, ..., A_n). Throws NotGeneric.
Rational mixed_volume(std::vector<LatticePolytope> polys);
Rational mixed_volume(const SumComplex &complex, const CoefficientTable &table);

// s_k = sum over solutions of t_i^k, k = 1..count.
std::vector<Rational> power_sums(const SystemInstance &system, std::size_t variable, std::size_t count,
                                 unsigned jobs = 1);

// Elementary symmetric functions sigma_1..sigma_N from power sums s_1..s_N.
std::vector<Rational> newton_to_elementary(std::span<const Rational> power_sums);

struct EliminantPoly {
    std::size_t variable = 0;
    std::size_t degree = 0;
    // Leading coefficient first: 1, -sigma_1, sigma_2, ..., (-1)^N sigma_N.
    std::vector<Rational> coefficients;

    // Univariate polynomial in the given variable name, e.g. "x^6 - x^3 + 1/4".
    std::string format(const std::string &name) const;
};

// Monic polynomial whose roots are the i-th coordinates of all solutions, with
// multiplicity. Degree 0 (the constant 1) when there are no solutions.
EliminantPoly eliminant(const SystemInstance &system, std::size_t variable, unsigned jobs = 1);

} // namespace gkres
