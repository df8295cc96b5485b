#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <gkres/exponent.hpp>
#include <gkres/geometry.hpp>

namespace gkres
{

// Complete flag A = G^0 < G^1 < ... < G^n = sum, as indices into SumComplex::faces().
struct Flag {
    std::vector<std::size_t> chain;
    int sign = 0;
};

// Orientation of the frame v_i = barycenter(G^i) - G^0, i = 1..n, in the standard
// orientation of R^n. Throws ConsistencyError if the frame is degenerate.
int flag_sign(const SumComplex &complex, std::span<const std::size_t> chain);

// Complete flags from A whose i-th face has positive-dimensional first i summands and
// point last n-i summands. Throws NotCritical.
std::vector<Flag> admissible_flags(const SumComplex &complex, const ExponentVector &a);

// Signed number of admissible flags at a critical vertex. Throws NotCritical.
int combinatorial_coefficient(const SumComplex &complex, const ExponentVector &a);

struct CoefficientTable {
    std::map<ExponentVector, int> entries;
    // Summand polytopes in the order used for the flag conditions.
    std::vector<LatticePolytope> polytope_order;

    int at(const ExponentVector &a) const;
};

// Coefficients at every vertex. Throws NotGeneric when the polytopes are not in
// generic relative position and NoFlags when a summand is a single point.
CoefficientTable coefficient_table(const SumComplex &complex);

} // namespace gkres
