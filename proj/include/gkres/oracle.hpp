#pragma once

#include <cstddef>
#include <vector>

#include <gkres/exponent.hpp>
#include <gkres/geometry.hpp>
#include <gkres/laurent.hpp>
#include <gkres/rational.hpp>

namespace gkres
{

// Euclidean volume by pulling triangulation; 0 for lower-dimensional polytopes.
Rational volume(const LatticePolytope &polytope);

// n! V(P_1..P_n) = sum over nonempty S of (-1)^{n-|S|} vol(sum_{i in S} P_i),
// normalized so that V(P, ..., P) = vol(P). No genericity assumption.
Rational mixed_volume_oracle(const std::vector<LatticePolytope> &polys);

// Triangular system with explicitly known solutions:
//   f_1 = lead * prod_j (t_1 - a_j)^{m_j},
//   f_i = t_i - c_i t^{e_i}   (i >= 2, e_i supported on t_1..t_{i-1}).
struct KnownSystemShape {
    struct Root {
        Rational value;
        unsigned multiplicity = 1;
    };
    struct Monomial {
        Rational coefficient;
        ExponentVector exponent;
    };

    std::vector<Root> roots;
    std::vector<Monomial> chain;
    Rational lead = 1;
};

struct KnownSolution {
    std::vector<Rational> point;
    unsigned multiplicity = 1;
};

struct KnownSystem {
    std::vector<LaurentPoly> fs;
    std::vector<KnownSolution> solutions;

    // Sum of q over the solutions with multiplicity, by direct evaluation.
    Rational direct_sum(const LaurentPoly &q) const;
};

// Throws InputError for zero roots or malformed exponents, NotGeneric if the Newton
// polytopes are not in generic relative position.
KnownSystem make_known_system(const KnownSystemShape &shape);

} // namespace gkres
