#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gkres/exponent.hpp>
#include <gkres/rational.hpp>

namespace gkres
{

// Exact determinant of a square integer matrix (fraction-free Bareiss elimination).
BigInt determinant(std::vector<std::vector<BigInt>> m);
BigInt determinant(std::span<const ExponentVector> rows);

// Indices of pivot columns in a row-echelon form of the matrix with the given rows.
// Their count is the rank.
std::vector<std::size_t> pivot_columns(std::span<const ExponentVector> rows);

std::size_t rank(std::span<const ExponentVector> rows);

// Dimension of the affine hull of a nonempty point set.
int affine_dimension(std::span<const ExponentVector> points);

// Primitive integer vector orthogonal to the d-1 given vectors of Z^d (generalized
// cross product). Zero iff the vectors are linearly dependent.
ExponentVector orthogonal_complement(std::span<const ExponentVector> rows, std::size_t d);

} // namespace gkres
