#include <gkres/linalg.hpp>

#include <utility>

#include <gkres/errors.hpp>

namespace gkres
{

BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return BigInt(1);
    }
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return BigInt(0);
            }
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt determinant(std::span<const ExponentVector> rows)
{
    std::vector<std::vector<BigInt>> m;
    m.reserve(rows.size());
    for (const auto &r : rows) {
        if (r.size() != rows.size()) {
            throw DimensionMismatch("determinant of a non-square matrix");
        }
        m.emplace_back(r.begin(), r.end());
    }
    return determinant(std::move(m));
}

std::vector<std::size_t> pivot_columns(std::span<const ExponentVector> rows)
{
    std::vector<std::size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    const std::size_t cols = rows[0].size();
    std::vector<std::vector<BigInt>> m;
    for (const auto &r : rows) {
        m.emplace_back(r.begin(), r.end());
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[row], m[p]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            BigInt a = m[row][c];
            BigInt b = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = m[i][j] * a - m[row][j] * b;
            }
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::size_t rank(std::span<const ExponentVector> rows)
{
    return pivot_columns(rows).size();
}

int affine_dimension(std::span<const ExponentVector> points)
{
    if (points.empty()) {
        throw InputError("affine dimension of an empty set");
    }
    std::vector<ExponentVector> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(points[i] - points[0]);
    }
    return static_cast<int>(rank(diffs));
}

namespace
{

// Determinant of the square submatrix given by all rows and the listed columns.
Exponent minor_det(std::span<const ExponentVector> rows, std::vector<std::size_t> &cols, std::size_t row)
{
    if (row == rows.size()) {
        return 1;
    }
    Exponent det = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::size_t c = cols[k];
        const Exponent a = rows[row][c];
        if (a == 0) {
            continue;
        }
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        const Exponent sub = minor_det(rows, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
        const Exponent term = checked_mul(a, sub);
        det = (k % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
    }
    return det;
}

} // namespace

ExponentVector orthogonal_complement(std::span<const ExponentVector> rows, std::size_t d)
{
    if (rows.size() + 1 != d) {
        throw DimensionMismatch("orthogonal complement needs d-1 vectors in dimension d");
    }
    ExponentVector normal(d);
    std::vector<std::size_t> cols;
    cols.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        cols.clear();
        for (std::size_t c = 0; c < d; ++c) {
            if (c != j) {
                cols.push_back(c);
            }
        }
        const Exponent m = minor_det(rows, cols, 0);
        normal[j] = (j % 2 == 0) ? m : checked_sub(0, m);
    }
    return primitive(std::move(normal));
}

} // namespace gkres
