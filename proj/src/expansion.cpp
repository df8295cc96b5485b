#include <gkres/expansion.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include <gkres/errors.hpp>
#include <gkres/geometry.hpp>
#include <gkres/linalg.hpp>

namespace gkres
{

ExponentVector positive_functional(std::span<const ExponentVector> points)
{
    if (points.empty()) {
        throw InputError("positive functional of an empty set");
    }
    const std::size_t n = points.front().size();
    std::vector<ExponentVector> cloud(points.begin(), points.end());
    for (const auto &p : cloud) {
        if (p.size() != n) {
            throw DimensionMismatch("points of different dimensions");
        }
        if (is_zero(p)) {
            throw InputError("positive functional requested for a set containing 0");
        }
    }
    const auto pivots = pivot_columns(cloud);
    const std::size_t d = pivots.size();

    // Work in the linear span of the points, identified with R^d by the pivot coordinates.
    std::vector<ExponentVector> projected;
    for (const auto &p : cloud) {
        ExponentVector q;
        for (auto c : pivots) {
            q.push_back(p[c]);
        }
        projected.push_back(std::move(q));
    }
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    const std::size_t m = projected.size();

    // Facets of the cone through 0 are spanned by d - 1 independent generators.
    ExponentVector reduced(d, 0);
    std::set<ExponentVector> normals;
    std::vector<char> on_every_facet(m, 1);
    std::vector<std::size_t> idx(d - 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<ExponentVector> rows(d - 1);
    std::vector<Exponent> values(m);
    const auto advance = [&] {
        for (std::size_t k = idx.size(); k-- > 0;) {
            if (idx[k] + (idx.size() - k) < m) {
                ++idx[k];
                for (std::size_t j = k + 1; j < idx.size(); ++j) {
                    idx[j] = idx[j - 1] + 1;
                }
                return true;
            }
        }
        return false;
    };
    bool more = d == 1 || m >= d - 1;
    while (more) {
        ExponentVector normal(1, 1);
        if (d > 1) {
            for (std::size_t k = 0; k + 1 < d; ++k) {
                rows[k] = projected[idx[k]];
            }
            normal = orthogonal_complement(rows, d);
        }
        more = d > 1 && advance();
        if (is_zero(normal)) {
            continue;
        }
        bool pos = false;
        bool neg = false;
        for (std::size_t i = 0; i < m && !(pos && neg); ++i) {
            values[i] = dot(normal, projected[i]);
            pos = pos || values[i] > 0;
            neg = neg || values[i] < 0;
        }
        if (pos && neg) {
            continue;
        }
        if (neg) {
            normal = -normal;
        }
        if (!normals.insert(normal).second) {
            continue;
        }
        reduced = reduced + normal;
        for (std::size_t i = 0; i < m; ++i) {
            on_every_facet[i] = on_every_facet[i] && values[i] == 0;
        }
    }
    if (normals.empty() || std::any_of(on_every_facet.begin(), on_every_facet.end(), [](char c) { return c; })) {
        throw NotPointed("the points do not span a pointed cone");
    }
    ExponentVector xi(n, 0);
    for (std::size_t k = 0; k < d; ++k) {
        xi[pivots[k]] = reduced[k];
    }
    for (const auto &p : points) {
        if (dot(xi, p) < 1) {
            throw ConsistencyError("positive functional construction failed");
        }
    }
    return xi;
}

VertexExpansion::VertexExpansion(const LaurentPoly &denominator, const ExponentVector &vertex,
                                 std::optional<ExponentVector> functional)
    : vertex_(vertex), h_(denominator.nvars()), series_(denominator.nvars())
{
    if (vertex.size() != denominator.nvars()) {
        throw DimensionMismatch("vertex has the wrong dimension");
    }
    const Rational lead = denominator.coefficient(vertex);
    if (lead == 0) {
        throw NotVertex(to_string(vertex) + " is not in the support of the denominator");
    }
    inverse_lead_ = 1 / lead;
    // h = 1 - P / (lambda_A t^A)
    h_ = LaurentPoly::constant(denominator.nvars(), Rational(1)) - denominator.shifted(-vertex) * inverse_lead_;
    const auto support = h_.support();
    if (functional) {
        if (functional->size() != vertex.size()) {
            throw DimensionMismatch("filtration functional has the wrong dimension");
        }
        for (const auto &p : support) {
            if (dot(*functional, p) <= 0) {
                throw InputError("filtration functional is not positive on the vertex cone");
            }
        }
        functional_ = *functional;
    } else if (support.empty()) {
        functional_ = ExponentVector(vertex.size(), 0);
    } else {
        try {
            functional_ = positive_functional(support);
        } catch (const NotPointed &) {
            throw NotVertex(to_string(vertex) + " is not a vertex of the Newton polytope of the denominator");
        }
    }
}

Exponent VertexExpansion::required_level(const LaurentPoly &g, const ExponentVector &target) const
{
    Exponent needed = std::numeric_limits<Exponent>::min();
    for (const auto &[u, c] : g.terms()) {
        needed = std::max(needed, dot(functional_, (target - u) + vertex_));
    }
    return needed;
}

void VertexExpansion::ensure_level(Exponent level)
{
    if (level <= level_) {
        return;
    }
    const std::size_t n = vertex_.size();
    LaurentPoly sum = LaurentPoly::constant(n, Rational(1));
    // Pair every monomial with its filtration level so pruning is cheap.
    std::vector<std::pair<ExponentVector, Exponent>> hterms;
    std::vector<Rational> hcoeffs;
    for (const auto &[e, c] : h_.terms()) {
        hterms.emplace_back(e, dot(functional_, e));
        hcoeffs.push_back(c);
    }
    LaurentPoly power = LaurentPoly::constant(n, Rational(1));
    while (!hterms.empty()) {
        LaurentPoly next(n);
        for (const auto &[w, c] : power.terms()) {
            const Exponent base = dot(functional_, w);
            for (std::size_t k = 0; k < hterms.size(); ++k) {
                if (checked_add(base, hterms[k].second) <= level) {
                    next.add_term(w + hterms[k].first, c * hcoeffs[k]);
                }
            }
        }
        if (next.is_zero()) {
            break;
        }
        sum += next;
        power = std::move(next);
    }
    series_ = sum.shifted(-vertex_) * inverse_lead_;
    level_ = level;
}

Rational VertexExpansion::coefficient(const LaurentPoly &g, const ExponentVector &target) const
{
    if (required_level(g, target) > level_) {
        throw ConsistencyError("vertex expansion truncated below the required level");
    }
    Rational r(0);
    for (const auto &[u, c] : g.terms()) {
        auto it = series_.terms().find(target - u);
        if (it != series_.terms().end()) {
            r += c * it->second;
        }
    }
    return r;
}

Rational expansion_coefficient(const LaurentPoly &g, std::span<const LaurentPoly> fs, const ExponentVector &a,
                               const ExponentVector &target, const ExpansionOptions &options)
{
    VertexExpansion expansion(product(fs), a, options.functional);
    expansion.ensure_level(std::max<Exponent>(0, checked_add(expansion.required_level(g, target), options.extra_levels)));
    return expansion.coefficient(g, target);
}

Rational residue_at_vertex(const LaurentPoly &q, std::span<const LaurentPoly> fs, const ExponentVector &a,
                           const ExpansionOptions &options)
{
    const ExponentVector target(fs.size(), -1);
    return expansion_coefficient(q * jacobian(fs), fs, a, target, options);
}

} // namespace gkres
