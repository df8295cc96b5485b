#include <gkres/oracle.hpp>

#include <map>

#include <gkres/errors.hpp>
#include <gkres/linalg.hpp>

namespace gkres
{

namespace
{

using Simplex = std::vector<std::size_t>;

// Pulling triangulation: cone from the first vertex of the face over the
// triangulations of the subfaces that miss it.
const std::vector<Simplex> &triangulate(const FaceLattice &lattice, std::size_t face,
                                        std::map<std::size_t, std::vector<Simplex>> &memo)
{
    if (auto it = memo.find(face); it != memo.end()) {
        return it->second;
    }
    const auto &node = lattice.faces[face];
    std::vector<Simplex> result;
    if (node.dim == 0) {
        result.push_back({node.vertices.front()});
    } else {
        const std::size_t apex = node.vertices.front();
        for (auto sub : node.down) {
            const auto &members = lattice.faces[sub].vertices;
            if (std::binary_search(members.begin(), members.end(), apex)) {
                continue;
            }
            for (auto s : triangulate(lattice, sub, memo)) {
                s.push_back(apex);
                result.push_back(std::move(s));
            }
        }
    }
    return memo.emplace(face, std::move(result)).first->second;
}

BigInt factorial(std::size_t n)
{
    BigInt f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

} // namespace

Rational volume(const LatticePolytope &polytope)
{
    const std::size_t n = polytope.ambient_dim();
    if (polytope.dim() < static_cast<int>(n)) {
        return Rational(0);
    }
    const auto lattice = face_lattice(polytope);
    std::map<std::size_t, std::vector<Simplex>> memo;
    BigInt total = 0;
    for (const auto &s : triangulate(lattice, lattice.faces.size() - 1, memo)) {
        std::vector<ExponentVector> edges;
        for (std::size_t k = 1; k < s.size(); ++k) {
            edges.push_back(lattice.vertices[s[k]] - lattice.vertices[s[0]]);
        }
        total += abs(determinant(edges));
    }
    return Rational(total, factorial(n));
}

Rational mixed_volume_oracle(const std::vector<LatticePolytope> &polys)
{
    const std::size_t n = polys.size();
    if (n == 0 || polys.front().ambient_dim() != n) {
        throw DimensionMismatch("mixed volume needs n polytopes in R^n");
    }
    Rational total(0);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<LatticePolytope> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                subset.push_back(polys[i]);
            }
        }
        const Rational v = volume(LatticePolytope::from_points(minkowski_vertices(subset)));
        total += ((n - subset.size()) % 2 == 0) ? v : Rational(-v);
    }
    return total / Rational(factorial(n));
}

Rational KnownSystem::direct_sum(const LaurentPoly &q) const
{
    Rational s(0);
    for (const auto &sol : solutions) {
        s += sol.multiplicity * q.evaluate(sol.point);
    }
    return s;
}

KnownSystem make_known_system(const KnownSystemShape &shape)
{
    const std::size_t n = shape.chain.size() + 1;
    if (shape.roots.empty()) {
        throw InputError("a known system needs at least one root");
    }
    if (shape.lead == 0) {
        throw InputError("leading coefficient must be nonzero");
    }
    KnownSystem sys;
    ExponentVector e1(n, 0);
    e1[0] = 1;
    const auto t1 = LaurentPoly::monomial(e1);
    LaurentPoly f1 = LaurentPoly::constant(n, shape.lead);
    for (const auto &r : shape.roots) {
        if (r.value == 0 || r.multiplicity == 0) {
            throw InputError("roots must be nonzero with positive multiplicity");
        }
        f1 = f1 * (t1 - LaurentPoly::constant(n, r.value)).pow(r.multiplicity);
    }
    sys.fs.push_back(std::move(f1));
    for (std::size_t i = 1; i < n; ++i) {
        const auto &g = shape.chain[i - 1];
        if (g.exponent.size() != n) {
            throw DimensionMismatch("chain monomial exponent has the wrong length");
        }
        for (std::size_t j = i; j < n; ++j) {
            if (g.exponent[j] != 0) {
                throw InputError("chain monomial for t_" + std::to_string(i + 1) + " may only involve earlier variables");
            }
        }
        if (g.coefficient == 0) {
            throw InputError("chain monomial coefficient must be nonzero");
        }
        sys.fs.push_back(LaurentPoly::variable(n, i) - LaurentPoly::monomial(g.exponent, g.coefficient));
    }
    for (const auto &r : shape.roots) {
        KnownSolution sol;
        sol.multiplicity = r.multiplicity;
        sol.point.push_back(r.value);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> padded = sol.point;
            padded.resize(n, Rational(1));
            const auto &g = shape.chain[i - 1];
            sol.point.push_back(LaurentPoly::monomial(g.exponent, g.coefficient).evaluate(padded));
        }
        sys.solutions.push_back(std::move(sol));
    }
    std::vector<LatticePolytope> polys;
    for (const auto &f : sys.fs) {
        polys.push_back(newton_polytope(f));
    }
    const auto report = is_generic_position(std::move(polys));
    if (!report.generic) {
        throw NotGeneric("known-system shape is not in generic relative position", report.witness);
    }
    return sys;
}

} // namespace gkres
