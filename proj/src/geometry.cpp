#include <gkres/geometry.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <gkres/errors.hpp>
#include <gkres/laurent.hpp>
#include <gkres/linalg.hpp>

namespace gkres
{

namespace
{

void sort_unique(std::vector<ExponentVector> &points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

void check_lengths(std::span<const ExponentVector> points)
{
    for (const auto &p : points) {
        if (p.size() != points.front().size()) {
            throw DimensionMismatch("points of different dimensions");
        }
    }
}

// Advances a strictly increasing k-combination of {0..m-1}; false when exhausted.
bool next_combination(std::vector<std::size_t> &idx, std::size_t m)
{
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < m - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b)
{
    std::vector<std::size_t> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool contains(const std::vector<std::size_t> &big, const std::vector<std::size_t> &small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<ExponentVector> select(std::span<const ExponentVector> points, const std::vector<std::size_t> &idx)
{
    std::vector<ExponentVector> r;
    r.reserve(idx.size());
    for (auto i : idx) {
        r.push_back(points[i]);
    }
    return r;
}

} // namespace

std::vector<Facet> enumerate_facets(std::span<const ExponentVector> points)
{
    std::vector<Facet> facets;
    if (points.empty()) {
        return facets;
    }
    const std::size_t d = points.front().size();
    const std::size_t m = points.size();
    if (d == 0 || m < d) {
        return facets;
    }
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<char>> member_flags;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) {
        idx[i] = i;
    }
    std::vector<ExponentVector> rows(d - 1);
    std::vector<Exponent> values(m);
    do {
        // Any d points of a known facet span that facet's hyperplane.
        bool known = false;
        for (const auto &flags : member_flags) {
            if (std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return flags[i]; })) {
                known = true;
                break;
            }
        }
        if (known) {
            continue;
        }
        const auto &base = points[idx[0]];
        for (std::size_t k = 1; k < d; ++k) {
            rows[k - 1] = points[idx[k]] - base;
        }
        ExponentVector normal = orthogonal_complement(rows, d);
        if (is_zero(normal)) {
            continue;
        }
        const Exponent offset = dot(normal, base);
        bool pos = false;
        bool neg = false;
        for (std::size_t i = 0; i < m && !(pos && neg); ++i) {
            values[i] = checked_sub(dot(normal, points[i]), offset);
            pos = pos || values[i] > 0;
            neg = neg || values[i] < 0;
        }
        if (pos && neg) {
            continue;
        }
        Facet f;
        f.normal = neg ? -normal : normal;
        f.offset = neg ? -offset : offset;
        std::vector<char> flags(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (values[i] == 0) {
                f.members.push_back(i);
                flags[i] = 1;
            }
        }
        if (seen.insert(f.members).second) {
            member_flags.push_back(std::move(flags));
            facets.push_back(std::move(f));
        }
    } while (next_combination(idx, m));
    return facets;
}

std::vector<ExponentVector> extreme_points(std::vector<ExponentVector> points)
{
    if (points.empty()) {
        throw InputError("extreme points of an empty set");
    }
    check_lengths(points);
    sort_unique(points);
    if (points.size() == 1) {
        return points;
    }
    std::vector<ExponentVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(points[i] - points[0]);
    }
    // Coordinate projection onto the pivot columns is injective on the affine hull.
    const auto pivots = pivot_columns(diffs);
    std::vector<ExponentVector> projected;
    projected.reserve(points.size());
    for (const auto &p : points) {
        ExponentVector q;
        for (auto c : pivots) {
            q.push_back(p[c]);
        }
        projected.push_back(std::move(q));
    }
    const auto facets = enumerate_facets(projected);
    // A point is a vertex iff the intersection of the facets through it is the point alone.
    std::vector<std::vector<std::size_t>> smallest(points.size());
    std::vector<char> touched(points.size(), 0);
    for (const auto &f : facets) {
        for (auto i : f.members) {
            smallest[i] = touched[i] ? intersect(smallest[i], f.members) : f.members;
            touched[i] = 1;
        }
    }
    std::vector<ExponentVector> result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (touched[i] && smallest[i].size() == 1) {
            result.push_back(points[i]);
        }
    }
    return result;
}

LatticePolytope LatticePolytope::from_points(std::vector<ExponentVector> points)
{
    auto vertices = extreme_points(std::move(points));
    const int dim = affine_dimension(vertices);
    return LatticePolytope(std::move(vertices), dim);
}

std::string LatticePolytope::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) {
            s += ", ";
        }
        s += gkres::to_string(vertices_[i]);
    }
    return s + "]";
}

LatticePolytope newton_polytope(const LaurentPoly &f)
{
    if (f.is_zero()) {
        throw ZeroPolynomial("the zero polynomial has no Newton polytope");
    }
    return LatticePolytope::from_points(f.support());
}

Face support_face(const LatticePolytope &polytope, const ExponentVector &xi)
{
    if (xi.size() != polytope.ambient_dim()) {
        throw DimensionMismatch("functional has the wrong dimension");
    }
    Face face;
    Exponent best = 0;
    for (const auto &v : polytope.vertices()) {
        const Exponent value = dot(xi, v);
        if (face.vertices.empty() || value < best) {
            best = value;
            face.vertices.clear();
            face.vertices.push_back(v);
        } else if (value == best) {
            face.vertices.push_back(v);
        }
    }
    face.dim = affine_dimension(face.vertices);
    return face;
}

FaceLattice face_lattice(const LatticePolytope &polytope)
{
    const std::size_t n = polytope.ambient_dim();
    if (polytope.dim() != static_cast<int>(n)) {
        throw DegenerateSum("face lattice requires a full-dimensional polytope (dim " + std::to_string(polytope.dim())
                            + " in R^" + std::to_string(n) + ")");
    }
    FaceLattice lattice;
    lattice.vertices = polytope.vertices();
    const auto &vertices = lattice.vertices;
    const auto facets = enumerate_facets(vertices);

    std::set<std::vector<std::size_t>> sets;
    std::vector<std::vector<std::size_t>> queue;
    for (const auto &f : facets) {
        if (sets.insert(f.members).second) {
            queue.push_back(f.members);
        }
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto &f : facets) {
            auto cut = intersect(queue[q], f.members);
            if (!cut.empty() && sets.insert(cut).second) {
                queue.push_back(std::move(cut));
            }
        }
    }
    std::vector<std::size_t> all(vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    sets.insert(all);

    for (const auto &s : sets) {
        FaceLattice::Node node;
        node.vertices = s;
        node.dim = affine_dimension(select(vertices, s));
        node.normal = ExponentVector(n, 0);
        if (s.size() != vertices.size()) {
            for (const auto &f : facets) {
                if (contains(f.members, s)) {
                    node.normal = node.normal + f.normal;
                }
            }
        }
        lattice.faces.push_back(std::move(node));
    }
    std::sort(lattice.faces.begin(), lattice.faces.end(), [](const auto &a, const auto &b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    auto &faces = lattice.faces;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (faces[j].dim == faces[i].dim + 1 && contains(faces[j].vertices, faces[i].vertices)) {
                faces[i].up.push_back(j);
                faces[j].down.push_back(i);
            }
        }
    }
    return lattice;
}

std::size_t SumComplex::vertex_index(const ExponentVector &a) const
{
    const auto &v = sum_.vertices();
    auto it = std::lower_bound(v.begin(), v.end(), a);
    if (it == v.end() || *it != a) {
        throw NotVertex(gkres::to_string(a) + " is not a vertex of the Minkowski sum");
    }
    return static_cast<std::size_t>(it - v.begin());
}

std::vector<ExponentVector> SumComplex::vertex_summands(const ExponentVector &a) const
{
    const auto &face = faces_[vertex_index(a)];
    std::vector<ExponentVector> parts;
    for (const auto &s : face.summands) {
        parts.push_back(s.vertices.front());
    }
    return parts;
}

std::vector<std::size_t> SumComplex::cofaces(std::size_t face) const
{
    std::vector<std::size_t> result;
    for (std::size_t j = 0; j < faces_.size(); ++j) {
        if (contains(faces_[j].vertices, faces_[face].vertices)) {
            result.push_back(j);
        }
    }
    return result;
}

std::vector<ExponentVector> SumComplex::face_vertices(std::size_t face) const
{
    return select(sum_.vertices(), faces_[face].vertices);
}

std::vector<ExponentVector> minkowski_vertices(std::span<const LatticePolytope> polys)
{
    if (polys.empty()) {
        throw InputError("Minkowski sum of an empty list");
    }
    std::vector<ExponentVector> acc = polys.front().vertices();
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].ambient_dim() != acc.front().size()) {
            throw DimensionMismatch("Minkowski summands live in different dimensions");
        }
        std::vector<ExponentVector> next;
        next.reserve(acc.size() * polys[i].vertices().size());
        for (const auto &a : acc) {
            for (const auto &b : polys[i].vertices()) {
                next.push_back(a + b);
            }
        }
        acc = extreme_points(std::move(next));
    }
    return acc;
}

SumComplex minkowski_sum(std::vector<LatticePolytope> polys)
{
    if (polys.empty()) {
        throw InputError("Minkowski sum of an empty list");
    }
    const std::size_t n = polys.front().ambient_dim();
    if (polys.size() != n) {
        throw DimensionMismatch("need exactly n = " + std::to_string(n) + " polytopes, got "
                                + std::to_string(polys.size()));
    }
    auto sum = LatticePolytope::from_points(minkowski_vertices(polys));
    if (sum.dim() < static_cast<int>(n)) {
        throw DegenerateSum("the Minkowski sum has dimension " + std::to_string(sum.dim()) + " < "
                            + std::to_string(n));
    }
    auto lattice = face_lattice(sum);
    std::vector<SumFace> faces;
    faces.reserve(lattice.faces.size());
    for (auto &node : lattice.faces) {
        SumFace f;
        f.vertices = std::move(node.vertices);
        f.dim = node.dim;
        f.normal = std::move(node.normal);
        f.up = std::move(node.up);
        f.down = std::move(node.down);
        for (const auto &p : polys) {
            f.summands.push_back(support_face(p, f.normal));
        }
        faces.push_back(std::move(f));
    }
    return SumComplex(std::move(polys), std::move(sum), std::move(faces));
}

bool is_locked(const SumFace &face)
{
    return std::any_of(face.summands.begin(), face.summands.end(), [](const Face &f) { return f.is_vertex(); });
}

GenericityReport is_generic_position(const SumComplex &complex)
{
    const int n = static_cast<int>(complex.ambient_dim());
    for (const auto &face : complex.faces()) {
        if (face.dim == n - 1 && !is_locked(face)) {
            return {false, face.normal};
        }
    }
    return {true, std::nullopt};
}

GenericityReport is_generic_position(std::vector<LatticePolytope> polys)
{
    return is_generic_position(minkowski_sum(std::move(polys)));
}

bool is_critical(const SumComplex &complex, std::size_t vertex)
{
    const auto top = complex.top();
    for (auto j : complex.cofaces(vertex)) {
        if (j != top && !is_locked(complex.faces()[j])) {
            return false;
        }
    }
    return true;
}

std::vector<ExponentVector> critical_vertices(const SumComplex &complex)
{
    std::vector<ExponentVector> result;
    for (std::size_t i = 0; i < complex.vertices().size(); ++i) {
        if (is_critical(complex, i)) {
            result.push_back(complex.vertices()[i]);
        }
    }
    return result;
}

} // namespace gkres
