#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gkres/exponent.hpp>

namespace gkres
{

class LaurentPoly;

// Convex hull of finitely many lattice points, stored by its vertices in
// lexicographic order.
class LatticePolytope
{
public:
    // Hull of the given points; non-extreme and repeated points are dropped.
    static LatticePolytope from_points(std::vector<ExponentVector> points);

    std::size_t ambient_dim() const noexcept { return vertices_.front().size(); }
    int dim() const noexcept { return dim_; }
    const std::vector<ExponentVector> &vertices() const noexcept { return vertices_; }

    friend bool operator==(const LatticePolytope &, const LatticePolytope &) = default;

    // "[(0,0), (1,2), (2,1)]"
    std::string to_string() const;

private:
    LatticePolytope(std::vector<ExponentVector> vertices, int dim) : vertices_(std::move(vertices)), dim_(dim) {}

    std::vector<ExponentVector> vertices_;
    int dim_;
};

// A face of some polytope: argmin of a linear functional over its vertices.
struct Face {
    std::vector<ExponentVector> vertices;
    int dim = 0;

    bool is_vertex() const noexcept { return dim == 0; }
    friend bool operator==(const Face &, const Face &) = default;
};

// Points of the set that are not convex combinations of the others, sorted.
std::vector<ExponentVector> extreme_points(std::vector<ExponentVector> points);

// Throws ZeroPolynomial for the zero polynomial.
LatticePolytope newton_polytope(const LaurentPoly &f);

// Face of P on which <xi, .> attains its minimum. xi = 0 gives P itself.
Face support_face(const LatticePolytope &polytope, const ExponentVector &xi);

// Facet of a full-dimensional point configuration: <normal, p> >= offset for all
// points, with equality exactly on `members`. The normal is primitive.
struct Facet {
    ExponentVector normal;
    Exponent offset = 0;
    std::vector<std::size_t> members;
};

// Brute-force facet enumeration over affinely independent d-subsets of the points.
// Points must be distinct and span their ambient space.
std::vector<Facet> enumerate_facets(std::span<const ExponentVector> points);

// Face lattice of a full-dimensional polytope, faces identified by vertex index sets.
struct FaceLattice {
    struct Node {
        std::vector<std::size_t> vertices;
        int dim = 0;
        // Relative-interior point of the normal cone: sum of the inner normals of the
        // facets containing the face (zero for the polytope itself).
        ExponentVector normal;
        std::vector<std::size_t> up;   // faces covering this one
        std::vector<std::size_t> down; // faces covered by this one
    };

    std::vector<ExponentVector> vertices;
    // Sorted by (dim, vertex indices); vertex i is face i and the polytope is the last face.
    std::vector<Node> faces;
};

// Throws DegenerateSum if P is not full-dimensional.
FaceLattice face_lattice(const LatticePolytope &polytope);

// A face of the Minkowski sum together with its summand decomposition.
struct SumFace {
    std::vector<std::size_t> vertices;
    int dim = 0;
    ExponentVector normal;
    std::vector<Face> summands;
    std::vector<std::size_t> up;
    std::vector<std::size_t> down;
};

class SumComplex
{
public:
    SumComplex(std::vector<LatticePolytope> summands, LatticePolytope sum, std::vector<SumFace> faces)
        : summands_(std::move(summands)), sum_(std::move(sum)), faces_(std::move(faces))
    {
    }

    std::size_t ambient_dim() const noexcept { return sum_.ambient_dim(); }
    const std::vector<LatticePolytope> &summands() const noexcept { return summands_; }
    const LatticePolytope &sum() const noexcept { return sum_; }
    const std::vector<SumFace> &faces() const noexcept { return faces_; }
    const std::vector<ExponentVector> &vertices() const noexcept { return sum_.vertices(); }

    // Index of the whole polytope among faces().
    std::size_t top() const noexcept { return faces_.size() - 1; }

    // Index of vertex A; vertex faces share the index. Throws NotVertex.
    std::size_t vertex_index(const ExponentVector &a) const;

    // The unique (A_1, ..., A_n) with A = A_1 + ... + A_n.
    std::vector<ExponentVector> vertex_summands(const ExponentVector &a) const;

    // Indices of all faces containing the given face, itself included.
    std::vector<std::size_t> cofaces(std::size_t face) const;

    std::vector<ExponentVector> face_vertices(std::size_t face) const;

private:
    std::vector<LatticePolytope> summands_;
    LatticePolytope sum_;
    std::vector<SumFace> faces_;
};

// Vertices of the Minkowski sum, without building its face lattice. Any dimension.
std::vector<ExponentVector> minkowski_vertices(std::span<const LatticePolytope> polys);

// Throws DegenerateSum if the sum is not full-dimensional and DimensionMismatch if the
// number of polytopes differs from the ambient dimension.
SumComplex minkowski_sum(std::vector<LatticePolytope> polys);

bool is_locked(const SumFace &face);

struct GenericityReport {
    bool generic = false;
    // Functional xi none of whose supporting faces is a vertex; set iff !generic.
    std::optional<ExponentVector> witness;
};

// Only facets are tested: a face inside a locked face is locked.
GenericityReport is_generic_position(const SumComplex &complex);
GenericityReport is_generic_position(std::vector<LatticePolytope> polys);

// Vertices all of whose proper cofaces are locked.
std::vector<ExponentVector> critical_vertices(const SumComplex &complex);

bool is_critical(const SumComplex &complex, std::size_t vertex);

} // namespace gkres
