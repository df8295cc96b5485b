#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <gkres/errors.hpp>
#include <gkres/geometry.hpp>
#include <gkres/laurent.hpp>
#include <gkres/linalg.hpp>

#include "support/generators.hpp"

using namespace gkres;

namespace
{

LatticePolytope poly(std::vector<ExponentVector> pts)
{
    return LatticePolytope::from_points(std::move(pts));
}

const LatticePolytope tri1 = poly({{1, 0}, {0, 1}, {2, 2}});
const LatticePolytope tri2 = poly({{0, 0}, {1, 2}, {2, 1}});
const LatticePolytope unit_square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});

bool witness_is_valid(const std::vector<LatticePolytope> &polys, const ExponentVector &xi)
{
    if (is_zero(xi)) {
        return false;
    }
    return std::none_of(polys.begin(), polys.end(), [&](const auto &p) { return support_face(p, xi).is_vertex(); });
}

} // namespace

TEST_CASE("newton_polytope")
{
    LaurentPoly f2(2);
    f2.add_term({0, 0}, Rational(3));
    f2.add_term({1, 2}, Rational(-1, 2));
    f2.add_term({2, 1}, Rational(5));
    const auto p = newton_polytope(f2);
    CHECK(p.vertices() == std::vector<ExponentVector>{{0, 0}, {1, 2}, {2, 1}});
    CHECK(p.dim() == 2);

    const auto c = newton_polytope(LaurentPoly::constant(3, Rational(5)));
    CHECK(c.vertices() == std::vector<ExponentVector>{{0, 0, 0}});
    CHECK(c.dim() == 0);

    // 1 + x + 2x has support {0, 1}
    LaurentPoly g(1);
    g.add_term({0}, Rational(1));
    g.add_term({1}, Rational(1));
    g.add_term({1}, Rational(2));
    CHECK(newton_polytope(g).vertices() == std::vector<ExponentVector>{{0}, {1}});

    CHECK_THROWS_AS(newton_polytope(LaurentPoly(2)), ZeroPolynomial);
}

TEST_CASE("extreme_points")
{
    CHECK(extreme_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}})
          == std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(extreme_points({{0}, {1}, {2}}) == std::vector<ExponentVector>{{0}, {2}});

    SUBCASE("support of the two-triangle product")
    {
        std::vector<ExponentVector> pts;
        for (const auto &a : tri1.vertices()) {
            for (const auto &b : tri2.vertices()) {
                pts.push_back(a + b);
            }
        }
        CHECK(extreme_points(pts) == std::vector<ExponentVector>{{0, 1}, {1, 0}, {1, 3}, {3, 1}, {3, 4}, {4, 3}});
    }

    SUBCASE("lower-dimensional configurations in higher ambient dimension")
    {
        // collinear in R^3
        CHECK(extreme_points({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}})
              == std::vector<ExponentVector>{{0, 0, 0}, {3, 3, 3}});
        // planar square with its centre and an edge midpoint, in R^3
        CHECK(extreme_points({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {2, 2, 1}, {1, 1, 1}, {1, 0, 1}})
              == std::vector<ExponentVector>{{0, 0, 1}, {0, 2, 1}, {2, 0, 1}, {2, 2, 1}});
        // octahedron plus origin
        CHECK(extreme_points({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}, {0, 0, 0}}).size()
              == 6);
    }

    CHECK_THROWS_AS(extreme_points({{0, 0}, {1}}), DimensionMismatch);
}

TEST_CASE("hull idempotence on random point sets")
{
    testing::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        std::vector<ExponentVector> pts;
        for (int k = 0; k < 8; ++k) {
            pts.push_back(testing::random_point(rng, n, -3, 3));
        }
        const auto once = extreme_points(pts);
        CHECK(extreme_points(once) == once);
    }
}

TEST_CASE("extreme points agree with a brute-force unique-minimizer check")
{
    // A point is a vertex iff some functional is uniquely minimized there. Over a
    // box of small functionals this finds every vertex of small configurations.
    testing::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<ExponentVector> pts;
        for (int k = 0; k < 7; ++k) {
            pts.push_back(testing::random_point(rng, 2, 0, 4));
        }
        std::set<ExponentVector> found;
        for (Exponent a = -25; a <= 25; ++a) {
            for (Exponent b = -25; b <= 25; ++b) {
                std::vector<ExponentVector> argmin;
                Exponent best = 0;
                for (const auto &p : pts) {
                    const Exponent v = a * p[0] + b * p[1];
                    if (argmin.empty() || v < best) {
                        argmin = {p};
                        best = v;
                    } else if (v == best && std::find(argmin.begin(), argmin.end(), p) == argmin.end()) {
                        argmin.push_back(p);
                    }
                }
                if (argmin.size() == 1) {
                    found.insert(argmin.front());
                }
            }
        }
        const auto hull = extreme_points(pts);
        CHECK(std::vector<ExponentVector>(found.begin(), found.end()) == hull);
    }
}

TEST_CASE("support_face")
{
    const auto f = support_face(tri1, {1, 1});
    CHECK(f.vertices == std::vector<ExponentVector>{{0, 1}, {1, 0}});
    CHECK(f.dim == 1);

    CHECK(support_face(tri2, {0, 0}).vertices == tri2.vertices());
    CHECK(support_face(tri2, {0, 0}).dim == 2);

    const auto seg = poly({{0, 0}, {1, 0}});
    CHECK(support_face(seg, {0, 1}).vertices == seg.vertices());
    CHECK(support_face(seg, {0, 1}).dim == 1);
}

TEST_CASE("minkowski_sum of the two triangles")
{
    const auto sc = minkowski_sum({tri1, tri2});
    CHECK(sc.vertices() == std::vector<ExponentVector>{{0, 1}, {1, 0}, {1, 3}, {3, 1}, {3, 4}, {4, 3}});
    CHECK(sc.sum().dim() == 2);

    // Brute force: every vertex of the sum has exactly one preimage pair.
    for (const auto &v : sc.vertices()) {
        std::vector<std::vector<ExponentVector>> preimages;
        for (const auto &a : tri1.vertices()) {
            for (const auto &b : tri2.vertices()) {
                if (a + b == v) {
                    preimages.push_back({a, b});
                }
            }
        }
        REQUIRE(preimages.size() == 1);
        CHECK(sc.vertex_summands(v) == preimages.front());
    }
    CHECK(sc.vertex_summands({3, 1}) == std::vector<ExponentVector>{{1, 0}, {2, 1}});
    CHECK(sc.vertex_summands({4, 3}) == std::vector<ExponentVector>{{2, 2}, {2, 1}});
    CHECK(sc.vertex_summands({1, 3}) == std::vector<ExponentVector>{{0, 1}, {1, 2}});
    CHECK(sc.vertex_summands({3, 4}) == std::vector<ExponentVector>{{2, 2}, {1, 2}});
    CHECK(sc.vertex_summands({0, 1}) == std::vector<ExponentVector>{{0, 1}, {0, 0}});
    CHECK(sc.vertex_summands({1, 0}) == std::vector<ExponentVector>{{1, 0}, {0, 0}});

    // hexagon: 6 vertices, 6 edges, 1 face
    std::map<int, int> by_dim;
    for (const auto &f : sc.faces()) {
        ++by_dim[f.dim];
    }
    CHECK(by_dim == std::map<int, int>{{0, 6}, {1, 6}, {2, 1}});
    CHECK_THROWS_AS(sc.vertex_index({2, 2}), NotVertex);
}

TEST_CASE("minkowski_sum in one dimension")
{
    const auto sc = minkowski_sum({poly({{0}, {1}})});
    CHECK(sc.vertices() == std::vector<ExponentVector>{{0}, {1}});
    const auto sc2 = minkowski_sum(std::vector<LatticePolytope>{poly({{0}, {2}})});
    CHECK(sc2.vertices() == std::vector<ExponentVector>{{0}, {2}});
    // two unit segments summed in R^1 is not a square system, but the vertex sum is still computable
    const std::vector<LatticePolytope> two{poly({{0}, {1}}), poly({{0}, {1}})};
    CHECK(minkowski_vertices(two) == std::vector<ExponentVector>{{0}, {2}});
}

TEST_CASE("minkowski_sum errors")
{
    CHECK_THROWS_AS(minkowski_sum({poly({{0, 0}, {1, 0}}), poly({{0, 0}, {2, 0}})}), DegenerateSum);
    CHECK_THROWS_AS(minkowski_sum({tri1}), DimensionMismatch);
}

TEST_CASE("is_locked")
{
    const auto sc = minkowski_sum({tri1, tri2});
    for (std::size_t i = 0; i < sc.vertices().size(); ++i) {
        CHECK(is_locked(sc.faces()[i]));
    }
    // edge (3,1)-(4,3): edge of the first triangle plus the vertex (2,1)
    const auto i31 = sc.vertex_index({3, 1});
    const auto i43 = sc.vertex_index({4, 3});
    bool seen = false;
    for (const auto &f : sc.faces()) {
        if (f.vertices == std::vector<std::size_t>{i31, i43}) {
            seen = true;
            CHECK(f.summands[0].vertices == std::vector<ExponentVector>{{1, 0}, {2, 2}});
            CHECK(f.summands[1].vertices == std::vector<ExponentVector>{{2, 1}});
            CHECK(is_locked(f));
        }
    }
    CHECK(seen);
    CHECK_FALSE(is_locked(sc.faces()[sc.top()]));
}

TEST_CASE("is_generic_position")
{
    CHECK(is_generic_position({tri1, tri2}).generic);

    const std::vector<LatticePolytope> squares{unit_square, unit_square};
    const auto r = is_generic_position(squares);
    CHECK_FALSE(r.generic);
    REQUIRE(r.witness);
    CHECK(witness_is_valid(squares, *r.witness));
    // the horizontal-edge functional is a witness as well
    CHECK(witness_is_valid(squares, {0, 1}));

    CHECK(is_generic_position({poly({{0, 0}, {1, 0}}), poly({{0, 0}, {0, 1}})}).generic);
    CHECK_THROWS_AS(is_generic_position({poly({{0, 0}, {1, 0}}), poly({{0, 0}, {3, 0}})}), DegenerateSum);
}

TEST_CASE("generic position agrees with a direct sweep over functionals")
{
    // Definition check: no nonzero xi in a box may have all supporting faces positive-dimensional.
    // Exhaustive only over the box, so this is one-sided when the sweep finds nothing.
    testing::Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<LatticePolytope> polys;
        for (int i = 0; i < 2; ++i) {
            polys.push_back(LatticePolytope::from_points(testing::random_support(rng, 2, 4, 3)));
        }
        GenericityReport r;
        try {
            r = is_generic_position(polys);
        } catch (const DegenerateSum &) {
            continue;
        }
        bool violated = false;
        for (Exponent a = -6; a <= 6 && !violated; ++a) {
            for (Exponent b = -6; b <= 6 && !violated; ++b) {
                violated = witness_is_valid(polys, {a, b});
            }
        }
        CHECK(r.generic == !violated);
        if (!r.generic) {
            CHECK(witness_is_valid(polys, *r.witness));
        }
    }
}

TEST_CASE("critical_vertices")
{
    const auto sc = minkowski_sum({tri1, tri2});
    CHECK(critical_vertices(sc) == sc.vertices());

    const auto seg = minkowski_sum({poly({{0}, {3}})});
    CHECK(critical_vertices(seg) == std::vector<ExponentVector>{{0}, {3}});

    const auto squares = minkowski_sum({unit_square, unit_square});
    CHECK(squares.vertices().size() == 4);
    CHECK(critical_vertices(squares).empty());
}

TEST_CASE("sum complex invariants on random instances")
{
    testing::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<LatticePolytope> polys;
        for (std::size_t i = 0; i < n; ++i) {
            polys.push_back(LatticePolytope::from_points(testing::random_support(rng, n, 5, 3)));
        }
        SumComplex sc = [&] {
            for (;;) {
                try {
                    return minkowski_sum(polys);
                } catch (const DegenerateSum &) {
                    polys.back() = LatticePolytope::from_points(testing::random_support(rng, n, 5, 3));
                }
            }
        }();
        const auto &faces = sc.faces();

        // Euler: alternating face count over all nonempty faces is 1.
        int euler = 0;
        for (const auto &f : faces) {
            euler += f.dim % 2 == 0 ? 1 : -1;
        }
        CHECK(euler == 1);

        for (std::size_t k = 0; k < faces.size(); ++k) {
            const auto &f = faces[k];
            // decomposition: face vertices = extreme points of sums of summand vertices
            std::vector<ExponentVector> sums{ExponentVector(n, 0)};
            int summand_dims = 0;
            for (const auto &s : f.summands) {
                std::vector<ExponentVector> next;
                for (const auto &a : sums) {
                    for (const auto &b : s.vertices) {
                        next.push_back(a + b);
                    }
                }
                sums = std::move(next);
                summand_dims += s.dim;
            }
            CHECK(extreme_points(sums) == sc.face_vertices(k));
            CHECK(summand_dims >= f.dim);

            // decomposition independence: another functional in the normal cone
            ExponentVector alt = scaled(f.normal, 3);
            for (std::size_t j = 0; j < faces.size(); ++j) {
                const auto &g = faces[j];
                if (g.dim == static_cast<int>(n) - 1
                    && std::includes(g.vertices.begin(), g.vertices.end(), f.vertices.begin(), f.vertices.end())) {
                    alt = alt + g.normal;
                    break;
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(support_face(sc.summands()[i], alt) == f.summands[i]);
            }

            // downward lockedness
            if (is_locked(f)) {
                for (const auto &g : faces) {
                    if (std::includes(f.vertices.begin(), f.vertices.end(), g.vertices.begin(), g.vertices.end())) {
                        CHECK(is_locked(g));
                    }
                }
            }
        }

        // grading: every maximal chain from a vertex has length n
        std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t face, std::size_t depth) {
            if (faces[face].up.empty()) {
                CHECK(face == sc.top());
                CHECK(depth == n);
                return;
            }
            for (auto u : faces[face].up) {
                walk(u, depth + 1);
            }
        };
        walk(0, 0);
    }
}
