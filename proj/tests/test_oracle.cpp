#include <doctest.h>

#include <gkres/engine.hpp>
#include <gkres/errors.hpp>
#include <gkres/oracle.hpp>

#include "support/generators.hpp"

using namespace gkres;

namespace
{

LatticePolytope poly(std::vector<ExponentVector> pts)
{
    return LatticePolytope::from_points(std::move(pts));
}

} // namespace

TEST_CASE("volume")
{
    CHECK(volume(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 1);
    CHECK(volume(poly({{0, 0}, {1, 0}, {0, 1}})) == Rational(1, 2));
    CHECK(volume(poly({{0, 0}, {1, 1}})) == 0);
    CHECK(volume(poly({{0}, {5}})) == 5);
    CHECK(volume(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Rational(1, 6));
    // cube [0,2]^3
    std::vector<ExponentVector> cube;
    for (Exponent a : {0, 2}) {
        for (Exponent b : {0, 2}) {
            for (Exponent c : {0, 2}) {
                cube.push_back({a, b, c});
            }
        }
    }
    CHECK(volume(poly(cube)) == 8);
    // hexagon of the worked example: shoelace area 9
    CHECK(volume(poly({{0, 1}, {1, 0}, {3, 1}, {4, 3}, {3, 4}, {1, 3}})) == 9);
}

TEST_CASE("volume matches the shoelace formula on random polygons")
{
    testing::Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = testing::random_support(rng, 2, 8, 6);
        const auto p = poly(pts);
        if (p.dim() < 2) {
            continue;
        }
        // order vertices by angle around an interior point via cross products
        auto verts = p.vertices();
        const auto &o = verts.front();
        std::sort(verts.begin() + 1, verts.end(), [&](const auto &a, const auto &b) {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]) > 0;
        });
        Exponent twice = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto &a = verts[i];
            const auto &b = verts[(i + 1) % verts.size()];
            twice += a[0] * b[1] - a[1] * b[0];
        }
        CHECK(volume(p) == Rational(std::abs(twice), 2));
    }
}

TEST_CASE("mixed_volume_oracle")
{
    const auto s1 = poly({{0, 0}, {1, 0}});
    const auto s2 = poly({{0, 0}, {0, 1}});
    CHECK(mixed_volume_oracle({s1, s2}) == Rational(1, 2));
    CHECK(mixed_volume_oracle({poly({{1, 0}, {0, 1}, {2, 2}}), poly({{0, 0}, {1, 2}, {2, 1}})}) == 3);
    const auto tri = poly({{0, 0}, {3, 1}, {1, 2}});
    CHECK(mixed_volume_oracle({tri, tri}) == volume(tri));
    // non-generic inputs are fine here
    const auto square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(mixed_volume_oracle({square, square}) == 1);
}

TEST_CASE("oracle properties on random instances")
{
    testing::Rng rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<LatticePolytope> polys;
        for (std::size_t i = 0; i < n; ++i) {
            polys.push_back(poly(testing::random_support(rng, n, 4, 3)));
        }
        const auto v = mixed_volume_oracle(polys);
        CHECK(v >= 0);

        // symmetry
        std::vector<LatticePolytope> rev(polys.rbegin(), polys.rend());
        CHECK(mixed_volume_oracle(rev) == v);

        // multilinearity in the first argument
        const auto extra = poly(testing::random_support(rng, n, 3, 2));
        auto summed = polys;
        summed[0] = LatticePolytope::from_points(minkowski_vertices(std::vector<LatticePolytope>{polys[0], extra}));
        auto other = polys;
        other[0] = extra;
        CHECK(mixed_volume_oracle(summed) == v + mixed_volume_oracle(other));

        // monotonicity
        auto bigger = polys;
        auto pts = polys[0].vertices();
        pts.push_back(testing::random_point(rng, n, -1, 4));
        bigger[0] = poly(pts);
        CHECK(mixed_volume_oracle(bigger) >= v);
    }
}

TEST_CASE("make_known_system")
{
    KnownSystemShape single;
    single.roots = {{Rational(2), 1}};
    single.chain = {{Rational(3), {0, 0}}};
    const auto k1 = make_known_system(single);
    CHECK(k1.fs[0].to_string() == "-2/1*(0,0) + 1/1*(1,0)");
    CHECK(k1.fs[1].to_string() == "-3/1*(0,0) + 1/1*(0,1)");
    REQUIRE(k1.solutions.size() == 1);
    CHECK(k1.solutions[0].point == std::vector<Rational>{Rational(2), Rational(3)});

    KnownSystemShape two;
    two.roots = {{Rational(1), 1}, {Rational(2), 1}};
    two.chain = {{Rational(5), {0, 0}}};
    const auto k2 = make_known_system(two);
    CHECK(k2.fs[0].to_string() == "2/1*(0,0) + -3/1*(1,0) + 1/1*(2,0)");
    CHECK(k2.solutions.size() == 2);
    CHECK(k2.solutions[1].point == std::vector<Rational>{Rational(2), Rational(5)});

    KnownSystemShape doubled;
    doubled.roots = {{Rational(2), 2}};
    doubled.chain = {{Rational(7), {0, 0}}};
    const auto k3 = make_known_system(doubled);
    const SystemInstance sys(k3.fs);
    CHECK(count_solutions(sys) == 2);
    CHECK(power_sums(sys, 0, 2) == std::vector<Rational>{Rational(4), Rational(8)});

    // every listed solution satisfies the system exactly
    for (const auto *k : {&k1, &k2, &k3}) {
        for (const auto &s : k->solutions) {
            for (const auto &f : k->fs) {
                CHECK(f.evaluate(s.point) == 0);
            }
        }
    }

    KnownSystemShape bad;
    bad.roots = {{Rational(0), 1}};
    bad.chain = {{Rational(1), {0, 0}}};
    CHECK_THROWS_AS(make_known_system(bad), InputError);
    bad.roots = {{Rational(1), 1}};
    bad.chain = {{Rational(1), {0, 1}}};
    CHECK_THROWS_AS(make_known_system(bad), InputError);
}
