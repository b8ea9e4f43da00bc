#include <algorithm>

#include "doctest.h"
#include "lgmirror/toric_polytope.hpp"

using namespace lgm;

namespace {

LatticePolytope rect(Int a, Int b) { return LatticePolytope::hull({{0, 0}, {a, 0}, {0, b}, {a, b}}); }

LatticePolytope dilated_simplex(int n, Int k) {
    std::vector<Vec> pts{Vec(n, 0)};
    for (int i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = k;
        pts.push_back(v);
    }
    return LatticePolytope::hull(pts);
}

std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Rat value_on(const PLFunction& f, const Vec& ray) {
    const auto& rays = f.fan().rays;
    auto it = std::find(rays.begin(), rays.end(), ray);
    REQUIRE(it != rays.end());
    return f.ray_values()[it - rays.begin()];
}

}  // namespace

TEST_CASE("normal fans") {
    auto nf = normal_fan(rect(3, 2));
    CHECK(sorted(nf.fan.rays) == sorted({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(nf.fan.maximal_cones().size() == 4);
    auto p2 = normal_fan(dilated_simplex(2, 1));
    CHECK(sorted(p2.fan.rays) == sorted({{1, 0}, {0, 1}, {-1, -1}}));
    auto p4 = normal_fan(dilated_simplex(4, 3));
    CHECK(sorted(p4.fan.rays) ==
          sorted({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}}));
}

TEST_CASE("support function of the rectangle") {
    auto r = rect(3, 2);
    auto nf = normal_fan(r);
    auto phi = support_function(r, nf);
    CHECK(value_on(phi, {1, 0}) == Rat(0));
    CHECK(value_on(phi, {-1, 0}) == Rat(3));
    CHECK(value_on(phi, {0, 1}) == Rat(0));
    CHECK(value_on(phi, {0, -1}) == Rat(2));
    CHECK(phi.is_strictly_convex());
}

TEST_CASE("support function is translation covariant") {
    auto r = rect(3, 2);
    auto t = LatticePolytope::hull({{5, -1}, {8, -1}, {5, 1}, {8, 1}});
    auto phi = support_function(r, normal_fan(r));
    auto psi = support_function(t, normal_fan(t));
    for (const auto& ray : phi.fan().rays) CHECK(value_on(psi, ray) == value_on(phi, ray) - Rat(dot(ray, {5, -1})));
}

TEST_CASE("support function of the unit square") {
    auto s = rect(1, 1);
    auto phi = support_function(s, normal_fan(s));
    CHECK(value_on(phi, {1, 0}) == Rat(0));
    CHECK(value_on(phi, {0, 1}) == Rat(0));
    CHECK(value_on(phi, {-1, 0}) == Rat(1));
    CHECK(value_on(phi, {0, -1}) == Rat(1));
}

TEST_CASE("support function restricted to a normal cone is -<., m>") {
    auto r = LatticePolytope::hull({{0, 0}, {2, 0}, {3, 1}, {3, 3}, {0, 2}});
    auto nf = normal_fan(r);
    auto phi = support_function(r, nf);
    for (std::size_t f = 0; f < r.faces().size(); ++f) {
        const auto& cone = nf.fan.cones[nf.cone_of_face[f]];
        for (const auto& m : r.face_vertices(static_cast<int>(f)))
            for (int k : cone) CHECK(phi.ray_values()[k] == Rat(-dot(nf.fan.rays[k], m)));
    }
}

TEST_CASE("Newton polytopes of support functions") {
    for (const auto& p : {rect(3, 2), rect(4, 4), dilated_simplex(2, 3), dilated_simplex(3, 2)}) {
        auto np = newton_polytope_of_pl(support_function(p, normal_fan(p)));
        REQUIRE(np.polytope);
        CHECK(*np.polytope == p);
    }
    auto r = rect(3, 2);
    auto nf = normal_fan(r);
    auto np = newton_polytope_of_pl(support_function(r, nf) + canonical_function(nf.fan));
    REQUIRE(np.polytope);
    CHECK(*np.polytope == LatticePolytope::hull({{1, 1}, {2, 1}}));
    auto s = dilated_simplex(4, 3);
    auto ns = normal_fan(s);
    CHECK(newton_polytope_of_pl(support_function(s, ns) + canonical_function(ns.fan)).empty);
}

TEST_CASE("Delta' and Kodaira dimension") {
    auto g2 = delta_prime_and_kodaira(rect(3, 2));
    REQUIRE(g2.delta_prime);
    CHECK(g2.delta_prime->dim() == 1);
    CHECK(g2.kodaira == 1);
    CHECK(g2.newton_identity_holds);
    auto cubic = delta_prime_and_kodaira(dilated_simplex(2, 3));
    CHECK(cubic.delta_prime->vertices() == std::vector<Vec>{{1, 1}});
    CHECK(cubic.kodaira == 0);
    auto c3 = delta_prime_and_kodaira(dilated_simplex(4, 3));
    CHECK_FALSE(c3.delta_prime);
    CHECK_FALSE(c3.kodaira);
    CHECK(kodaira_string(c3.kodaira) == "-inf");
    CHECK(c3.newton_identity_holds);
}

TEST_CASE("Newton identity holds on every smooth test polytope") {
    for (const auto& p : {rect(3, 2), rect(4, 2), rect(6, 2), rect(4, 4), dilated_simplex(2, 4), dilated_simplex(3, 4),
                          dilated_simplex(3, 5), rect(1, 1)})
        CHECK(delta_prime_and_kodaira(p).newton_identity_holds);
}

TEST_CASE("Kodaira dimension under dilation of rectangles") {
    for (Int k = 2; k <= 4; ++k) {
        auto a = delta_prime_and_kodaira(LatticePolytope::hull({{0, 0}, {3 * k, 0}, {0, 2 * k}, {3 * k, 2 * k}}));
        CHECK(a.kodaira == 1);
        CHECK(a.delta_prime->dim() == 2);
    }
}

TEST_CASE("reflexivity and Minkowski decomposition") {
    auto cubic = reflexivity_and_minkowski_check(delta_prime_and_kodaira(dilated_simplex(2, 3)));
    CHECK(cubic.reflexive);
    CHECK(cubic.minkowski_checked);
    CHECK(cubic.minkowski_holds);
    auto g2 = reflexivity_and_minkowski_check(delta_prime_and_kodaira(rect(3, 2)));
    CHECK_FALSE(g2.reflexive);
    CHECK(g2.nef_anticanonical);
    CHECK(g2.minkowski_holds);
    auto sq = delta_prime_and_kodaira(rect(1, 1));
    auto sr = reflexivity_and_minkowski_check(sq);
    CHECK_FALSE(sr.reflexive);
    CHECK_FALSE(sq.delta_prime);
}

TEST_CASE("non-smooth polytopes are refused naming the cone") {
    try {
        delta_prime_and_kodaira(LatticePolytope::hull({{0, 0}, {1, 0}, {0, 2}}));
        FAIL("expected NonSmoothError");
    } catch (const NonSmoothError& e) {
        CHECK(e.vertex == Vec{1, 0});
        CHECK(std::string(e.what()).find("not standard") != std::string::npos);
        CHECK(std::string(e.what()).find("(-2,-1)") != std::string::npos);
    }
}
