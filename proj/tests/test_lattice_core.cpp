#include <algorithm>
#include <random>

#include "doctest.h"
#include "lgmirror/linalg.hpp"
#include "lgmirror/lattice_core.hpp"

using namespace lgm;

namespace {

std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Vec unit(int n, int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

LatticePolytope standard_simplex(int n, Int k) {
    std::vector<Vec> pts{Vec(n, 0)};
    for (int i = 0; i < n; ++i) pts.push_back(vscale(k, unit(n, i)));
    return LatticePolytope::hull(pts);
}

}  // namespace

TEST_CASE("hull of the rectangle has four vertices, facets and edges") {
    auto r = LatticePolytope::hull({{0, 0}, {3, 0}, {0, 2}, {3, 2}, {1, 1}, {2, 0}});
    CHECK(r.vertices().size() == 4);
    CHECK(r.facets().size() == 4);
    CHECK(r.faces_of_dim(1).size() == 4);
    CHECK(r.faces_of_dim(0).size() == 4);
    CHECK(r.faces().back().dim == 2);
    for (const auto& v : r.vertices())
        for (const auto& f : r.facets()) CHECK(f.contains(v));
    for (const auto& f : r.facets()) CHECK(vgcd(f.normal) == 1);
}

TEST_CASE("hull of a single point") {
    auto p = LatticePolytope::hull({{0, 0}});
    CHECK(p.dim() == 0);
    CHECK(p.faces().size() == 1);
    CHECK(p.lattice_points().size() == 1);
}

TEST_CASE("hull rejects points of mixed dimension") {
    CHECK_THROWS(LatticePolytope::hull({{0, 0}, {1, 0, 0}}));
}

TEST_CASE("dual polytope of the genus-2 rectangle: lattice points are the six listed points") {
    std::vector<Vec> six = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 3}, {0, -1, 2}};
    auto p = LatticePolytope::hull(six);
    CHECK(sorted(p.lattice_points()) == sorted(six));
    // (0,0,1) lies in the interior, so only five of the six are vertices
    CHECK(p.vertices().size() == 5);
    CHECK(p.contains_relint({0, 0, 1}));
}

TEST_CASE("interior lattice points of the rectangle") {
    auto r = LatticePolytope::hull({{0, 0}, {3, 0}, {0, 2}, {3, 2}});
    CHECK(sorted(r.lattice_points(true, 1)) == std::vector<Vec>{{1, 1}, {2, 1}});
    CHECK(r.lattice_points().size() == 12);
    CHECK(r.normalized_volume() == 12);
}

TEST_CASE("unit segment dilates have j-1 interior points") {
    auto s = LatticePolytope::hull({{0}, {1}});
    for (Int j = 1; j <= 12; ++j) CHECK(s.count_lattice_points(true, j) == j - 1);
}

TEST_CASE("standard simplices: interior points of the j-th dilate are C(j-1, i)") {
    for (int i = 1; i <= 4; ++i) {
        auto s = standard_simplex(i, 1);
        for (Int j = 1; j <= 12; ++j) CHECK(s.count_lattice_points(true, j) == binom(j - 1, i));
    }
}

TEST_CASE("relative interior of a lower-dimensional face") {
    auto s = LatticePolytope::hull({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}});
    CHECK(s.dim() == 2);
    CHECK(s.count_lattice_points(true, 1) == 1);
    CHECK(s.count_lattice_points(false, 1) == 10);
}

TEST_CASE("lattice point counts of dilates are polynomial of degree dim") {
    std::vector<LatticePolytope> ps = {
        LatticePolytope::hull({{0, 0}, {3, 0}, {0, 2}, {3, 2}}),
        LatticePolytope::hull({{0, 0}, {2, 1}, {1, 3}}),
        standard_simplex(3, 2),
        LatticePolytope::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
    };
    for (const auto& p : ps) {
        const int n = p.dim();
        std::vector<Int> c;
        for (Int j = 1; j <= n + 3; ++j) c.push_back(p.count_lattice_points(false, j));
        for (int k = 0; k <= n; ++k)
            for (std::size_t i = 0; i + 1 < c.size() - k; ++i) c[i] = c[i + 1] - c[i];
        // after n+1 differences the two remaining values vanish
        CHECK(c[0] == 0);
        CHECK(c[1] == 0);
    }
}

TEST_CASE("dual cone of the cone over 3 times the standard 4-simplex") {
    auto c = cone_over(standard_simplex(4, 3));
    CHECK(c.generators().size() == 5);
    auto d = dual_cone(c);
    std::vector<Vec> expected = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {-1, -1, -1, -1, 3}};
    CHECK(sorted(d.generators()) == sorted(expected));
}

TEST_CASE("first orthant is self-dual") {
    auto c = Cone::generated_by({{1, 0}, {0, 1}}, 2);
    CHECK(dual_cone(c) == c);
}

TEST_CASE("dual cone of the cone over the rectangle matches brute-force membership") {
    auto r = LatticePolytope::hull({{0, 0}, {3, 0}, {0, 2}, {3, 2}});
    auto d = dual_cone(cone_over(r));
    for (Int a = -6; a <= 6; ++a)
        for (Int b = -6; b <= 6; ++b)
            for (Int t = -6; t <= 6; ++t) {
                Vec n{a, b, t};
                bool in = true;
                for (const auto& v : r.vertices()) in = in && dot(n, {v[0], v[1], 1}) >= 0;
                CHECK(d.contains(n) == in);
            }
}

TEST_CASE("zero cone has no proper dual") {
    auto z = Cone::generated_by({}, 2);
    CHECK_THROWS(dual_cone(z));
}

TEST_CASE("standard cones") {
    CHECK(is_standard_cone(Cone::generated_by({{1, 0, 0}, {0, 1, 0}}, 3)));
    CHECK_FALSE(is_standard_cone(Cone::generated_by({{1, 1}, {1, -1}}, 2)));
    CHECK(det({{1, 1}, {1, -1}}) == -2);
    CHECK(is_standard_cone(Cone::generated_by({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}, 3)));
}

TEST_CASE("cone over polytopes") {
    auto c = cone_over(LatticePolytope::hull({{0, 0}, {3, 0}, {0, 2}, {3, 2}}));
    CHECK(sorted(c.generators()) == sorted({{0, 0, 1}, {3, 0, 1}, {0, 2, 1}, {3, 2, 1}}));
    auto p = cone_over(LatticePolytope::hull({{2}}));
    CHECK(p.generators() == std::vector<Vec>{{2, 1}});
}

TEST_CASE("minkowski sums") {
    auto p = LatticePolytope::hull({{0, 0}, {2, 1}, {1, 3}});
    CHECK(minkowski_sum(p, LatticePolytope::hull({{0, 0}})) == p);
    auto sq = minkowski_sum(LatticePolytope::hull({{0, 0}, {1, 0}}), LatticePolytope::hull({{0, 0}, {0, 1}}));
    CHECK(sq == LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK_THROWS(minkowski_sum(p, LatticePolytope::hull({{0}})));
}

TEST_CASE("checked arithmetic reports overflow") {
    CHECK_THROWS_AS(mul(Int(1) << 62, 4), std::overflow_error);
    CHECK_THROWS_AS(add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("smith normal form of an index-2 lattice") {
    auto s = smith_normal_form({{1, 1}, {1, -1}});
    CHECK(s.divisors == Vec{1, 2});
}

TEST_CASE("random cones: dual is an involution and faces are anti-isomorphic") {
    std::mt19937_64 rng(20240501);
    int tested = 0;
    while (tested < 100) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int ng = n + static_cast<int>(rng() % 4);
        std::vector<Vec> gens;
        for (int k = 0; k < ng; ++k) {
            Vec v(n);
            for (int i = 0; i + 1 < n; ++i) v[i] = static_cast<Int>(rng() % 17) - 8;
            v[n - 1] = 1 + static_cast<Int>(rng() % 8);
            gens.push_back(v);
        }
        Cone c = Cone::generated_by(gens, n);
        if (!c.full_dimensional()) continue;
        ++tested;
        Cone d = dual_cone(c);
        REQUIRE(dual_cone(d) == c);
        // face F of c maps to the dual generators vanishing on F
        const auto& cf = c.faces();
        const auto& df = d.faces();
        CHECK(cf.size() == df.size());
        std::vector<std::vector<int>> image;
        for (const auto& f : cf) {
            std::vector<int> g;
            for (std::size_t j = 0; j < d.generators().size(); ++j) {
                bool zero = true;
                for (int i : f) zero = zero && dot(d.generators()[j], c.generators()[i]) == 0;
                if (zero) g.push_back(static_cast<int>(j));
            }
            CHECK(std::find(df.begin(), df.end(), g) != df.end());
            CHECK(c.face_dim(f) + d.face_dim(g) == n);
            image.push_back(g);
        }
        auto uniq = image;
        std::sort(uniq.begin(), uniq.end());
        CHECK(std::unique(uniq.begin(), uniq.end()) == uniq.end());
        for (std::size_t a = 0; a < cf.size(); ++a)
            for (std::size_t b = 0; b < cf.size(); ++b) {
                bool sub = std::includes(cf[b].begin(), cf[b].end(), cf[a].begin(), cf[a].end());
                bool rev = std::includes(image[a].begin(), image[a].end(), image[b].begin(), image[b].end());
                CHECK(sub == rev);
            }
    }
}
