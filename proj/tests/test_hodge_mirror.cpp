#include "doctest.h"
#include "lgmirror/hodge_mirror.hpp"
#include "lgmirror/io.hpp"

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

std::vector<LatticePolytope> test_polytopes() {
    return {rect(3, 2), rect(4, 2), rect(6, 2), rect(4, 4), dilated_simplex(2, 3), dilated_simplex(2, 4),
            dilated_simplex(3, 4), dilated_simplex(3, 5)};
}

}  // namespace

TEST_CASE("handlebody times torus values") {
    CHECK(ep_handlebody_torus(1, 0, 0) == -2);
    CHECK(ep_handlebody_torus(1, 0, 1) == 1);
    CHECK(ep_handlebody_torus(0, 2, 1) == -2);
    CHECK(ep_handlebody_torus(0, 0, 0) == 1);
    CHECK(ep_handlebody_torus(-1, 2, 0) == 0);
}

TEST_CASE("handlebody formula agrees with inclusion-exclusion") {
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l)
            for (int p = 0; p <= k + l + 1; ++p) CHECK(ep_handlebody_torus(k, l, p) == ep_handlebody_torus_oracle(k, l, p));
}

TEST_CASE("strata Euler numbers of the genus-2 rectangle") {
    auto a = delta_prime_and_kodaira(rect(3, 2));
    auto ctx = make_mirror_context(a, standard_triangulation(a));
    auto se = ep_strata(ctx);
    CHECK(se.a_guard_ok);
    CHECK(se.y[3][0] == 2);
    CHECK(ep_mirror(ctx, se, 0) == -ep_S(a.delta, ctx.tc, 1));
}

TEST_CASE("the two routes to e^{p,p}(Y_tor) agree") {
    for (const auto& p : test_polytopes()) {
        auto a = delta_prime_and_kodaira(p);
        auto ctx = make_mirror_context(a, standard_triangulation(a));
        for (int q = 0; q <= ctx.d + 1; ++q) CHECK(epp_ytor_closed(ctx, q) == epp_ytor_pieces(ctx, q));
    }
}

TEST_CASE("the two routes to the upper diagonal agree") {
    for (const auto& p : test_polytopes()) {
        auto a = delta_prime_and_kodaira(p);
        auto ctx = make_mirror_context(a, standard_triangulation(a));
        for (int q = 0; q <= ctx.d; ++q)
            if (2 * q > ctx.d) CHECK(hpp_mirror_upper(ctx, q) == hpp_mirror_upper_orbits(ctx, q));
        CHECK_THROWS_AS(hpp_mirror_upper(ctx, 0), std::invalid_argument);
    }
}

TEST_CASE("A vanishes away from the boundary of Delta'") {
    for (const auto& p : test_polytopes()) {
        auto a = delta_prime_and_kodaira(p);
        CHECK(ep_strata(make_mirror_context(a, standard_triangulation(a))).a_guard_ok);
    }
}

TEST_CASE("mirror table of the genus-2 curve") {
    auto a = delta_prime_and_kodaira(rect(3, 2));
    auto ctx = make_mirror_context(a, standard_triangulation(a));
    auto t = mirror_hodge_table(ctx, ep_strata(ctx));
    CHECK(t.at(0, 0) == 2);
    CHECK(t.at(1, 1) == 2);
    CHECK(t.at(0, 1) == 1);
    CHECK(t.at(1, 0) == 1);
}

TEST_CASE("mirror table of the quartic K3") {
    auto a = delta_prime_and_kodaira(dilated_simplex(3, 4));
    auto ctx = make_mirror_context(a, standard_triangulation(a));
    auto t = mirror_hodge_table(ctx, ep_strata(ctx));
    CHECK(t.at(1, 1) == 20);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(2, 0) == 1);
}

TEST_CASE("main theorem holds on every test polytope") {
    for (const auto& p : test_polytopes()) {
        auto a = delta_prime_and_kodaira(p);
        auto r = verify_main_theorem(make_mirror_context(a, standard_triangulation(a)));
        CHECK(r.entries_pass);
        CHECK(r.euler_cross);
        CHECK(r.pass());
        for (int q = 0; q <= r.hodge_s.d; ++q)
            for (int s = 0; s <= r.hodge_s.d; ++s) CHECK(r.hodge_s.at(q, s) == r.hodge_mirror.at(r.hodge_s.d - q, s));
    }
}

TEST_CASE("mirror table does not depend on the star-like triangulation") {
    auto a = delta_prime_and_kodaira(rect(3, 2));
    auto doc = parse_input_file(LGMIRROR_DATA "/genus2_star12.json");
    auto hand = make_mirror_context(a, make_triangulation(a.delta, *doc.triangulation));
    auto lex = make_mirror_context(a, standard_triangulation(a));
    auto rev = make_mirror_context(a, standard_triangulation(a, PullingOrder::parse("revlex")));
    auto tf = mirror_hodge_table(hand, ep_strata(hand));
    CHECK(tf == mirror_hodge_table(lex, ep_strata(lex)));
    CHECK(tf == mirror_hodge_table(rev, ep_strata(rev)));
    CHECK(verify_main_theorem(hand).pass());
}

TEST_CASE("curve checks for genus 2, 3 and 5") {
    for (Int g : {2, 3, 5}) {
        auto a = delta_prime_and_kodaira(rect(g + 1, 2));
        auto r = curve_hh_check(make_mirror_context(a, standard_triangulation(a)));
        CHECK(r.g == g);
        CHECK(r.pass);
        CHECK(r.graph_genus == g);
        CHECK(r.hh1 == g);
        CHECK_FALSE(r.pick_applies);
    }
}

TEST_CASE("curve check applies Pick for a two-dimensional Delta'") {
    auto a = delta_prime_and_kodaira(rect(4, 4));
    auto r = curve_hh_check(make_mirror_context(a, standard_triangulation(a)));
    CHECK(r.pick_applies);
    CHECK(r.pick_ok);
    CHECK(r.pass);
}

TEST_CASE("curve check refuses surfaces and low genus") {
    auto k3 = delta_prime_and_kodaira(dilated_simplex(3, 4));
    CHECK_THROWS_AS(curve_hh_check(make_mirror_context(k3, standard_triangulation(k3))), std::invalid_argument);
    auto cubic = delta_prime_and_kodaira(dilated_simplex(2, 3));
    CHECK_THROWS_AS(curve_hh_check(make_mirror_context(cubic, standard_triangulation(cubic))), std::invalid_argument);
}

TEST_CASE("stratum depth is kappa + 2") {
    for (const auto& p : test_polytopes()) {
        auto a = delta_prime_and_kodaira(p);
        auto r = stratum_depth_check(make_mirror_context(a, standard_triangulation(a)));
        CHECK(r.pass);
        CHECK(r.depth == r.expected);
        CHECK(r.expected == *a.kodaira + 2);
    }
}

TEST_CASE("the mirror side refuses polytopes without interior points") {
    auto a = delta_prime_and_kodaira(dilated_simplex(4, 3));
    try {
        make_mirror_context(a, standard_triangulation(a));
        FAIL("expected UnsupportedError");
    } catch (const UnsupportedError& e) {
        CHECK(std::string(e.what()).find("Kodaira dimension -inf") != std::string::npos);
    }
}
