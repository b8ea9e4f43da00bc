// Acceptance run: one PASS/FAIL line per criterion, exact integer comparisons.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lgmirror/hodge_mirror.hpp"
#include "lgmirror/io.hpp"
#include "lgmirror/linalg.hpp"

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

// Collects failure reasons for one criterion.
struct Check {
    std::ostringstream why;
    bool ok = true;
    void expect(bool c, const std::string& what) {
        if (!c) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

int cli_exit(const std::string& args) {
    std::string cmd = std::string(LGMIRROR_CLI) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("lgmirror_acceptance_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string s(Int v) { return std::to_string(v); }

void criterion_1(Check& c) {
    for (Int g = 2; g <= 5; ++g) {
        auto t0 = std::chrono::steady_clock::now();
        auto a = delta_prime_and_kodaira(rect(g + 1, 2));
        auto tr = standard_triangulation(a);
        auto h = hodge_diamond_S(a, tr);
        auto ctx = make_mirror_context(a, tr);
        auto mt = verify_main_theorem(ctx);
        auto cr = curve_hh_check(ctx);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const std::string tag = "g=" + s(g) + ": ";
        c.expect(h.at(1, 0) == g, tag + "h10=" + s(h.at(1, 0)));
        c.expect(static_cast<Int>(a.interior_points.size()) == g, tag + "interior points");
        c.expect(mt.entries_pass, tag + "main theorem entries");
        c.expect(cr.components == 3 * g - 3, tag + "components=" + s(cr.components));
        c.expect(cr.graph_genus == g, tag + "graph genus=" + s(cr.graph_genus));
        c.expect(secs <= 1.0, tag + "runtime " + std::to_string(secs) + " s");
    }
}

void criterion_2(Check& c) {
    auto a = delta_prime_and_kodaira(dilated_simplex(4, 3));
    auto tr = standard_triangulation(a);
    c.expect(tr.simplices.size() == 81, "simplices=" + s(static_cast<Int>(tr.simplices.size())));
    auto h = hodge_diamond_S(a, tr);
    c.expect(h.at(2, 1) == 5 && h.at(1, 2) == 5, "h21=" + s(h.at(2, 1)) + " h12=" + s(h.at(1, 2)));
    for (int p = 0; p <= 3; ++p) c.expect(h.at(p, p) == 1, "h" + s(p) + s(p) + "=" + s(h.at(p, p)));
    bool refused = false;
    try {
        make_mirror_context(a, tr);
    } catch (const UnsupportedError&) {
        refused = true;
    }
    c.expect(refused, "mirror side not refused");
}

void criterion_3(Check& c) {
    auto a = delta_prime_and_kodaira(dilated_simplex(3, 4));
    auto tr = standard_triangulation(a);
    auto h = hodge_diamond_S(a, tr);
    c.expect(h.at(1, 1) == 20, "h11=" + s(h.at(1, 1)));
    c.expect(h.at(2, 0) == 1, "h20=" + s(h.at(2, 0)));
    // independent e^p from the classical K3 numbers: e^0 = 1 + 1 and e^1 = h^{1,1}
    auto tc = triangulation_cells(a.delta, tr);
    Int chi = 0;
    for (int p = 0; p <= 2; ++p) chi += ep_S_counting(a.delta, p);
    c.expect(chi == 24, "chi=" + s(chi));
    c.expect(ep_S(a.delta, tc, 1) == 20 && ep_S(a.delta, tc, 0) == 2, "e^p values");
    auto mt = verify_main_theorem(make_mirror_context(a, tr));
    c.expect(mt.entries_pass, "reflection entries");
    c.expect(mt.hodge_mirror == mt.hodge_s, "table not self-mirror");
}

void criterion_4(Check& c) {
    auto a = delta_prime_and_kodaira(dilated_simplex(3, 5));
    auto tr = standard_triangulation(a);
    auto h = hodge_diamond_S(a, tr);
    const Int lstar = a.delta.count_lattice_points(true, 1);
    c.expect(h.at(2, 0) == 4 && lstar == 4, "h20=" + s(h.at(2, 0)) + " l*=" + s(lstar));
    auto ctx = make_mirror_context(a, tr);
    c.expect(verify_main_theorem(ctx).pass(), "main theorem");
    auto dr = stratum_depth_check(ctx);
    c.expect(dr.depth == 4 && dr.pass, "depth=" + s(dr.depth));
}

void criterion_5(Check& c) {
    auto a = delta_prime_and_kodaira(rect(3, 2));
    auto doc = parse_input_file(LGMIRROR_DATA "/genus2_star12.json");
    auto hand = make_triangulation(a.delta, *doc.triangulation);
    auto other = standard_triangulation(a, PullingOrder::parse("revlex"));
    c.expect(hand.simplices != other.simplices, "triangulations coincide");
    c.expect(is_star_like(hand, pstar(a)).star_like, "hand-built triangulation not star-like");
    c.expect(is_star_like(other, pstar(a)).star_like, "pulling triangulation not star-like");
    auto cf = make_mirror_context(a, hand);
    auto co = make_mirror_context(a, other);
    c.expect(mirror_hodge_table(cf, ep_strata(cf)) == mirror_hodge_table(co, ep_strata(co)), "tables differ");
}

void criterion_6(Check& c) {
    for (const auto& p : {rect(3, 2), rect(4, 2), rect(5, 2), rect(6, 2), dilated_simplex(3, 4), dilated_simplex(3, 5)}) {
        auto a = delta_prime_and_kodaira(p);
        auto mt = verify_main_theorem(make_mirror_context(a, standard_triangulation(a)));
        c.expect(mt.euler_cross, "euler cross on a polytope with " + s(static_cast<Int>(p.vertices().size())) +
                                     " vertices");
    }
}

void criterion_7(Check& c) {
    for (Int n = 0; n <= 25; ++n)
        for (Int k = 0; k <= 25; ++k)
            for (Int m = 0; m <= 25; ++m) {
                if (binom_alternating_rhs(n, k, m) != binom(n, k)) c.expect(false, "identity (1) at " + s(n) + "," + s(k) + "," + s(m));
                if (vandermonde_rhs(m, n, k) != binom(m + n, k)) c.expect(false, "Vandermonde at " + s(m) + "," + s(n) + "," + s(k));
            }

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
        Cone cone = Cone::generated_by(gens, n);
        if (!cone.full_dimensional()) continue;
        ++tested;
        Cone dual = dual_cone(cone);
        c.expect(dual_cone(dual) == cone, "dual is not an involution");
        const auto& cf = cone.faces();
        const auto& df = dual.faces();
        std::vector<std::vector<int>> image;
        for (const auto& f : cf) {
            std::vector<int> g;
            for (std::size_t j = 0; j < dual.generators().size(); ++j) {
                bool zero = true;
                for (int i : f) zero = zero && dot(dual.generators()[j], cone.generators()[i]) == 0;
                if (zero) g.push_back(static_cast<int>(j));
            }
            c.expect(std::find(df.begin(), df.end(), g) != df.end(), "dual face missing");
            c.expect(cone.face_dim(f) + dual.face_dim(g) == n, "face dimensions");
            image.push_back(g);
        }
        c.expect(cf.size() == df.size(), "face counts");
        for (std::size_t x = 0; x < cf.size(); ++x)
            for (std::size_t y = 0; y < cf.size(); ++y) {
                bool sub = std::includes(cf[y].begin(), cf[y].end(), cf[x].begin(), cf[x].end());
                bool rev = std::includes(image[x].begin(), image[x].end(), image[y].begin(), image[y].end());
                if (sub != rev) c.expect(false, "face order not reversed");
            }
    }

    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l)
            for (int p = 0; p <= k + l + 1; ++p)
                if (ep_handlebody_torus(k, l, p) != ep_handlebody_torus_oracle(k, l, p))
                    c.expect(false, "handlebody k=" + s(k) + " l=" + s(l) + " p=" + s(p));

    std::vector<LatticePolytope> polys = {LatticePolytope::hull({{0}, {3}}), rect(3, 2), rect(4, 2), rect(5, 2),
                                          rect(6, 2), rect(4, 4), dilated_simplex(2, 3), dilated_simplex(3, 4),
                                          dilated_simplex(3, 5), dilated_simplex(4, 3)};
    for (const auto& p : polys) {
        auto a = delta_prime_and_kodaira(p);
        auto tr = standard_triangulation(a);
        auto tc = triangulation_cells(p, tr);
        for (std::size_t f = 0; f < p.faces().size(); ++f)
            for (int i = 0; i <= p.faces()[f].dim + 1; ++i)
                if (ell_star_phi_direct(p, static_cast<int>(f), i) != ell_star_phi_simplices(p, tc, static_cast<int>(f), i))
                    c.expect(false, "phi face " + s(static_cast<Int>(f)) + " i=" + s(i));
        if (!a.delta_prime) continue;
        auto ctx = make_mirror_context(a, tr);
        for (int q = 0; q <= ctx.d + 1; ++q)
            if (epp_ytor_closed(ctx, q) != epp_ytor_pieces(ctx, q)) c.expect(false, "Y_tor routes at p=" + s(q));
    }
}

void criterion_8(Check& c) {
    int e = cli_exit("hodge-mirror --builtin \"dilated-simplex dim=4 k=3\"");
    c.expect(e == 2, "empty Delta' exit " + s(e));
    e = cli_exit("hodge-mirror --builtin \"square n=1\"");
    c.expect(e == 2, "unit square exit " + s(e));
    auto f = temp_file("nonsmooth.json", R"({"dim": 2, "vertices": [[0,0],[1,0],[0,2]]})");
    e = cli_exit("hodge-s --input " + f);
    c.expect(e == 2, "non-smooth exit " + s(e));
    try {
        delta_prime_and_kodaira(LatticePolytope::hull({{0, 0}, {1, 0}, {0, 2}}));
        c.expect(false, "non-smooth accepted");
    } catch (const NonSmoothError& err) {
        c.expect(std::string(err.what()).find("(-2,-1)") != std::string::npos, "offending cone not named");
    }
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<void(Check&)> run;
        double limit;  // seconds; 0 means no limit
    };
    const std::vector<Criterion> criteria = {
        {"genus-g rectangles", criterion_1, 0},
        {"cubic threefold", criterion_2, 30},
        {"quartic K3", criterion_3, 10},
        {"quintic surface", criterion_4, 20},
        {"triangulation independence", criterion_5, 0},
        {"Euler cross-check", criterion_6, 0},
        {"property suites", criterion_7, 0},
        {"degenerate guards", criterion_8, 0},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criteria[i].limit > 0) c.expect(secs <= criteria[i].limit, "runtime over " + std::to_string(criteria[i].limit) + " s");
        std::printf("%s criterion %zu: %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                    secs, c.ok ? "" : " ", c.ok ? "" : c.why.str().c_str());
        failures += c.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
