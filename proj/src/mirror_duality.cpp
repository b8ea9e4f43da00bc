#include "lgmirror/mirror_duality.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <numeric>
#include <set>

namespace lgm {

namespace {

bool subset(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

// Face of p whose vertex set equals the given sorted points, or -1.
int face_with_vertices(const LatticePolytope& p, std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    for (std::size_t f = 0; f < p.faces().size(); ++f) {
        auto vs = p.face_vertices(static_cast<int>(f));
        std::sort(vs.begin(), vs.end());
        if (vs == pts) return static_cast<int>(f);
    }
    return -1;
}

bool is_interior(const PolytopeAnalysis& a, const Vec& m) {
    return std::binary_search(a.interior_points.begin(), a.interior_points.end(), m);
}

Vec append(Vec v, Int x) {
    v.push_back(x);
    return v;
}

}  // namespace

MirrorData build_mirror_data(const PolytopeAnalysis& a, const PStar& ps) {
    if (!a.delta_prime) throw std::invalid_argument("build_mirror_data: Delta has no interior lattice point");
    MirrorData md;
    const int n = a.delta.ambient_dim();
    const int d = a.d;
    md.sigma = cone_over(a.delta);
    md.sigma_check = dual_cone(md.sigma);
    md.rho = Vec(n + 1, 0);
    md.rho[n] = 1;
    md.newton_ok = true;
    std::string& diag = md.diagnostic;

    // h_* on each maximal cell is the affine function <s, m> + c; the vertex is -(s, c).
    const auto& cells = ps.complex.cells;
    for (int mi : ps.complex.maximal) {
        const auto& eta = cells[mi];
        RMat rows;
        RVec rhs;
        for (const auto& v : eta.vertices()) {
            RVec row;
            for (Int x : v) row.emplace_back(x);
            row.emplace_back(1);
            rows.push_back(row);
            rhs.emplace_back(ps.hull.lift.at(v));
        }
        auto sol = rational_solve(rows, rhs);
        Vec u;
        for (const auto& r : *sol) {
            if (!r.is_integer()) {
                md.newton_ok = false;
                diag = "non-integral slope of h_* on a maximal cell";
            }
            u.push_back(neg(r.num()));
        }
        md.cell_vertices.push_back(u);
        if (is_zero(u) || !md.sigma_check.contains(u)) {
            md.newton_ok = false;
            diag = "cell vertex " + to_string(u) + " is not a nonzero point of the dual cone";
        }
        for (const auto& m : a.lattice_points) {
            Int val = dot(u, append(m, 1));
            Int bound = neg(ps.hull.lift.at(m));
            bool on = eta.contains(m);
            if (val < bound || (val == bound) != on) {
                md.newton_ok = false;
                diag = "support of cell vertex " + to_string(u) + " disagrees with h_* at " + to_string(m);
            }
        }
    }

    // Faces of sigma-check-o dual to the cells of P_*.
    std::vector<Vec> facet_gens;
    for (const auto& f : a.delta.facets()) facet_gens.push_back(append(f.normal, f.offset));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        DualFace df;
        const auto& om = cells[i];
        for (std::size_t k = 0; k < ps.complex.maximal.size(); ++k)
            if (subset(om.vertices(), cells[ps.complex.maximal[k]].vertices()))
                df.vertices.push_back(md.cell_vertices[k]);
        for (std::size_t k = 0; k < a.delta.facets().size(); ++k) {
            bool all = true;
            for (const auto& v : om.vertices()) all = all && a.delta.facets()[k].eval(v) == 0;
            if (all) df.recession.push_back(facet_gens[k]);
        }
        std::sort(df.vertices.begin(), df.vertices.end());
        Mat span;
        for (std::size_t k = 1; k < df.vertices.size(); ++k) span.push_back(vsub(df.vertices[k], df.vertices[0]));
        for (const auto& g : df.recession) span.push_back(g);
        df.dim = span.empty() ? 0 : rank(span);
        md.dual_faces.push_back(df);
    }
    md.duality_ok = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& df = md.dual_faces[i];
        if (df.dim != d + 1 - cells[i].dim()) {
            md.duality_ok = false;
            diag = "dual face dimension mismatch";
        }
        // The functional (sum of cell vertices, count) is minimized exactly on the dual face.
        Vec sum(n, 0);
        for (const auto& v : cells[i].vertices()) sum = vadd(sum, v);
        Vec fun = append(sum, static_cast<Int>(cells[i].vertices().size()));
        Int best = 0;
        bool first = true;
        for (const auto& u : md.cell_vertices) {
            Int val = dot(u, fun);
            if (first || val < best) best = val;
            first = false;
        }
        std::vector<Vec> argmin;
        for (const auto& u : md.cell_vertices)
            if (dot(u, fun) == best) argmin.push_back(u);
        std::sort(argmin.begin(), argmin.end());
        if (argmin != df.vertices) {
            md.duality_ok = false;
            diag = "dual face is not the face minimizing the cell functional";
        }
        for (const auto& g : facet_gens)
            if ((dot(g, fun) == 0) != (std::find(df.recession.begin(), df.recession.end(), g) != df.recession.end())) {
                md.duality_ok = false;
                diag = "recession cone of a dual face is wrong";
            }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const auto& dj = md.dual_faces[j];
            bool inc = subset(cells[i].vertices(), cells[j].vertices());
            bool rev = subset(dj.vertices, df.vertices) && subset(dj.recession, df.recession);
            if (inc != rev) {
                md.duality_ok = false;
                diag = "duality is not inclusion reversing";
            }
            if (i != j && dj.vertices == df.vertices && dj.recession == df.recession) {
                md.duality_ok = false;
                diag = "duality is not injective";
            }
        }
    }

    std::vector<Vec> pts0 = facet_gens;
    pts0.push_back(md.rho);
    md.delta_check_0 = LatticePolytope::hull(pts0);
    pts0.push_back(Vec(n + 1, 0));
    md.delta_check = LatticePolytope::hull(pts0);
    const int expected = a.delta_prime->dim() > 0 ? d + 2 : d + 1;
    md.dim_delta_check_0_ok = md.delta_check_0.dim() == expected;
    return md;
}

ProjectionMaps p_maps(const PolytopeAnalysis& a, const PStar& ps) {
    if (!a.delta_prime) throw std::invalid_argument("p_maps: Delta has no interior lattice point");
    ProjectionMaps pm;
    const auto& faces = a.delta.faces();
    const auto& dp = *a.delta_prime;
    const auto& cells = ps.complex.cells;
    std::vector<int> hits(cells.size(), 0);
    pm.p1_bijective = true;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const bool whole = f + 1 == faces.size();
        // explicit half-space formula
        std::vector<Vec> on;
        for (const auto& m : a.interior_points) {
            bool ok = true;
            for (int k : faces[f].facets) ok = ok && a.delta.facets()[k].eval(m) == 1;
            if (ok) on.push_back(m);
        }
        int pe = -1;
        if (!on.empty()) {
            int mf = dp.minimal_face(on);
            auto lp = lattice_points(dp.face_polytope(mf), false, 1);
            std::sort(lp.begin(), lp.end());
            if (lp == on) pe = mf;
        }
        pm.p_explicit.push_back(pe);
        if (whole) {
            pm.p1.push_back(-1);
            pm.p.push_back(static_cast<int>(dp.faces().size()) - 1);
            continue;
        }
        auto tv = a.delta.face_vertices(static_cast<int>(f));
        std::sort(tv.begin(), tv.end());
        int found = -1, count = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::vector<Vec> bd, in;
            for (const auto& v : cells[c].vertices()) (is_interior(a, v) ? in : bd).push_back(v);
            if (in.empty() || bd.empty()) continue;
            if (bd == tv) {
                found = static_cast<int>(c);
                ++count;
            }
        }
        if (count != 1) pm.p1_bijective = false;
        pm.p1.push_back(found);
        if (found >= 0) {
            ++hits[found];
            std::vector<Vec> in;
            for (const auto& v : cells[found].vertices())
                if (is_interior(a, v)) in.push_back(v);
            pm.p.push_back(face_with_vertices(dp, in));
        } else {
            pm.p.push_back(-1);
        }
    }
    // every P_* cell meeting Delta' without lying in it is hit exactly once
    for (std::size_t c = 0; c < cells.size(); ++c) {
        bool in = false, out = false;
        for (const auto& v : cells[c].vertices()) (is_interior(a, v) ? in : out) = true;
        if (in && out && hits[c] != 1) pm.p1_bijective = false;
    }
    pm.consistent = pm.p == pm.p_explicit &&
                    std::find(pm.p.begin(), pm.p.end(), -1) == pm.p.end();
    std::set<int> image(pm.p.begin(), pm.p.end());
    pm.p_surjective = true;
    for (std::size_t g = 0; g < dp.faces().size(); ++g)
        if (!image.count(static_cast<int>(g))) pm.p_surjective = false;
    pm.dim_inequality = true;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (pm.p[f] >= 0 && faces[f].dim < dp.faces()[pm.p[f]].dim) pm.dim_inequality = false;
    return pm;
}

DualIntersectionComplex dual_intersection_complex(const PolytopeAnalysis& a, const Triangulation& t) {
    if (!a.delta_prime) throw std::invalid_argument("dual_intersection_complex: Delta has no interior lattice point");
    DualIntersectionComplex g;
    const auto& dp = *a.delta_prime;
    const int d = a.d;
    const int ddp = dp.dim();
    g.vertices = a.interior_points;
    g.case_number = ddp <= d - 1 ? 1 : (ddp == d ? 2 : 3);
    const int last = static_cast<int>(dp.faces().size()) - 1;
    std::vector<std::vector<Vec>> inner;
    for (const auto& c : all_cells(t)) {
        bool all = true;
        for (const auto& v : c) all = all && is_interior(a, v);
        if (all) inner.push_back(c);
    }
    auto rel_boundary = [&](const std::vector<Vec>& c) { return dp.minimal_face(c) != last; };
    g.simplices.push_back({{}, true, -1});
    for (const auto& c : inner) g.simplices.push_back({c, false, -1});
    for (const auto& c : inner) {
        if (g.case_number == 1) {
            g.simplices.push_back({c, true, -1});
        } else if (g.case_number == 2) {
            if (rel_boundary(c)) {
                g.simplices.push_back({c, true, -1});
            } else {
                g.simplices.push_back({c, true, 0});
                g.simplices.push_back({c, true, 1});
            }
        } else if (rel_boundary(c)) {
            g.simplices.push_back({c, true, -1});
        }
    }
    for (const auto& s : g.simplices) g.euler_characteristic += (s.dim() % 2 == 0) ? 1 : -1;
    if (g.case_number == 1) {
        g.topology = "ball";
        g.topology_dim = ddp + 1;
    } else {
        g.topology = "sphere";
        g.topology_dim = d + 1;
    }
    if (d == 1) {
        // Components of the singular locus are the 1-simplices; triple points are the 2-simplices.
        std::map<std::tuple<std::vector<Vec>, bool, int>, int> index;
        std::vector<int> nodes;
        for (std::size_t i = 0; i < g.simplices.size(); ++i) {
            const auto& s = g.simplices[i];
            index[{s.vertices, s.has_u, s.copy}] = static_cast<int>(i);
            if (s.dim() == 1 || s.dim() == 2) nodes.push_back(static_cast<int>(i));
        }
        std::vector<int> parent(g.simplices.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
        int edges = 0, comps = 0;
        for (int i : nodes) {
            const auto& s = g.simplices[i];
            if (s.dim() == 1) ++comps;
            if (s.dim() != 2) continue;
            std::vector<std::tuple<std::vector<Vec>, bool, int>> facets;
            if (s.has_u) facets.emplace_back(s.vertices, false, -1);
            for (std::size_t k = 0; k < s.vertices.size(); ++k) {
                std::vector<Vec> rest;
                for (std::size_t j = 0; j < s.vertices.size(); ++j)
                    if (j != k) rest.push_back(s.vertices[j]);
                if (!s.has_u) {
                    facets.emplace_back(rest, false, -1);
                    continue;
                }
                int copy = index.count({rest, true, 0}) ? s.copy : -1;
                facets.emplace_back(rest, true, copy);
            }
            for (const auto& key : facets) {
                auto it = index.find(key);
                if (it == index.end()) throw std::logic_error("dual_intersection_complex: missing facet");
                ++edges;
                parent[root(i)] = root(it->second);
            }
        }
        std::set<int> roots;
        for (int i : nodes) roots.insert(root(i));
        g.components = comps;
        g.connected_pieces = static_cast<int>(roots.size());
        g.graph_genus = edges - static_cast<int>(nodes.size()) + static_cast<int>(roots.size());
    }
    return g;
}

StrataData stratum_profiles(const PolytopeAnalysis& a, const PStar& ps, const Triangulation& t) {
    if (!a.delta_prime) throw std::invalid_argument("stratum_profiles: Delta has no interior lattice point");
    StrataData sd;
    const auto& dp = *a.delta_prime;
    const int d = a.d;
    const int full = a.delta.dim();
    const int last = static_cast<int>(dp.faces().size()) - 1;
    sd.cells = all_cells(t);
    for (const auto& c : sd.cells) {
        StratumProfile pr;
        pr.cell = c;
        pr.dim = static_cast<int>(c.size()) - 1;
        pr.pstar_cell = ps.complex.smallest_containing(c);
        pr.dim_pstar = ps.complex.cells[pr.pstar_cell].dim();
        pr.delta_face = a.delta.minimal_face(c);
        pr.dim_delta_face = a.delta.faces()[pr.delta_face].dim;
        pr.in_boundary = pr.dim_delta_face < full;
        int inner = 0;
        for (const auto& v : c) inner += is_interior(a, v) ? 1 : 0;
        pr.in_delta_prime = inner == static_cast<int>(c.size());
        pr.dim_meet_delta_prime = inner - 1;
        if (pr.in_delta_prime) {
            pr.in_rel_boundary_delta_prime = dp.minimal_face(c) != last;
            pr.in_boundary_delta_prime = dp.dim() < full || pr.in_rel_boundary_delta_prime;
            pr.delta_prime_face = face_with_vertices(dp, ps.complex.cells[pr.pstar_cell].vertices());
        }
        if (pr.in_boundary) {
            const int codim = d + 1 - pr.dim_pstar;
            const int l = pr.dim_pstar - pr.dim;
            pr.generic_k = codim - 1;
            pr.generic_l = l;
            pr.zero_k = codim - 2;
            pr.zero_l = l + 1;
        } else {
            pr.w0_nonempty = pr.dim_pstar <= d;
        }
        sd.profiles.push_back(pr);
    }
    for (std::size_t i = 0; i < sd.cells.size(); ++i)
        if (sd.profiles[i].in_delta_prime) sd.delta_prime_cells.push_back(static_cast<int>(i));
    for (int w : sd.delta_prime_cells) {
        std::vector<int> co;
        for (std::size_t i = 0; i < sd.cells.size(); ++i)
            if (subset(sd.cells[w], sd.cells[i])) co.push_back(static_cast<int>(i));
        sd.cofaces.push_back(co);
    }
    sd.y_nonempty.assign(d + 5, false);
    for (std::size_t j = 0; j < sd.delta_prime_cells.size(); ++j) {
        const int k = sd.profiles[sd.delta_prime_cells[j]].dim + 1;
        sd.y_nonempty[k] = true;  // toric part
        for (int tau : sd.cofaces[j])
            if (sd.profiles[tau].w0_nonempty) sd.y_nonempty[k + 1] = true;
    }
    for (std::size_t k = 0; k < sd.y_nonempty.size(); ++k)
        if (sd.y_nonempty[k]) sd.depth = static_cast<int>(k);
    return sd;
}

}  // namespace lgm
