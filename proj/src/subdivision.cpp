#include "lgmirror/subdivision.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace lgm {

namespace {

bool cell_less(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.vertices() < b.vertices();
}

Int simplex_det(const std::vector<Vec>& s) {
    Mat m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(vsub(s[i], s[0]));
    return det(m);
}

bool contains_all(const LatticePolytope& c, const std::vector<Vec>& pts) {
    for (const auto& p : pts)
        if (!c.contains(p)) return false;
    return true;
}

}  // namespace

int PolyhedralComplex::smallest_containing(const std::vector<Vec>& pts) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (contains_all(cells[i], pts)) return static_cast<int>(i);
    return -1;
}

int PolyhedralComplex::find(const std::vector<Vec>& sorted_vertices) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].vertices() == sorted_vertices) return static_cast<int>(i);
    return -1;
}

std::vector<int> PolyhedralComplex::cells_of_dim(int k) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].dim() == k) out.push_back(static_cast<int>(i));
    return out;
}

PolyhedralComplex complex_from_maximal(const std::vector<LatticePolytope>& maximal_cells) {
    std::map<std::vector<Vec>, LatticePolytope> all;
    for (const auto& c : maximal_cells)
        for (std::size_t f = 0; f < c.faces().size(); ++f) {
            auto verts = c.face_vertices(static_cast<int>(f));
            std::sort(verts.begin(), verts.end());
            if (!all.count(verts)) all.emplace(verts, c.face_polytope(static_cast<int>(f)));
        }
    PolyhedralComplex pc;
    for (auto& [k, v] : all) pc.cells.push_back(v);
    std::sort(pc.cells.begin(), pc.cells.end(), cell_less);
    for (const auto& c : maximal_cells) pc.maximal.push_back(pc.find(c.vertices()));
    std::sort(pc.maximal.begin(), pc.maximal.end());
    return pc;
}

PStar pstar(const PolytopeAnalysis& a) {
    if (!a.delta_prime) throw std::invalid_argument("pstar: Delta has no interior lattice point");
    PStar ps;
    ps.hull.base = a.delta;
    for (const auto& m : a.lattice_points) ps.hull.lift[m] = 0;
    for (const auto& m : a.interior_points) ps.hull.lift[m] = -1;
    // Only vertices of Delta (height 0) and of Delta' (height -1) can be vertices of the lift.
    std::vector<Vec> lifted;
    for (const auto& v : a.delta.vertices()) {
        Vec w = v;
        w.push_back(0);
        lifted.push_back(w);
    }
    for (const auto& v : a.delta_prime->vertices()) {
        Vec w = v;
        w.push_back(-1);
        lifted.push_back(w);
    }
    LatticePolytope up = LatticePolytope::hull(lifted);
    const int n = a.delta.ambient_dim();
    for (std::size_t i = 0; i < up.facets().size(); ++i) {
        if (up.facets()[i].normal[n] <= 0) continue;  // only lower facets
        std::vector<Vec> proj;
        for (const auto& w : up.face_vertices(up.facet_face(static_cast<int>(i))))
            proj.emplace_back(w.begin(), w.begin() + n);
        ps.hull.lower_facets.push_back(LatticePolytope::hull(proj));
    }
    std::sort(ps.hull.lower_facets.begin(), ps.hull.lower_facets.end(), cell_less);
    ps.complex = complex_from_maximal(ps.hull.lower_facets);
    return ps;
}

PullingOrder PullingOrder::parse(const std::string& s) {
    PullingOrder o;
    if (s == "lex") return o;
    if (s == "revlex") {
        o.kind = Kind::RevLex;
        return o;
    }
    if (s.rfind("random:", 0) == 0) {
        o.kind = Kind::Random;
        try {
            o.seed = std::stoull(s.substr(7));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad pulling order seed: " + s);
        }
        return o;
    }
    throw std::invalid_argument("unknown pulling order: " + s);
}

std::string PullingOrder::str() const {
    switch (kind) {
        case Kind::Lex: return "lex";
        case Kind::RevLex: return "revlex";
        case Kind::Random: return "random:" + std::to_string(seed);
        case Kind::Explicit: return "explicit";
    }
    return "lex";
}

std::vector<Vec> order_points(const std::vector<Vec>& lattice_points, const PullingOrder& order) {
    std::vector<Vec> pts = lattice_points;
    std::sort(pts.begin(), pts.end());
    switch (order.kind) {
        case PullingOrder::Kind::Lex: break;
        case PullingOrder::Kind::RevLex: std::reverse(pts.begin(), pts.end()); break;
        case PullingOrder::Kind::Random: {
            std::mt19937_64 rng(order.seed);
            // Fisher-Yates with explicit draws keeps the order portable across standard libraries.
            for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng() % i]);
            break;
        }
        case PullingOrder::Kind::Explicit: {
            std::vector<Vec> given = order.points;
            std::sort(given.begin(), given.end());
            if (given != pts) throw std::invalid_argument("explicit pulling order is not a permutation of the lattice points");
            pts = order.points;
            break;
        }
    }
    return pts;
}

PullingResult pulling_refinement(const std::vector<LatticePolytope>& cells_in, const std::vector<Vec>& points) {
    std::vector<LatticePolytope> cells = cells_in;
    PullingResult res;
    for (const auto& p : points) {
        std::vector<LatticePolytope> next;
        std::vector<Vec> basis;
        for (const auto& c : cells) {
            if (!c.contains(p)) {
                next.push_back(c);
                continue;
            }
            if (basis.empty()) {
                // affinely independent vertices of a cell containing p
                const auto& vs = c.vertices();
                basis.push_back(vs[0]);
                Mat dirs;
                for (std::size_t i = 1; i < vs.size(); ++i) {
                    dirs.push_back(vsub(vs[i], vs[0]));
                    if (rank(dirs) == static_cast<int>(dirs.size())) basis.push_back(vs[i]);
                    else dirs.pop_back();
                }
            }
            bool is_simplex_vertex = static_cast<int>(c.vertices().size()) == c.dim() + 1 &&
                                     std::binary_search(c.vertices().begin(), c.vertices().end(), p);
            if (is_simplex_vertex) {
                next.push_back(c);
                continue;
            }
            for (std::size_t i = 0; i < c.facets().size(); ++i) {
                if (c.facets()[i].eval(p) == 0) continue;
                auto verts = c.face_vertices(c.facet_face(static_cast<int>(i)));
                verts.push_back(p);
                next.push_back(LatticePolytope::hull(verts));
            }
        }
        res.interpolation.push_back(basis);
        cells = std::move(next);
    }
    for (const auto& c : cells) {
        if (static_cast<int>(c.vertices().size()) != c.dim() + 1)
            throw std::logic_error("pulling refinement left a non-simplicial cell");
        res.simplices.push_back(c.vertices());
    }
    std::sort(res.simplices.begin(), res.simplices.end());
    return res;
}

std::vector<Wall> interior_walls(const Triangulation& t) {
    std::map<std::vector<Vec>, std::vector<std::pair<int, Vec>>> ridges;
    for (std::size_t s = 0; s < t.simplices.size(); ++s)
        for (std::size_t k = 0; k < t.simplices[s].size(); ++k) {
            std::vector<Vec> r;
            for (std::size_t j = 0; j < t.simplices[s].size(); ++j)
                if (j != k) r.push_back(t.simplices[s][j]);
            ridges[r].emplace_back(static_cast<int>(s), t.simplices[s][k]);
        }
    std::vector<Wall> walls;
    for (const auto& [r, inc] : ridges) {
        if (inc.size() != 2) continue;
        for (int side = 0; side < 2; ++side) {
            Wall w;
            w.left = inc[side].first;
            w.right = inc[1 - side].first;
            w.apex = inc[1 - side].second;
            const auto& s = t.simplices[w.left];
            const int n = static_cast<int>(w.apex.size());
            RMat a(n + 1, RVec(s.size()));
            RVec b(n + 1);
            for (std::size_t j = 0; j < s.size(); ++j) {
                for (int i = 0; i < n; ++i) a[i][j] = Rat(s[j][i]);
                a[n][j] = Rat(1);
            }
            for (int i = 0; i < n; ++i) b[i] = Rat(w.apex[i]);
            b[n] = Rat(1);
            auto lam = rational_solve(a, b);
            if (!lam) throw std::logic_error("interior_walls: degenerate simplex");
            for (const auto& l : *lam) {
                if (!l.is_integer()) throw std::logic_error("interior_walls: simplex is not unimodular");
                w.lambda.push_back(l.num());
            }
            walls.push_back(std::move(w));
        }
    }
    return walls;
}

bool heights_certify(const Triangulation& t, const std::map<Vec, BigRat>& h) {
    for (const auto& w : interior_walls(t)) {
        BigRat ext = 0;
        const auto& s = t.simplices[w.left];
        for (std::size_t j = 0; j < s.size(); ++j) ext += BigRat(w.lambda[j]) * h.at(s[j]);
        if (!(h.at(w.apex) > ext)) return false;
    }
    return true;
}

namespace {

// Each pulled point goes eps^k below the current lifted surface, which is
// the affine interpolation over a cell containing it.
std::optional<std::map<Vec, BigRat>> pulling_heights(const Triangulation& t, const std::map<Vec, Int>& base,
                                                     const std::vector<std::vector<Vec>>& interp) {
    for (int bits : {1, 2, 4, 8, 16, 32, 64}) {
        const BigRat eps = BigRat(1) / BigRat(boost::multiprecision::cpp_int(1) << bits);
        std::map<Vec, BigRat> h;
        for (const auto& [p, v] : base) h[p] = v;
        BigRat cur = 1;
        for (std::size_t k = 0; k < t.order.size(); ++k) {
            const Vec& p = t.order[k];
            const auto& b = interp[k];
            const int n = static_cast<int>(p.size());
            RMat a(n + 1, RVec(b.size()));
            RVec rhs(n + 1);
            for (std::size_t j = 0; j < b.size(); ++j) {
                for (int i = 0; i < n; ++i) a[i][j] = Rat(b[j][i]);
                a[n][j] = Rat(1);
            }
            for (int i = 0; i < n; ++i) rhs[i] = Rat(p[i]);
            rhs[n] = Rat(1);
            auto lam = rational_solve(a, rhs);
            if (!lam) return std::nullopt;
            BigRat surface = 0;
            for (std::size_t j = 0; j < b.size(); ++j)
                surface += BigRat((*lam)[j].num(), (*lam)[j].den()) * h.at(b[j]);
            cur *= eps;
            h[p] = surface - cur;
        }
        if (heights_certify(t, h)) return h;
    }
    return std::nullopt;
}

}  // namespace

std::string validate_triangulation(const LatticePolytope& delta, const std::vector<std::vector<Vec>>& simplices) {
    const int n = delta.ambient_dim();
    if (!delta.full_dimensional()) return "polytope is not full-dimensional";
    Int vol = 0;
    std::map<std::vector<Vec>, std::vector<Vec>> ridge_apex;
    for (const auto& s0 : simplices) {
        std::vector<Vec> s = s0;
        std::sort(s.begin(), s.end());
        std::string name = "{";
        for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + to_string(s[i]);
        name += "}";
        if (static_cast<int>(s.size()) != n + 1) return "cell " + name + " is not a " + std::to_string(n) + "-simplex";
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return "cell " + name + " repeats a vertex";
        for (const auto& v : s)
            if (static_cast<int>(v.size()) != n || !delta.contains(v)) return "cell " + name + " leaves the polytope";
        Int d = simplex_det(s);
        if (d == 0) return "cell " + name + " is degenerate";
        if (iabs(d) != 1) return "cell " + name + " is not standard (determinant " + std::to_string(d) + ")";
        vol = add(vol, iabs(d));
        for (std::size_t k = 0; k < s.size(); ++k) {
            std::vector<Vec> r;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != k) r.push_back(s[j]);
            ridge_apex[r].push_back(s[k]);
        }
    }
    if (vol != delta.normalized_volume())
        return "cells do not cover the polytope (volume " + std::to_string(vol) + " vs " +
               std::to_string(delta.normalized_volume()) + ")";
    for (const auto& [r, apexes] : ridge_apex) {
        bool on_boundary = false;
        for (const auto& f : delta.facets()) {
            bool all = true;
            for (const auto& v : r) all = all && f.eval(v) == 0;
            on_boundary = on_boundary || all;
        }
        if (on_boundary) {
            if (apexes.size() != 1) return "boundary ridge shared by several cells";
            continue;
        }
        if (apexes.size() != 2) return "interior ridge not shared by exactly two cells";
        // opposite sides of the ridge hyperplane
        Mat m;
        for (std::size_t i = 1; i < r.size(); ++i) m.push_back(vsub(r[i], r[0]));
        Vec nrm = cofactor_normal(m, n);
        Int s0 = dot(nrm, vsub(apexes[0], r[0]));
        Int s1 = dot(nrm, vsub(apexes[1], r[0]));
        if (sign(s0) == sign(s1)) return "overlapping cells across an interior ridge";
    }
    return "";
}

Triangulation make_triangulation(const LatticePolytope& delta, std::vector<std::vector<Vec>> simplices) {
    for (auto& s : simplices) std::sort(s.begin(), s.end());
    std::sort(simplices.begin(), simplices.end());
    std::string err = validate_triangulation(delta, simplices);
    if (!err.empty()) {
        std::vector<Vec> witness;
        Int d = 0;
        for (const auto& s : simplices) {
            if (static_cast<int>(s.size()) != delta.ambient_dim() + 1) continue;
            Int ds = simplex_det(s);
            if (iabs(ds) != 1) {
                witness = s;
                d = ds;
                break;
            }
        }
        throw TriangulationError(err, witness, d);
    }
    Triangulation t;
    t.dim = delta.ambient_dim();
    t.simplices = std::move(simplices);
    for (const auto& s : t.simplices) t.determinants.push_back(simplex_det(s));
    t.certificate = "none";
    return t;
}

Triangulation standard_triangulation(const PolytopeAnalysis& a, const PullingOrder& order) {
    std::vector<LatticePolytope> start;
    std::map<Vec, Int> base;
    if (a.delta_prime) {
        PStar ps = pstar(a);
        start = ps.hull.lower_facets;
        base = ps.hull.lift;
    } else {
        start = {a.delta};
        for (const auto& v : a.delta.vertices()) base[v] = 0;
    }
    std::vector<Vec> pts = order_points(a.lattice_points, order);
    Triangulation t;
    t.dim = a.delta.ambient_dim();
    PullingResult pr = pulling_refinement(start, pts);
    t.simplices = pr.simplices;
    t.order = pts;
    for (const auto& s : t.simplices) {
        Int d = simplex_det(s);
        if (iabs(d) != 1) {
            std::string msg = "pulling order " + order.str() + " produced a non-standard simplex {";
            for (std::size_t i = 0; i < s.size(); ++i) msg += (i ? "," : "") + to_string(s[i]);
            msg += "} with determinant " + std::to_string(d) + "; retry with another --order";
            throw TriangulationError(msg, s, d);
        }
        t.determinants.push_back(d);
    }
    t.certificate = "none";
    if (auto h = pulling_heights(t, base, pr.interpolation)) {
        t.certificate = "pulling";
        for (const auto& [p, v] : *h) {
            t.height_points.push_back(p);
            t.heights.push_back(v);
        }
    }
    return t;
}

StarLikeReport is_star_like(const Triangulation& t, const PStar& ps) {
    StarLikeReport r;
    r.refines_pstar = true;
    for (const auto& s : t.simplices) {
        bool inside = false;
        for (int mi : ps.complex.maximal) inside = inside || contains_all(ps.complex.cells[mi], s);
        if (inside) continue;
        r.refines_pstar = false;
        // name the P_* cell containing the barycenter of the offending simplex
        Vec sum(s[0].size(), 0);
        for (const auto& v : s) sum = vadd(sum, v);
        const Int k = static_cast<Int>(s.size());
        std::ostringstream os;
        os << "simplex {";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << to_string(s[i]);
        os << "} crosses the boundary of P_* cell";
        for (int mi : ps.complex.maximal) {
            const auto& c = ps.complex.cells[mi];
            bool in = true;
            for (const auto& f : c.facets()) in = in && add(dot(f.normal, sum), mul(k, f.offset)) >= 0;
            if (!in) continue;
            os << " {";
            for (std::size_t i = 0; i < c.vertices().size(); ++i) os << (i ? "," : "") << to_string(c.vertices()[i]);
            os << "}";
            break;
        }
        r.diagnostic = os.str();
        return r;
    }
    if (t.certificate == "pulling" && !t.heights.empty()) {
        std::map<Vec, BigRat> h;
        for (std::size_t i = 0; i < t.heights.size(); ++i) h[t.height_points[i]] = t.heights[i];
        if (heights_certify(t, h)) {
            r.regular = true;
            r.heights = h;
        }
    }
    if (!r.regular) {
        std::set<Vec> pts;
        for (const auto& s : t.simplices) pts.insert(s.begin(), s.end());
        std::vector<Vec> idx(pts.begin(), pts.end());
        std::map<Vec, std::size_t> pos;
        for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
        std::vector<std::vector<BigRat>> rows;
        std::vector<BigRat> rhs;
        for (const auto& w : interior_walls(t)) {
            std::vector<BigRat> row(idx.size(), BigRat(0));
            row[pos[w.apex]] += 1;
            const auto& s = t.simplices[w.left];
            for (std::size_t j = 0; j < s.size(); ++j) row[pos[s[j]]] -= w.lambda[j];
            rows.push_back(row);
            rhs.emplace_back(1);
        }
        if (auto x = feasible_point(rows, rhs)) {
            r.regular = true;
            for (std::size_t i = 0; i < idx.size(); ++i) r.heights[idx[i]] = (*x)[i];
        } else {
            r.diagnostic = "no strictly convex height function exists (triangulation is not regular)";
        }
    }
    r.star_like = r.refines_pstar && r.regular;
    return r;
}

std::vector<std::vector<Vec>> all_cells(const Triangulation& t) {
    std::set<std::vector<Vec>> cells;
    for (const auto& s : t.simplices) {
        const std::size_t k = s.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<Vec> c;
            for (std::size_t j = 0; j < k; ++j)
                if (mask & (1u << j)) c.push_back(s[j]);
            cells.insert(c);
        }
    }
    std::vector<std::vector<Vec>> out(cells.begin(), cells.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

Fans fans_from_data(const PolytopeAnalysis& a, const PStar& ps, const Triangulation& t) {
    Fans f;
    const int n = a.delta.ambient_dim() + 1;
    auto lift1 = [](Vec v) {
        v.push_back(1);
        return v;
    };
    // Sigma
    f.sigma.ambient_dim = n;
    std::map<Vec, int> ray_of;
    for (const auto& m : a.lattice_points) {
        ray_of[m] = static_cast<int>(f.sigma.rays.size());
        f.sigma.rays.push_back(lift1(m));
    }
    f.sigma.cones.push_back({});
    auto cells = all_cells(t);
    for (const auto& c : cells) {
        std::vector<int> cone;
        std::vector<Vec> gens;
        for (const auto& v : c) {
            cone.push_back(ray_of.at(v));
            gens.push_back(lift1(v));
        }
        std::sort(cone.begin(), cone.end());
        if (!is_standard_set(gens)) throw std::logic_error("fans_from_data: non-standard cone in Sigma");
        f.sigma.cones.push_back(cone);
    }
    // Sigma_*
    f.sigma_star.ambient_dim = n;
    std::map<Vec, int> star_ray;
    f.sigma_star.cones.push_back({});
    for (const auto& c : ps.complex.cells) {
        std::vector<int> cone;
        for (const auto& v : c.vertices()) {
            if (!star_ray.count(v)) {
                star_ray[v] = static_cast<int>(f.sigma_star.rays.size());
                f.sigma_star.rays.push_back(lift1(v));
            }
            cone.push_back(star_ray[v]);
        }
        std::sort(cone.begin(), cone.end());
        f.sigma_star.cones.push_back(cone);
    }
    f.refinement.push_back(0);
    for (const auto& c : cells) {
        int k = ps.complex.smallest_containing(c);
        if (k < 0) throw std::logic_error("fans_from_data: cell of P not inside a cell of P_*");
        f.refinement.push_back(k + 1);
    }
    // Sigma-check: star subdivision of the dual cone along rho
    f.sigma_check.ambient_dim = n;
    const auto& facets = a.delta.facets();
    for (const auto& hs : facets) {
        Vec g = hs.normal;
        g.push_back(hs.offset);
        f.sigma_check.rays.push_back(g);
    }
    Vec rho(n, 0);
    rho[n - 1] = 1;
    const int rho_idx = static_cast<int>(f.sigma_check.rays.size());
    f.sigma_check.rays.push_back(rho);
    f.sigma_check.cones.push_back({});
    f.sigma_check.cones.push_back({rho_idx});
    const auto& faces = a.delta.faces();
    for (std::size_t i = 0; i + 1 < faces.size(); ++i) {
        std::vector<int> cone = faces[i].facets;
        std::vector<int> with_rho = cone;
        with_rho.push_back(rho_idx);
        for (const auto* c : {&cone, &with_rho}) {
            std::vector<Vec> gens;
            for (int k : *c) gens.push_back(f.sigma_check.rays[k]);
            if (!is_standard_set(gens)) throw std::logic_error("fans_from_data: non-standard cone in the dual fan");
        }
        f.sigma_check.cones.push_back(cone);
        f.sigma_check.cones.push_back(with_rho);
    }
    return f;
}

}  // namespace lgm
