#include "lgmirror/toric_polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lgm {

NormalFan normal_fan(const LatticePolytope& delta) {
    if (!delta.full_dimensional()) throw std::invalid_argument("normal_fan: polytope is not full-dimensional");
    NormalFan nf;
    nf.fan.ambient_dim = delta.ambient_dim();
    for (const auto& f : delta.facets()) nf.fan.rays.push_back(f.normal);
    const auto& faces = delta.faces();
    nf.cone_of_face.resize(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        nf.cone_of_face[i] = static_cast<int>(nf.fan.cones.size());
        nf.face_of_cone.push_back(static_cast<int>(i));
        nf.fan.cones.push_back(faces[i].facets);
    }
    return nf;
}

PLFunction::PLFunction(Fan fan, std::vector<Rat> ray_values) : fan_(std::move(fan)), values_(std::move(ray_values)) {
    if (values_.size() != fan_.rays.size()) throw std::invalid_argument("PLFunction: one value per ray required");
    const int n = fan_.ambient_dim;
    slopes_.resize(fan_.cones.size());
    for (std::size_t c = 0; c < fan_.cones.size(); ++c) {
        RMat a;
        RVec b;
        for (int k : fan_.cones[c]) {
            a.emplace_back(fan_.rays[k].begin(), fan_.rays[k].end());
            b.push_back(values_[k]);
        }
        if (a.empty()) {
            slopes_[c] = RVec(n, Rat(0));
            continue;
        }
        slopes_[c] = rational_solve(a, b);
        if (!slopes_[c]) well_defined_ = false;
    }
    max_index_ = fan_.maximal_cones();
    for (int c : max_index_) max_cones_.push_back(Cone::generated_by(fan_.cone_rays(c), n));
}

Rat PLFunction::evaluate(const Vec& n) const {
    for (std::size_t i = 0; i < max_cones_.size(); ++i) {
        if (!max_cones_[i].contains(n)) continue;
        const auto& s = slopes_[max_index_[i]];
        if (!s) throw std::logic_error("PLFunction::evaluate: function not well defined");
        Rat v(0);
        for (std::size_t k = 0; k < n.size(); ++k) v += (*s)[k] * Rat(n[k]);
        return v;
    }
    throw std::invalid_argument("PLFunction::evaluate: point outside the support " + to_string(n));
}

bool PLFunction::wall_check(bool strict) const {
    if (!well_defined_) return false;
    const int n = fan_.ambient_dim;
    for (std::size_t i = 0; i < max_index_.size(); ++i)
        for (std::size_t j = 0; j < max_index_.size(); ++j) {
            if (i == j) continue;
            const auto& ci = fan_.cones[max_index_[i]];
            const auto& cj = fan_.cones[max_index_[j]];
            std::vector<int> common;
            std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(common));
            Mat m;
            for (int k : common) m.push_back(fan_.rays[k]);
            if (m.empty() || rank(m) != n - 1) continue;
            const RVec& s = *slopes_[max_index_[i]];
            for (int k : cj) {
                if (std::binary_search(ci.begin(), ci.end(), k)) continue;
                Rat lin(0);
                for (int t = 0; t < n; ++t) lin += s[t] * Rat(fan_.rays[k][t]);
                if (strict ? !(lin < values_[k]) : (values_[k] < lin)) return false;
            }
        }
    return true;
}

bool PLFunction::is_convex() const { return wall_check(false); }
bool PLFunction::is_strictly_convex() const { return wall_check(true); }

PLFunction PLFunction::operator+(const PLFunction& o) const {
    if (o.fan_.rays != fan_.rays || o.fan_.cones != fan_.cones)
        throw std::invalid_argument("PLFunction sum: different fans");
    std::vector<Rat> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
    return PLFunction(fan_, v);
}

PLFunction PLFunction::operator-() const {
    std::vector<Rat> v;
    for (const auto& x : values_) v.push_back(-x);
    return PLFunction(fan_, v);
}

PLFunction support_function(const LatticePolytope& delta, const NormalFan& nf) {
    std::vector<Rat> vals;
    for (const auto& ray : nf.fan.rays) {
        Int mn = dot(ray, delta.vertices()[0]);
        for (const auto& v : delta.vertices()) mn = std::min(mn, dot(ray, v));
        vals.emplace_back(neg(mn));
    }
    return PLFunction(nf.fan, vals);
}

PLFunction canonical_function(const Fan& fan) { return PLFunction(fan, std::vector<Rat>(fan.rays.size(), Rat(-1))); }

NewtonPolytope newton_polytope_of_pl(const PLFunction& phi) {
    const Fan& fan = phi.fan();
    const int n = fan.ambient_dim;
    const int nr = static_cast<int>(fan.rays.size());
    auto feasible = [&](const RVec& m) {
        for (int k = 0; k < nr; ++k) {
            Rat v = phi.ray_values()[k];
            for (int t = 0; t < n; ++t) v += Rat(fan.rays[k][t]) * m[t];
            if (v < Rat(0)) return false;
        }
        return true;
    };
    std::set<std::vector<std::pair<Int, Int>>> seen;
    NewtonPolytope out;
    std::vector<int> idx(n);
    // enumerate n-subsets of the constraints
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            RMat a;
            RVec b;
            Mat ia;
            for (int k : idx) {
                a.emplace_back(fan.rays[k].begin(), fan.rays[k].end());
                ia.push_back(fan.rays[k]);
                b.push_back(-phi.ray_values()[k]);
            }
            if (rank(ia) != n) return;
            auto x = rational_solve(a, b);
            if (!x || !feasible(*x)) return;
            std::vector<std::pair<Int, Int>> key;
            for (const auto& r : *x) key.emplace_back(r.num(), r.den());
            if (seen.insert(key).second) out.vertices.push_back(*x);
            return;
        }
        for (int k = start; k < nr; ++k) {
            idx[depth] = k;
            rec(k + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(out.vertices.begin(), out.vertices.end(), [](const RVec& a, const RVec& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    out.empty = out.vertices.empty();
    out.integral = !out.empty;
    std::vector<Vec> iv;
    for (const auto& v : out.vertices) {
        Vec p;
        for (const auto& r : v) {
            if (!r.is_integer()) out.integral = false;
            p.push_back(r.num());
        }
        iv.push_back(p);
    }
    if (out.integral) out.polytope = LatticePolytope::hull(iv);
    return out;
}

PolytopeAnalysis delta_prime_and_kodaira(const LatticePolytope& delta) {
    PolytopeAnalysis a;
    a.delta = delta;
    a.nfan = normal_fan(delta);
    a.d = delta.dim() - 1;
    // smoothness: every maximal normal cone is generated by part of a basis
    for (std::size_t f = 0; f < delta.faces().size(); ++f) {
        if (delta.faces()[f].dim != 0) continue;
        std::vector<Vec> gens;
        for (int k : delta.faces()[f].facets) gens.push_back(delta.facets()[k].normal);
        if (!is_standard_set(gens)) {
            Vec v = delta.vertices()[delta.faces()[f].vertices[0]];
            std::string msg = "non-smooth polytope: normal cone at vertex " + to_string(v) + " generated by {";
            for (std::size_t i = 0; i < gens.size(); ++i) msg += (i ? "," : "") + to_string(gens[i]);
            SmithForm s = smith_normal_form(gens);
            Int index = 1;
            for (Int dv : s.divisors) index = mul(index, dv);
            msg += "} is not standard";
            if (static_cast<int>(gens.size()) == delta.ambient_dim()) msg += " (index " + std::to_string(index) + ")";
            throw NonSmoothError(msg, v, gens);
        }
    }
    a.smooth = true;
    a.phi_delta = support_function(delta, a.nfan);
    a.lattice_points = delta.lattice_points(false, 1);
    a.interior_points = delta.lattice_points(true, 1);
    if (!a.interior_points.empty()) {
        a.delta_prime = LatticePolytope::hull(a.interior_points);
        a.kodaira = std::min(a.delta_prime->dim(), a.d);
    }
    NewtonPolytope np = newton_polytope_of_pl(a.phi_delta + canonical_function(a.nfan.fan));
    if (np.empty)
        a.newton_identity_holds = !a.delta_prime.has_value();
    else
        a.newton_identity_holds = np.polytope && a.delta_prime && *np.polytope == *a.delta_prime;
    return a;
}

ReflexivityReport reflexivity_and_minkowski_check(const PolytopeAnalysis& a) {
    ReflexivityReport r;
    const auto& delta = a.delta;
    if (a.interior_points.size() == 1) {
        const Vec& v = a.interior_points[0];
        r.reflexive = true;
        for (const auto& f : delta.facets()) {
            Int c = f.eval(v);  // lattice distance of v from the facet
            RVec pv;
            for (Int x : f.normal) pv.push_back(Rat(x, c));
            r.polar_vertices.push_back(pv);
            if (c != 1) r.reflexive = false;
        }
    }
    PLFunction phiK = canonical_function(a.nfan.fan);
    PLFunction anti = -phiK;
    r.nef_anticanonical = anti.is_convex();
    r.phi_prime_convex = (a.phi_delta + phiK).is_convex();
    NewtonPolytope nk = newton_polytope_of_pl(anti);
    if (nk.polytope) r.delta_K = nk.polytope;
    if (r.nef_anticanonical && a.delta_prime && r.delta_K) {
        r.minkowski_checked = true;
        r.minkowski_holds = minkowski_sum(*r.delta_K, *a.delta_prime) == delta;
    }
    return r;
}

std::string kodaira_string(const std::optional<int>& k) { return k ? std::to_string(*k) : "-inf"; }

}  // namespace lgm
