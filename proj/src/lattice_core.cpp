#include "lgmirror/lattice_core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace lgm {

namespace {

using Bits = boost::dynamic_bitset<>;

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Vec row_times(const Vec& x, const Mat& m, int cols) {
    Vec r(cols, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < cols; ++j) r[j] = add(r[j], mul(x[i], m[i][j]));
    }
    return r;
}

void check_same_dim(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : pts)
        if (p.size() != pts[0].size()) throw std::invalid_argument("points of mixed dimension");
}

}  // namespace

std::vector<HalfSpace> hull_facets(const std::vector<Vec>& pts, int r) {
    std::set<HalfSpace> found;
    const int n = static_cast<int>(pts.size());
    for_each_subset(n, r, [&](const std::vector<int>& idx) {
        Mat rows;
        for (int i = 1; i < r; ++i) rows.push_back(vsub(pts[idx[i]], pts[idx[0]]));
        Vec a = cofactor_normal(rows, r);
        if (is_zero(a)) return;
        Int b = dot(a, pts[idx[0]]);
        bool ge = true, le = true;
        for (const auto& p : pts) {
            Int v = dot(a, p);
            if (v < b) ge = false;
            if (v > b) le = false;
            if (!ge && !le) return;
        }
        if (ge && le) return;  // cannot happen for spanning input
        if (ge)
            found.insert(HalfSpace{a, neg(b)});
        else
            found.insert(HalfSpace{vscale(-1, a), b});
    });
    return {found.begin(), found.end()};
}

LatticePolytope LatticePolytope::hull(const std::vector<Vec>& input) {
    check_same_dim(input);
    std::vector<Vec> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope P;
    const int n = static_cast<int>(pts[0].size());
    P.ambient_ = n;
    Mat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    int r = diffs.empty() ? 0 : rank(diffs);
    P.r_ = r;
    Mat full, full_inv;
    if (r == n) {
        P.origin_ = Vec(n, 0);
        full = Mat(n, Vec(n, 0));
        for (int i = 0; i < n; ++i) full[i][i] = 1;
        full_inv = full;
    } else {
        P.origin_ = pts[0];
        LatticeBasis lb = saturated_basis(diffs, n);
        full = lb.full;
        full_inv = lb.full_inv;
    }
    P.basis_.assign(full.begin(), full.begin() + r);
    P.full_inv_ = full_inv;
    for (int i = r; i < n; ++i) {
        Vec a(n);
        for (int k = 0; k < n; ++k) a[k] = full_inv[k][i];
        P.equations_.emplace_back(a, dot(a, P.origin_));
    }

    std::vector<Vec> cpts;
    for (const auto& p : pts) cpts.push_back(P.to_chart(p));
    P.chart_facets_ = r == 0 ? std::vector<HalfSpace>{} : hull_facets(cpts, r);

    // vertices: points whose tight facet normals have full rank
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (r == 0) {
            P.vertices_.push_back(pts[i]);
            continue;
        }
        Mat tight;
        for (const auto& f : P.chart_facets_)
            if (f.eval(cpts[i]) == 0) tight.push_back(f.normal);
        if (static_cast<int>(tight.size()) >= r && rank(tight) == r) P.vertices_.push_back(pts[i]);
    }

    for (const auto& f : P.chart_facets_) {
        Vec col(n, 0);
        for (int i = 0; i < r; ++i) col[i] = f.normal[i];
        Vec nv(n, 0);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) nv[k] = add(nv[k], mul(full_inv[k][i], col[i]));
        P.facets_.push_back(HalfSpace{nv, sub(f.offset, dot(nv, P.origin_))});
    }

    // face lattice as closure of facet vertex sets under intersection
    const std::size_t nv = P.vertices_.size();
    std::vector<Vec> cverts;
    for (const auto& v : P.vertices_) cverts.push_back(P.to_chart(v));
    std::vector<Bits> facet_bits;
    for (const auto& f : P.chart_facets_) {
        Bits b(nv);
        for (std::size_t i = 0; i < nv; ++i)
            if (f.eval(cverts[i]) == 0) b.set(i);
        facet_bits.push_back(b);
    }
    std::set<Bits> seen;
    std::vector<Bits> queue;
    Bits all(nv);
    all.set();
    seen.insert(all);
    queue.push_back(all);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& fb : facet_bits) {
            Bits x = queue[qi] & fb;
            if (x.none() || seen.count(x)) continue;
            seen.insert(x);
            queue.push_back(x);
        }
    }
    for (const auto& b : seen) {
        Face f;
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < nv; ++i)
            if (b.test(i)) {
                f.vertices.push_back(static_cast<int>(i));
                vs.push_back(cverts[i]);
            }
        f.dim = affine_dim(vs);
        for (std::size_t k = 0; k < facet_bits.size(); ++k)
            if (b.is_subset_of(facet_bits[k])) f.facets.push_back(static_cast<int>(k));
        P.faces_.push_back(f);
    }
    std::sort(P.faces_.begin(), P.faces_.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    for (std::size_t k = 0; k < facet_bits.size(); ++k) {
        std::vector<int> vs;
        for (std::size_t i = 0; i < nv; ++i)
            if (facet_bits[k].test(i)) vs.push_back(static_cast<int>(i));
        P.facet_face_.push_back(P.face_index(vs));
    }
    return P;
}

Vec LatticePolytope::to_chart(const Vec& x) const {
    Vec c = row_times(vsub(x, origin_), full_inv_, ambient_);
    c.resize(r_);
    return c;
}

bool LatticePolytope::in_affine_hull(const Vec& x) const {
    for (const auto& [a, c] : equations_)
        if (dot(a, x) != c) return false;
    return true;
}

Vec LatticePolytope::from_chart(const Vec& c) const {
    Vec x = origin_;
    for (int i = 0; i < r_; ++i) x = vadd(x, vscale(c[i], basis_[i]));
    return x;
}

bool LatticePolytope::contains(const Vec& x) const {
    if (static_cast<int>(x.size()) != ambient_ || !in_affine_hull(x)) return false;
    Vec c = to_chart(x);
    for (const auto& f : chart_facets_)
        if (f.eval(c) < 0) return false;
    return true;
}

bool LatticePolytope::contains_relint(const Vec& x) const {
    if (static_cast<int>(x.size()) != ambient_ || !in_affine_hull(x)) return false;
    Vec c = to_chart(x);
    for (const auto& f : chart_facets_)
        if (f.eval(c) <= 0) return false;
    return true;
}

int LatticePolytope::face_index(const std::vector<int>& vs) const {
    auto it = std::find_if(faces_.begin(), faces_.end(), [&](const Face& f) { return f.vertices == vs; });
    return it == faces_.end() ? -1 : static_cast<int>(it - faces_.begin());
}

std::vector<int> LatticePolytope::faces_of_dim(int k) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].dim == k) out.push_back(static_cast<int>(i));
    return out;
}

int LatticePolytope::minimal_face(const std::vector<Vec>& pts) const {
    std::vector<int> tight;
    std::vector<Vec> cpts;
    for (const auto& p : pts) {
        if (!contains(p)) throw std::invalid_argument("minimal_face: point outside polytope " + to_string(p));
        cpts.push_back(to_chart(p));
    }
    for (std::size_t k = 0; k < chart_facets_.size(); ++k) {
        bool all = true;
        for (const auto& c : cpts)
            if (chart_facets_[k].eval(c) != 0) {
                all = false;
                break;
            }
        if (all) tight.push_back(static_cast<int>(k));
    }
    std::vector<int> vs;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        Vec c = to_chart(vertices_[i]);
        bool all = true;
        for (int k : tight)
            if (chart_facets_[k].eval(c) != 0) {
                all = false;
                break;
            }
        if (all) vs.push_back(static_cast<int>(i));
    }
    return face_index(vs);
}

bool LatticePolytope::face_contains(int face, const Vec& x) const {
    if (!contains(x)) return false;
    Vec c = to_chart(x);
    for (int k : faces_[face].facets)
        if (chart_facets_[k].eval(c) != 0) return false;
    return true;
}

std::vector<Vec> LatticePolytope::face_vertices(int face) const {
    std::vector<Vec> out;
    for (int i : faces_[face].vertices) out.push_back(vertices_[i]);
    return out;
}

LatticePolytope LatticePolytope::face_polytope(int face) const { return hull(face_vertices(face)); }

std::vector<Vec> LatticePolytope::lattice_points(bool interior, Int dilation) const {
    if (dilation < 1) throw std::invalid_argument("lattice_points: dilation must be positive");
    std::vector<Vec> out;
    Vec base = vscale(dilation, origin_);
    if (r_ == 0) {
        out.push_back(base);
        return out;
    }
    Vec lo(r_), hi(r_);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        Vec c = to_chart(vertices_[i]);
        for (int k = 0; k < r_; ++k) {
            Int v = mul(dilation, c[k]);
            if (i == 0 || v < lo[k]) lo[k] = v;
            if (i == 0 || v > hi[k]) hi[k] = v;
        }
    }
    Vec c = lo;
    while (true) {
        bool ok = true;
        for (const auto& f : chart_facets_) {
            Int v = add(dot(f.normal, c), mul(dilation, f.offset));
            if (v < 0 || (interior && v == 0)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Vec x = base;
            for (int k = 0; k < r_; ++k) x = vadd(x, vscale(c[k], basis_[k]));
            out.push_back(x);
        }
        int k = r_ - 1;
        while (k >= 0 && c[k] == hi[k]) {
            c[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++c[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int LatticePolytope::count_lattice_points(bool interior, Int dilation) const {
    return static_cast<Int>(lattice_points(interior, dilation).size());
}

Int LatticePolytope::normalized_volume() const {
    if (r_ == 0) return 1;
    Vec c0 = to_chart(vertices_[0]);
    Int vol = 0;
    for (std::size_t k = 0; k < chart_facets_.size(); ++k) {
        Int h = chart_facets_[k].eval(c0);
        if (h == 0) continue;
        vol = add(vol, mul(h, face_polytope(facet_face_[k]).normalized_volume()));
    }
    return vol;
}

std::vector<Vec> lattice_points(const LatticePolytope& p, bool interior, Int dilation) {
    return p.lattice_points(interior, dilation);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Vec> sums;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(vadd(a, b));
    return LatticePolytope::hull(sums);
}

// ---------------------------------------------------------------- cones

Cone Cone::generated_by(const std::vector<Vec>& input, int n) {
    Cone C;
    C.ambient_ = n;
    std::vector<Vec> gens;
    for (const auto& g : input) {
        if (static_cast<int>(g.size()) != n) throw std::invalid_argument("cone generator of wrong dimension");
        if (!lgm::is_zero(g)) gens.push_back(primitive(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) {
        C.dim_ = 0;
        C.ortho_ = integer_kernel({}, n);
        C.faces_ = {{}};
        return C;
    }
    C.dim_ = rank(gens);
    C.ortho_ = integer_kernel(gens, n);

    // facets: hyperplanes through dim-1 generators and the orthogonal complement
    std::set<Vec> normals;
    const int k = C.dim_ - 1;
    for_each_subset(static_cast<int>(gens.size()), k, [&](const std::vector<int>& idx) {
        Mat rows;
        for (int i : idx) rows.push_back(gens[i]);
        for (const auto& o : C.ortho_) rows.push_back(o);
        Vec a = cofactor_normal(rows, n);
        if (lgm::is_zero(a)) return;
        bool ge = true, le = true, nonzero = false;
        for (const auto& g : gens) {
            Int v = dot(a, g);
            if (v < 0) ge = false;
            if (v > 0) le = false;
            if (v != 0) nonzero = true;
        }
        if (!nonzero || (!ge && !le)) return;
        normals.insert(ge ? a : vscale(-1, a));
    });
    C.facets_.assign(normals.begin(), normals.end());

    Mat span_check = C.facets_;
    for (const auto& o : C.ortho_) span_check.push_back(o);
    C.strict_ = rank(span_check) == n;

    // irredundant generators: extreme rays
    for (const auto& g : gens) {
        Mat tight = C.ortho_;
        for (const auto& f : C.facets_)
            if (dot(f, g) == 0) tight.push_back(f);
        if (!C.strict_ || rank(tight) == n - 1) C.gens_.push_back(g);
    }

    // faces as generator index sets
    const std::size_t ng = C.gens_.size();
    std::vector<Bits> fb;
    for (const auto& f : C.facets_) {
        Bits b(ng);
        for (std::size_t i = 0; i < ng; ++i)
            if (dot(f, C.gens_[i]) == 0) b.set(i);
        fb.push_back(b);
    }
    std::set<Bits> seen;
    std::vector<Bits> queue;
    Bits all(ng);
    all.set();
    seen.insert(all);
    queue.push_back(all);
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const auto& b : fb) {
            Bits x = queue[qi] & b;
            if (seen.count(x)) continue;
            seen.insert(x);
            queue.push_back(x);
        }
    for (const auto& b : seen) {
        std::vector<int> f;
        for (std::size_t i = 0; i < ng; ++i)
            if (b.test(i)) f.push_back(static_cast<int>(i));
        C.faces_.push_back(f);
    }
    std::sort(C.faces_.begin(), C.faces_.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return C;
}

bool Cone::contains(const Vec& x) const {
    for (const auto& o : ortho_)
        if (dot(o, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, x) < 0) return false;
    return true;
}

int Cone::face_dim(const std::vector<int>& face) const {
    Mat m;
    for (int i : face) m.push_back(gens_[i]);
    return rank(m);
}

Cone dual_cone(const Cone& c) {
    if (c.is_zero()) throw std::invalid_argument("dual_cone: zero cone has the whole space as dual");
    std::vector<Vec> gens = c.facet_normals();
    for (const auto& o : c.orthogonal()) {
        gens.push_back(o);
        gens.push_back(vscale(-1, o));
    }
    if (gens.empty()) throw std::invalid_argument("dual_cone: cone is the whole space; dual is {0}");
    return Cone::generated_by(gens, c.ambient_dim());
}

bool is_standard_set(const std::vector<Vec>& gens) {
    if (gens.empty()) return true;
    SmithForm s = smith_normal_form(gens);
    if (s.divisors.size() != gens.size()) return false;
    for (Int d : s.divisors)
        if (d != 1) return false;
    return true;
}

bool is_standard_cone(const Cone& c) { return is_standard_set(c.generators()); }

Cone cone_over(const LatticePolytope& p) {
    std::vector<Vec> gens;
    for (auto v : p.vertices()) {
        v.push_back(1);
        gens.push_back(v);
    }
    return Cone::generated_by(gens, p.ambient_dim() + 1);
}

std::vector<int> Fan::maximal_cones() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cones.size() && maximal; ++j)
            if (i != j && cones[j].size() > cones[i].size() &&
                std::includes(cones[j].begin(), cones[j].end(), cones[i].begin(), cones[i].end()))
                maximal = false;
        if (maximal) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<Vec> Fan::cone_rays(int i) const {
    std::vector<Vec> out;
    for (int k : cones[i]) out.push_back(rays[k]);
    return out;
}

}  // namespace lgm
