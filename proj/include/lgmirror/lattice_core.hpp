// Exact lattice geometry: polytopes with face lattices, lattice points,
// rational cones, duality and unimodularity.
#pragma once

#include <string>
#include <vector>

#include "lgmirror/arith.hpp"
#include "lgmirror/linalg.hpp"

namespace lgm {

// Half-space {m : <normal, m> >= -offset}.
struct HalfSpace {
    Vec normal;
    Int offset = 0;
    Int eval(const Vec& m) const { return add(dot(normal, m), offset); }
    bool contains(const Vec& m) const { return eval(m) >= 0; }
    friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    }
};

// A nonempty face: indices into the owning polytope's vertex list, and the
// indices of the facets containing it.
struct Face {
    std::vector<int> vertices;
    int dim = 0;
    std::vector<int> facets;
};

// Lattice polytope of any dimension. Facets and faces are relative to the
// affine hull, which carries the lattice given by a saturated basis.
class LatticePolytope {
public:
    LatticePolytope() = default;

    // Convex hull of a nonempty point set; throws on dimension mismatch.
    static LatticePolytope hull(const std::vector<Vec>& points);

    int ambient_dim() const { return ambient_; }
    int dim() const { return r_; }
    bool full_dimensional() const { return r_ == ambient_; }
    const std::vector<Vec>& vertices() const { return vertices_; }

    // Facets in ambient coordinates; for lower-dimensional polytopes the normal
    // is one integral lift of the relative facet normal.
    const std::vector<HalfSpace>& facets() const { return facets_; }
    // Affine hull equations <a, x> = c.
    const std::vector<std::pair<Vec, Int>>& equations() const { return equations_; }

    // Chart: x = origin + sum_i c_i basis_i for x in the affine hull.
    const Vec& chart_origin() const { return origin_; }
    const Mat& chart_basis() const { return basis_; }
    const std::vector<HalfSpace>& chart_facets() const { return chart_facets_; }
    Vec to_chart(const Vec& x) const;
    Vec from_chart(const Vec& c) const;
    bool in_affine_hull(const Vec& x) const;

    bool contains(const Vec& x) const;
    bool contains_relint(const Vec& x) const;

    // Nonempty faces sorted by (dim, vertex list); the last one is the polytope.
    const std::vector<Face>& faces() const { return faces_; }
    int face_index(const std::vector<int>& sorted_vertices) const;
    std::vector<int> faces_of_dim(int k) const;
    int facet_face(int facet) const { return facet_face_[facet]; }
    // Smallest face containing the given points of the polytope.
    int minimal_face(const std::vector<Vec>& pts) const;
    // Whether x lies on the face.
    bool face_contains(int face, const Vec& x) const;
    std::vector<Vec> face_vertices(int face) const;
    LatticePolytope face_polytope(int face) const;

    // Lattice points of dilation * P, or of its relative interior.
    // Cost is the size of the chart bounding box times the facet count.
    std::vector<Vec> lattice_points(bool interior = false, Int dilation = 1) const;
    Int count_lattice_points(bool interior = false, Int dilation = 1) const;

    // Normalized volume dim! * vol relative to the affine-hull lattice.
    Int normalized_volume() const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
    }

private:
    int ambient_ = 0;
    int r_ = 0;
    std::vector<Vec> vertices_;
    Vec origin_;
    Mat basis_;     // r x n
    Mat full_inv_;  // n x n, maps (x - origin) to chart coordinates
    std::vector<HalfSpace> chart_facets_;
    std::vector<HalfSpace> facets_;
    std::vector<std::pair<Vec, Int>> equations_;
    std::vector<Face> faces_;
    std::vector<int> facet_face_;
};

// Facets of the convex hull of points that span Z^r affinely (chart level).
std::vector<HalfSpace> hull_facets(const std::vector<Vec>& pts, int r);

std::vector<Vec> lattice_points(const LatticePolytope& p, bool interior, Int dilation);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// Rational polyhedral cone with primitive irredundant generators.
class Cone {
public:
    Cone() = default;
    static Cone generated_by(const std::vector<Vec>& gens, int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_; }
    bool strictly_convex() const { return strict_; }
    bool is_zero() const { return gens_.empty(); }
    const std::vector<Vec>& generators() const { return gens_; }
    // Inward facet normals, primitive.
    const std::vector<Vec>& facet_normals() const { return facets_; }
    // Basis of the orthogonal complement of the span.
    const Mat& orthogonal() const { return ortho_; }
    bool contains(const Vec& x) const;
    // Faces as sorted generator-index sets, including {} (the apex) and the cone.
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_dim(const std::vector<int>& face) const;
    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
    }

private:
    int ambient_ = 0;
    int dim_ = 0;
    bool strict_ = true;
    std::vector<Vec> gens_;
    std::vector<Vec> facets_;
    Mat ortho_;
    std::vector<std::vector<int>> faces_;
};

Cone dual_cone(const Cone& c);
bool is_standard_cone(const Cone& c);
bool is_standard_set(const std::vector<Vec>& gens);
Cone cone_over(const LatticePolytope& p);

// Fan: rays and cones as sorted ray-index sets, including the zero cone {}.
struct Fan {
    int ambient_dim = 0;
    std::vector<Vec> rays;
    std::vector<std::vector<int>> cones;
    std::vector<int> maximal_cones() const;
    std::vector<Vec> cone_rays(int i) const;
};

}  // namespace lgm
