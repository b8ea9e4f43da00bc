// Normal fans, piecewise linear functions, the interior polytope and the
// Kodaira dimension of the hypersurface.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgmirror/lattice_core.hpp"

namespace lgm {

// Normal fan with rays = facet normals of the polytope (same order) and the
// inclusion-reversing face <-> cone correspondence.
struct NormalFan {
    Fan fan;
    std::vector<int> cone_of_face;  // face index -> cone index
    std::vector<int> face_of_cone;  // cone index -> face index
};
NormalFan normal_fan(const LatticePolytope& delta);

// Piecewise linear function on a complete fan given by its ray values.
class PLFunction {
public:
    PLFunction() = default;
    PLFunction(Fan fan, std::vector<Rat> ray_values);

    const Fan& fan() const { return fan_; }
    const std::vector<Rat>& ray_values() const { return values_; }
    bool well_defined() const { return well_defined_; }
    // Linear functional s with phi(n) = <s, n> on the given cone.
    const std::optional<RVec>& slope(int cone) const { return slopes_[cone]; }
    Rat evaluate(const Vec& n) const;
    bool is_convex() const;
    bool is_strictly_convex() const;

    PLFunction operator+(const PLFunction& o) const;
    PLFunction operator-() const;

private:
    bool wall_check(bool strict) const;
    Fan fan_;
    std::vector<Rat> values_;
    std::vector<std::optional<RVec>> slopes_;
    std::vector<Cone> max_cones_;
    std::vector<int> max_index_;
    bool well_defined_ = true;
};

PLFunction support_function(const LatticePolytope& delta, const NormalFan& nf);
// The function taking value -1 on every ray.
PLFunction canonical_function(const Fan& fan);

// {m : phi(n) + <n, m> >= 0 for all n}; may be empty or have rational vertices.
struct NewtonPolytope {
    bool empty = true;
    std::vector<RVec> vertices;
    bool integral = false;
    std::optional<LatticePolytope> polytope;  // set when nonempty and integral
};
NewtonPolytope newton_polytope_of_pl(const PLFunction& phi);

struct NonSmoothError : std::runtime_error {
    NonSmoothError(const std::string& msg, Vec vertex, std::vector<Vec> cone)
        : std::runtime_error(msg), vertex(std::move(vertex)), cone(std::move(cone)) {}
    Vec vertex;
    std::vector<Vec> cone;
};

struct PolytopeAnalysis {
    LatticePolytope delta;
    NormalFan nfan;
    PLFunction phi_delta;
    int d = 0;  // dimension of the hypersurface
    std::vector<Vec> lattice_points;   // all of Delta ∩ M, sorted
    std::vector<Vec> interior_points;  // Int(Delta) ∩ M, sorted
    std::optional<LatticePolytope> delta_prime;
    std::optional<int> kodaira;  // nullopt encodes minus infinity
    bool smooth = true;
    bool newton_identity_holds = false;  // Newton polytope of phi_Delta + phi_K equals Delta'
    int dim_delta_prime() const { return delta_prime ? delta_prime->dim() : -1; }
};

// Requires a full-dimensional Delta with smooth normal fan; throws
// NonSmoothError naming the first non-standard normal cone otherwise.
PolytopeAnalysis delta_prime_and_kodaira(const LatticePolytope& delta);

struct ReflexivityReport {
    bool reflexive = false;
    bool nef_anticanonical = false;
    bool phi_prime_convex = false;
    bool minkowski_checked = false;
    bool minkowski_holds = false;
    std::optional<LatticePolytope> delta_K;
    std::vector<RVec> polar_vertices;  // set when there is a unique interior point
};
ReflexivityReport reflexivity_and_minkowski_check(const PolytopeAnalysis& a);

std::string kodaira_string(const std::optional<int>& k);

}  // namespace lgm
