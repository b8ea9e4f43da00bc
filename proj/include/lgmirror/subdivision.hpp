// The canonical decomposition P_* induced by the lift h_* (0 on the boundary,
// -1 on interior points), star-like standard triangulations and the fans
// built from them.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgmirror/lp.hpp"
#include "lgmirror/toric_polytope.hpp"

namespace lgm {

// A polyhedral complex given by its maximal cells; all cells are indexed.
struct PolyhedralComplex {
    std::vector<LatticePolytope> cells;  // every nonempty cell, sorted by (dim, vertices)
    std::vector<int> maximal;
    // Smallest cell containing all given points, or -1.
    int smallest_containing(const std::vector<Vec>& pts) const;
    int find(const std::vector<Vec>& sorted_vertices) const;
    std::vector<int> cells_of_dim(int k) const;
};
PolyhedralComplex complex_from_maximal(const std::vector<LatticePolytope>& maximal_cells);

struct LiftedHull {
    LatticePolytope base;
    std::map<Vec, Int> lift;  // h_* on the lattice points
    std::vector<LatticePolytope> lower_facets;  // lower facets of the lifted hull, projected
};

struct PStar {
    LiftedHull hull;
    PolyhedralComplex complex;
};

// Requires a nonempty Delta'.
PStar pstar(const PolytopeAnalysis& a);

// Pulling orders. Lex is the coordinate order of the lattice points.
struct PullingOrder {
    enum class Kind { Lex, RevLex, Random, Explicit } kind = Kind::Lex;
    unsigned long long seed = 0;
    std::vector<Vec> points;  // for Explicit: a permutation of the lattice points
    static PullingOrder parse(const std::string& s);  // lex | revlex | random:SEED
    std::string str() const;
};

std::vector<Vec> order_points(const std::vector<Vec>& lattice_points, const PullingOrder& order);

// A triangulation by its maximal simplices (vertex lists, sorted).
struct Triangulation {
    int dim = 0;
    std::vector<std::vector<Vec>> simplices;
    std::vector<Int> determinants;  // unimodularity witness per simplex
    std::string certificate;        // "pulling", "lp" or "none"
    std::vector<BigRat> heights;    // convex height certificate on the lattice points
    std::vector<Vec> height_points;
    std::vector<Vec> order;         // pulling order when built by pulling
    friend bool operator==(const Triangulation& a, const Triangulation& b) { return a.simplices == b.simplices; }
};

struct TriangulationError : std::runtime_error {
    TriangulationError(const std::string& msg, std::vector<Vec> simplex, Int det)
        : std::runtime_error(msg), simplex(std::move(simplex)), det(det) {}
    std::vector<Vec> simplex;
    Int det;
};

// Star-like standard triangulation by pulling refinements of P_* (or of Delta
// itself when Delta' is empty). Throws TriangulationError on a non-unimodular
// simplex.
Triangulation standard_triangulation(const PolytopeAnalysis& a, const PullingOrder& order = {});
// Pulling refinement of the given maximal cells at the given points in order.
// For each pulled point, records affinely independent vertices of a cell that
// contained it; these determine the height certificate.
struct PullingResult {
    std::vector<std::vector<Vec>> simplices;
    std::vector<std::vector<Vec>> interpolation;
};
PullingResult pulling_refinement(const std::vector<LatticePolytope>& cells, const std::vector<Vec>& points);

// Checks that simplices form a unimodular triangulation of Delta using all
// lattice points: full-dimensional, determinant +-1, normalized volume sum and
// ridge pairing. Returns an empty string on success, else the first failure.
std::string validate_triangulation(const LatticePolytope& delta, const std::vector<std::vector<Vec>>& simplices);
Triangulation make_triangulation(const LatticePolytope& delta, std::vector<std::vector<Vec>> simplices);

// Interior walls: pairs of maximal simplices sharing a ridge.
struct Wall {
    int left = 0, right = 0;
    Vec apex;                 // vertex of `right` not in `left`
    std::vector<Int> lambda;  // apex = sum lambda_i * left_i (affine, integral for unimodular)
};
std::vector<Wall> interior_walls(const Triangulation& t);

// Strict local convexity of the height function across every interior wall.
bool heights_certify(const Triangulation& t, const std::map<Vec, BigRat>& h);

struct StarLikeReport {
    bool star_like = false;
    bool refines_pstar = false;
    bool regular = false;
    std::string diagnostic;
    std::map<Vec, BigRat> heights;  // strictly convex certificate when regular
};
// Checks refinement of P_* and searches an exact convex certificate.
StarLikeReport is_star_like(const Triangulation& t, const PStar& ps);

struct Fans {
    Fan sigma;       // cones over cells of P
    Fan sigma_star;  // cones over cells of P_*
    Fan sigma_check; // star subdivision of the dual cone along rho
    std::vector<int> refinement;  // cone of sigma -> smallest cone of sigma_star containing it
};
// Throws std::logic_error if any cone of sigma or sigma_check is not standard.
Fans fans_from_data(const PolytopeAnalysis& a, const PStar& ps, const Triangulation& t);

// All cells (faces of maximal simplices) of a triangulation, sorted by
// (dim, vertices); each cell is a sorted vertex list.
std::vector<std::vector<Vec>> all_cells(const Triangulation& t);

}  // namespace lgm
