// The mirror-side combinatorics: the polyhedron sigma-check-o and its face
// duality with P_*, the polytopes Delta-check-0 and Delta-check, the
// projection maps from faces of Delta to faces of Delta', the dual
// intersection complex of w^{-1}(0) and per-cell stratum profiles.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgmirror/subdivision.hpp"

namespace lgm {

// Face of sigma-check-o: convex hull of bounded vertices plus a recession cone.
struct DualFace {
    std::vector<Vec> vertices;
    std::vector<Vec> recession;  // generators of the recession cone (empty if bounded)
    int dim = 0;
    bool bounded() const { return recession.empty(); }
};

struct MirrorData {
    Cone sigma;
    Cone sigma_check;
    Vec rho;
    std::vector<Vec> cell_vertices;    // vertex of sigma-check-o dual to each maximal P_* cell
    std::vector<DualFace> dual_faces;  // indexed like the P_* complex cells
    LatticePolytope delta_check_0;
    LatticePolytope delta_check;
    bool newton_ok = false;      // bounded vertices realize h_* as the Newton polyhedron support
    bool duality_ok = false;     // inclusion-reversing bijection with complementary dimensions
    bool dim_delta_check_0_ok = false;
    std::string diagnostic;
};
// Requires a nonempty Delta'.
MirrorData build_mirror_data(const PolytopeAnalysis& a, const PStar& ps);

struct ProjectionMaps {
    // Indexed by faces of Delta (the last face is Delta itself).
    std::vector<int> p1;          // P_* cell index, -1 for Delta
    std::vector<int> p;           // face of Delta' via the P_* cells
    std::vector<int> p_explicit;  // face of Delta' via the half-space formula
    bool consistent = false;
    bool p1_bijective = false;
    bool p_surjective = false;
    bool dim_inequality = false;
};
ProjectionMaps p_maps(const PolytopeAnalysis& a, const PStar& ps);

struct DualSimplex {
    std::vector<Vec> vertices;  // lattice points of Delta'
    bool has_u = false;
    int copy = -1;              // 0/1 for the two copies of a doubled simplex, -1 otherwise
    int dim() const { return static_cast<int>(vertices.size()) - 1 + (has_u ? 1 : 0); }
};

struct DualIntersectionComplex {
    std::vector<Vec> vertices;  // Delta' ∩ M; the extra vertex u is implicit
    std::vector<DualSimplex> simplices;
    int case_number = 0;
    std::string topology;  // "ball" or "sphere"
    int topology_dim = 0;
    Int euler_characteristic = 0;
    // curve case
    std::optional<int> components;
    std::optional<int> graph_genus;
    std::optional<int> connected_pieces;
};
DualIntersectionComplex dual_intersection_complex(const PolytopeAnalysis& a, const Triangulation& t);

struct StratumProfile {
    std::vector<Vec> cell;
    int dim = 0;
    int pstar_cell = -1;  // smallest P_* cell containing the cell
    int dim_pstar = 0;
    int delta_face = -1;  // minimal face of Delta containing the cell
    int dim_delta_face = 0;
    bool in_boundary = false;
    bool in_delta_prime = false;
    bool in_boundary_delta_prime = false;      // boundary taken in the topology of Delta
    bool in_rel_boundary_delta_prime = false;  // relative boundary
    int dim_meet_delta_prime = -1;             // dim of the cell ∩ Delta'
    int delta_prime_face = -1;                 // face of Delta' equal to the P_* cell, if inside Delta'
    // Cells in the boundary: w^{-1}(t) ∩ T is H^k x (C*)^l; k < 0 means empty.
    int generic_k = -1, generic_l = 0, zero_k = -1, zero_l = 0;
    bool w0_nonempty = false;  // T ∩ W~_0 nonempty for cells meeting the interior
};

struct StrataData {
    std::vector<std::vector<Vec>> cells;
    std::vector<StratumProfile> profiles;
    std::vector<int> delta_prime_cells;           // cells inside Delta'
    std::vector<std::vector<int>> cofaces;        // per Delta' cell: cells containing it
    std::vector<bool> y_nonempty;                 // indexed by k
    int depth = 0;                                // max k with Y^k nonempty
};
StrataData stratum_profiles(const PolytopeAnalysis& a, const PStar& ps, const Triangulation& t);

}  // namespace lgm
