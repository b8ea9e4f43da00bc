// Hodge numbers of the hypersurface S via Danilov-Khovanskii counts, and the
// binomial identities used by both the S side and the mirror side.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgmirror/subdivision.hpp"

namespace lgm {

// A (p,q)-indexed table with a formula tag per entry.
struct HodgeTable {
    int d = 0;
    std::vector<std::vector<Int>> entries;            // entries[p][q], 0 <= p,q <= d
    std::vector<std::vector<std::string>> provenance;  // formula tag per entry
    Int at(int p, int q) const { return entries.at(p).at(q); }
    friend bool operator==(const HodgeTable& a, const HodgeTable& b) { return a.d == b.d && a.entries == b.entries; }
};
HodgeTable empty_table(int d);

// Checks symmetry, duality h^{p,q} = h^{d-p,d-q}, vanishing off {p=q} and
// {p+q=d}, and nonnegativity. Returns an empty string or the first failure.
std::string check_table(const HodgeTable& t, bool require_symmetry);

struct EulerProfile {
    std::map<int, Int> values;  // p -> e^p
};

// Right-hand side of the alternating expansion (-1)^m sum_i (-1)^i C(i,m) C(n+m+1,k+1+i) = C(n,k).
Int binom_alternating_rhs(Int n, Int k, Int m);
// Vandermonde: sum_i C(m,i) C(n,k-i).
Int vandermonde_rhs(Int m, Int n, Int k);

// Cells of a triangulation with their dimensions and minimal faces of Delta.
struct TriangulationCells {
    std::vector<std::vector<Vec>> cells;
    std::vector<int> dim;
    std::vector<int> delta_face;
};
TriangulationCells triangulation_cells(const LatticePolytope& delta, const Triangulation& t);

// l*(j * face): interior lattice points of the j-th dilate.
Int ell_star(const LatticePolytope& delta, int face, Int j);
// phi_i(face) by dilation counting.
Int ell_star_phi_direct(const LatticePolytope& delta, int face, int i);
// phi_i(face) by counting cells whose minimal face is `face`.
Int ell_star_phi_simplices(const LatticePolytope& delta, const TriangulationCells& tc, int face, int i);

// e^p(S) from the faces of Delta and the cells of the triangulation.
Int ep_S(const LatticePolytope& delta, const TriangulationCells& tc, int p);
// e^p(S) from the faces of Delta and dilation counts only.
Int ep_S_counting(const LatticePolytope& delta, int p);

struct UpperPair {
    Int h_pp = 0;
    Int h_p_dminus_p = 0;
};
// Requires 2p > d. Throws std::invalid_argument otherwise.
UpperPair hpq_upper_S(const LatticePolytope& delta, const TriangulationCells& tc, int p);

// Full diamond of S. Throws std::logic_error on a negative entry or a failed
// table invariant.
HodgeTable hodge_diamond_S(const PolytopeAnalysis& a, const Triangulation& t);

}  // namespace lgm
