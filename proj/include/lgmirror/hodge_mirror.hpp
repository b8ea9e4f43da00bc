// The mirror side: Hodge-Deligne numbers of the strata of w^{-1}(0), the
// Hodge table of the vanishing-cycle sheaf and the checks relating it to S.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgmirror/hodge_dk.hpp"
#include "lgmirror/mirror_duality.hpp"

namespace lgm {

// Raised for inputs outside the supported regime (no interior lattice point).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// e^{p,p}(H^k x (C*)^l); zero when k < 0 (empty). Off-diagonal numbers vanish.
Int ep_handlebody_torus(int k, int l, int p);
// Same value by inclusion-exclusion over hyperplanes and the torus product.
Int ep_handlebody_torus_oracle(int k, int l, int p);

// Everything the mirror-side formulas need, computed once.
struct MirrorContext {
    const PolytopeAnalysis* a = nullptr;
    PStar ps;
    Triangulation t;
    StrataData strata;
    ProjectionMaps pmaps;
    TriangulationCells tc;
    int d = 0;
};
// Throws UnsupportedError when Delta' is empty.
MirrorContext make_mirror_context(const PolytopeAnalysis& a, const Triangulation& t);

struct StrataEuler {
    // indexed by cell of the context's strata, then by p in 0..d+1
    std::vector<std::vector<Int>> torus;
    std::vector<std::vector<Int>> w0;
    std::vector<std::vector<Int>> a_term;  // A_{tau,p}
    // indexed by k in 0..d+4, then p
    std::vector<std::vector<Int>> y;
    std::vector<std::vector<Int>> y_tor;
    std::vector<std::vector<Int>> y_w0;
    bool a_guard_ok = true;  // A vanishes on cells of Delta' off its boundary
};
StrataEuler ep_strata(const MirrorContext& ctx);

// e^p of the vanishing-cycle sheaf from the strata.
Int ep_mirror(const MirrorContext& ctx, const StrataEuler& se, int p);
// Requires 2p > d.
Int hpp_mirror_upper(const MirrorContext& ctx, int p);
// Same number through Y_tor and the boundary handlebody orbits.
Int hpp_mirror_upper_orbits(const MirrorContext& ctx, int p);
// e^{p,p}(Y_tor): closed form and sum over the toric pieces X_omega.
Int epp_ytor_closed(const MirrorContext& ctx, int p);
Int epp_ytor_pieces(const MirrorContext& ctx, int p);

// Throws std::logic_error on a negative entry, a failed invariant, or
// disagreement of the two diagonal routes.
HodgeTable mirror_hodge_table(const MirrorContext& ctx, const StrataEuler& se);

struct MainTheoremReport {
    HodgeTable hodge_s;
    HodgeTable hodge_mirror;
    struct Entry {
        int p, q;
        Int s, mirror;
        bool pass;
    };
    std::vector<Entry> entries;  // h^{p,q}(S) against h^{d-p,q} of the mirror
    std::vector<Int> ep_s;       // faces and cells of the triangulation
    std::vector<Int> ep_mirror;  // strata pipeline
    bool entries_pass = false;
    bool euler_cross = false;    // e^p(S) = (-1)^d e^{d-p} of the mirror
    bool pass() const { return entries_pass && euler_cross; }
};
MainTheoremReport verify_main_theorem(const MirrorContext& ctx);

struct CurveReport {
    int g = 0;
    int components = 0;
    int graph_genus = 0;
    int connected = 0;
    Int hh0 = 1, hh1 = 0, hh2 = 0;
    bool pick_applies = false;  // Pick chain for two-dimensional Delta'
    Int area2 = 0, interior = 0, boundary = 0, edges = 0, triangles = 0;
    bool pick_ok = true;
    bool pass = false;
    std::string diagnostic;
};
// Requires d = 1 and g >= 2; throws std::invalid_argument otherwise.
CurveReport curve_hh_check(const MirrorContext& ctx);

struct DepthReport {
    int depth = 0;
    int expected = 0;  // kappa + 2
    bool pass = false;
};
DepthReport stratum_depth_check(const MirrorContext& ctx);

}  // namespace lgm
