#include "lgmirror/hodge_dk.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace lgm {

HodgeTable empty_table(int d) {
    HodgeTable t;
    t.d = d;
    t.entries.assign(d + 1, std::vector<Int>(d + 1, 0));
    t.provenance.assign(d + 1, std::vector<std::string>(d + 1, "vanishing"));
    return t;
}

std::string check_table(const HodgeTable& t, bool require_symmetry) {
    const int d = t.d;
    auto at = [&](int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
    for (int p = 0; p <= d; ++p)
        for (int q = 0; q <= d; ++q) {
            Int v = t.at(p, q);
            if (v < 0) return "negative entry at " + at(p, q);
            if (p != q && p + q != d && v != 0) return "nonzero entry off the diagonals at " + at(p, q);
            if (v != t.at(d - p, d - q)) return "duality fails at " + at(p, q);
            if (require_symmetry && v != t.at(q, p)) return "symmetry fails at " + at(p, q);
        }
    return {};
}

Int binom_alternating_rhs(Int n, Int k, Int m) {
    // individual terms overflow 64 bits well before the sum does
    using boost::multiprecision::cpp_int;
    cpp_int s = 0;
    for (Int i = 0; i <= n + m + 1; ++i) s += cpp_int(sign_pow(i)) * binom(i, m) * binom(n + m + 1, k + 1 + i);
    s *= sign_pow(m);
    if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("binom_alternating_rhs: result exceeds 64 bits");
    return static_cast<Int>(s);
}

Int vandermonde_rhs(Int m, Int n, Int k) {
    Int s = 0;
    for (Int i = 0; i <= k; ++i) s = add(s, mul(binom(m, i), binom(n, k - i)));
    return s;
}

TriangulationCells triangulation_cells(const LatticePolytope& delta, const Triangulation& t) {
    TriangulationCells tc;
    tc.cells = all_cells(t);
    for (const auto& c : tc.cells) {
        tc.dim.push_back(static_cast<int>(c.size()) - 1);
        tc.delta_face.push_back(delta.minimal_face(c));
    }
    return tc;
}

Int ell_star(const LatticePolytope& delta, int face, Int j) {
    return delta.face_polytope(face).count_lattice_points(true, j);
}

Int ell_star_phi_direct(const LatticePolytope& delta, int face, int i) {
    const int dw = delta.faces()[face].dim;
    Int s = 0;
    for (int j = 1; j <= i; ++j) {
        Int c = binom(dw + 1, i - j);
        if (c != 0) s = add(s, mul(sign_pow(j), mul(c, ell_star(delta, face, j))));
    }
    return mul(sign_pow(i), s);
}

Int ell_star_phi_simplices(const LatticePolytope& delta, const TriangulationCells& tc, int face, int i) {
    const int dw = delta.faces()[face].dim;
    Int s = 0;
    for (std::size_t c = 0; c < tc.cells.size(); ++c) {
        if (tc.delta_face[c] != face) continue;
        s = add(s, mul(sign_pow(i + tc.dim[c] + 1), binom(dw - tc.dim[c], dw + 1 - i)));
    }
    return s;
}

namespace {

// -sum over faces (-1)^{dim} C(dim, p+1)
Int face_term(const LatticePolytope& delta, int p) {
    Int s = 0;
    for (const auto& f : delta.faces()) s = add(s, mul(sign_pow(f.dim), binom(f.dim, p + 1)));
    return neg(s);
}

}  // namespace

Int ep_S(const LatticePolytope& delta, const TriangulationCells& tc, int p) {
    Int s = face_term(delta, p);
    for (std::size_t c = 0; c < tc.cells.size(); ++c)
        s = add(s, mul(sign_pow(tc.dim[c]), binom(delta.faces()[tc.delta_face[c]].dim - tc.dim[c], p + 1)));
    return mul(sign_pow(p), s);
}

Int ep_S_counting(const LatticePolytope& delta, int p) {
    Int s = mul(sign_pow(p), face_term(delta, p));
    for (std::size_t f = 0; f < delta.faces().size(); ++f) {
        const int dw = delta.faces()[f].dim;
        s = sub(s, mul(sign_pow(dw), ell_star_phi_direct(delta, static_cast<int>(f), dw - p)));
    }
    return s;
}

UpperPair hpq_upper_S(const LatticePolytope& delta, const TriangulationCells& tc, int p) {
    const int d = delta.dim() - 1;
    if (2 * p <= d) throw std::invalid_argument("hpq_upper_S: requires 2p > d");
    UpperPair r;
    r.h_pp = mul(sign_pow(p), face_term(delta, p));
    for (std::size_t c = 0; c < tc.cells.size(); ++c)
        r.h_p_dminus_p = add(r.h_p_dminus_p, mul(sign_pow(d - p + tc.dim[c]),
                                                 binom(delta.faces()[tc.delta_face[c]].dim - tc.dim[c], p + 1)));
    return r;
}

HodgeTable hodge_diamond_S(const PolytopeAnalysis& a, const Triangulation& t) {
    const int d = a.d;
    if (d < 1) throw std::invalid_argument("hodge_diamond_S: requires dim S >= 1");
    TriangulationCells tc = triangulation_cells(a.delta, t);
    HodgeTable h = empty_table(d);
    for (int p = 0; p <= d; ++p) {
        if (2 * p <= d) continue;
        UpperPair u = hpq_upper_S(a.delta, tc, p);
        h.entries[p][p] = u.h_pp;
        h.provenance[p][p] = "dk-diagonal";
        h.entries[p][d - p] = u.h_p_dminus_p;
        h.provenance[p][d - p] = "dk-antidiagonal";
        h.entries[d - p][d - p] = u.h_pp;
        h.provenance[d - p][d - p] = "poincare-duality";
        h.entries[d - p][p] = u.h_p_dminus_p;
        h.provenance[d - p][p] = "poincare-duality";
    }
    if (d % 2 == 0) {
        h.entries[d / 2][d / 2] = ep_S(a.delta, tc, d / 2);
        h.provenance[d / 2][d / 2] = "derived-middle";
    }
    std::string err = check_table(h, true);
    if (!err.empty()) throw std::logic_error("hodge_diamond_S: " + err);
    return h;
}

}  // namespace lgm
