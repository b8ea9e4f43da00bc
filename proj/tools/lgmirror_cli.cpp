// Command-line front end for the Hodge-number computations.
//
//   lgmirror verify --builtin "rectangle g=2"
//   lgmirror hodge-s --input quintic.json --format json
//
// Exit codes: 0 ok, 1 parse error, 2 unsupported input, 3 triangulation
// failure, 4 verification failure.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lgmirror/hodge_mirror.hpp"
#include "lgmirror/io.hpp"

using namespace lgm;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kParse = 1, kUnsupported = 2, kTriangulation = 3, kVerify = 4;

struct ExitError : std::runtime_error {
    ExitError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
    int code;
};

struct Options {
    std::string input, builtin, triangulation, format = "table", order = "lex", second_order, out;
    bool with_triangulation = false;
};

struct Job {
    InputDocument doc;
    PolytopeAnalysis a;
    Triangulation t;
    std::string source;  // "pulling" or "user"
};

PullingOrder order_from(const std::string& s) {
    if (s.rfind("file:", 0) == 0) {
        PullingOrder o;
        o.kind = PullingOrder::Kind::Explicit;
        try {
            json j = json::parse(read_file(s.substr(5)));
            for (const auto& p : j) o.points.push_back(p.get<Vec>());
        } catch (const json::exception& e) {
            throw ExitError(kParse, std::string("bad order file: ") + e.what());
        }
        return o;
    }
    try {
        return PullingOrder::parse(s);
    } catch (const std::invalid_argument& e) {
        throw ExitError(kParse, e.what());
    }
}

Triangulation triangulate(const PolytopeAnalysis& a, const std::string& order) {
    try {
        return standard_triangulation(a, order_from(order));
    } catch (const TriangulationError& e) {
        throw ExitError(kTriangulation, e.what());
    } catch (const std::invalid_argument& e) {
        throw ExitError(kParse, e.what());
    }
}

Job load(const Options& o) {
    Job job;
    if (o.input.empty() == o.builtin.empty()) throw ExitError(kParse, "give exactly one of --input or --builtin");
    try {
        job.doc = o.input.empty() ? builtin(o.builtin) : parse_input_file(o.input);
        LatticePolytope delta = polytope_of(job.doc);
        job.a = delta_prime_and_kodaira(delta);
    } catch (const ParseError& e) {
        throw ExitError(kParse, e.what());
    } catch (const NonSmoothError& e) {
        throw ExitError(kUnsupported, e.what());
    }
    std::optional<std::vector<std::vector<Vec>>> cells = job.doc.triangulation;
    if (!o.triangulation.empty()) {
        try {
            json j = json::parse(read_file(o.triangulation));
            cells = triangulation_cells_from_json(j.is_object() ? j.at("triangulation") : j);
        } catch (const json::exception& e) {
            throw ExitError(kParse, std::string("bad triangulation file: ") + e.what());
        } catch (const ParseError& e) {
            throw ExitError(kParse, e.what());
        }
    }
    if (!cells) {
        job.t = triangulate(job.a, o.order);
        job.source = "pulling";
        return job;
    }
    try {
        job.t = make_triangulation(job.a.delta, *cells);
    } catch (const TriangulationError& e) {
        std::string msg = std::string("invalid triangulation: ") + e.what();
        if (!e.simplex.empty()) msg += " (witness determinant " + std::to_string(e.det) + ")";
        throw ExitError(kTriangulation, msg);
    }
    job.source = "user";
    if (job.a.delta_prime) {
        StarLikeReport r = is_star_like(job.t, pstar(job.a));
        if (!r.star_like) throw ExitError(kTriangulation, "triangulation is not star-like: " + r.diagnostic);
        job.t.certificate = "lp";
    }
    return job;
}

std::string table_text(const std::string& title, const HodgeTable& h) {
    std::ostringstream os;
    os << title << " (d=" << h.d << ")\n  p\\q";
    for (int q = 0; q <= h.d; ++q) os << std::setw(6) << q;
    os << "\n";
    for (int p = 0; p <= h.d; ++p) {
        os << "  " << std::setw(3) << p;
        for (int q = 0; q <= h.d; ++q) os << std::setw(6) << h.at(p, q);
        os << "\n";
    }
    os << "  provenance:";
    for (int p = 0; p <= h.d; ++p)
        for (int q = 0; q <= h.d; ++q)
            if (h.provenance[p][q] != "vanishing") os << " (" << p << "," << q << ")=" << h.provenance[p][q];
    os << "\n";
    return os.str();
}

json triangulation_info(const Job& job) {
    json j = triangulation_json(job.t);
    j["source"] = job.source;
    j["simplex_count"] = job.t.simplices.size();
    return j;
}

json dual_complex_json(const DualIntersectionComplex& g) {
    json simplices = json::array();
    for (const auto& s : g.simplices)
        simplices.push_back({{"vertices", s.vertices}, {"u", s.has_u}, {"copy", s.copy}, {"dim", s.dim()}});
    json j = {{"vertices", g.vertices},
              {"simplices", simplices},
              {"topology", g.topology},
              {"topology_dim", g.topology_dim},
              {"case", g.case_number},
              {"euler_characteristic", g.euler_characteristic}};
    if (g.components) {
        j["components"] = *g.components;
        j["graph_genus"] = *g.graph_genus;
    }
    return j;
}

MirrorContext mirror_context(const Job& job) {
    try {
        return make_mirror_context(job.a, job.t);
    } catch (const UnsupportedError& e) {
        throw ExitError(kUnsupported, e.what());
    }
}

struct Output {
    json doc = json::object();
    std::ostringstream text;
    int status = kOk;
    bool document = false;  // an input document: always plain JSON
};

void cmd_analyze(const Job& job, Output& out) {
    const auto& a = job.a;
    ReflexivityReport r = reflexivity_and_minkowski_check(a);
    json an = {{"dim", a.delta.dim()},
               {"d", a.d},
               {"vertices", a.delta.vertices()},
               {"lattice_points", a.lattice_points.size()},
               {"interior_points", a.interior_points.size()},
               {"delta_prime_dim", a.delta_prime ? json(a.delta_prime->dim()) : json(nullptr)},
               {"smooth", a.smooth},
               {"newton_identity", a.newton_identity_holds},
               {"reflexive", r.reflexive},
               {"nef_anticanonical", r.nef_anticanonical},
               {"phi_prime_convex", r.phi_prime_convex},
               {"minkowski", r.minkowski_checked ? json(r.minkowski_holds) : json(nullptr)}};
    out.doc["kodaira"] = kodaira_string(a.kodaira);
    out.doc["analysis"] = an;
    out.doc["triangulation"] = triangulation_info(job);
    out.text << "dim Delta = " << a.delta.dim() << ", dim S = " << a.d << "\n"
             << "lattice points = " << a.lattice_points.size() << ", interior = " << a.interior_points.size() << "\n"
             << "dim Delta' = " << (a.delta_prime ? std::to_string(a.delta_prime->dim()) : "empty") << "\n"
             << "Kodaira dimension = " << kodaira_string(a.kodaira) << "\n"
             << "reflexive = " << (r.reflexive ? "yes" : "no") << ", nef anticanonical = "
             << (r.nef_anticanonical ? "yes" : "no") << "\n"
             << "triangulation: " << job.t.simplices.size() << " simplices (" << job.source << ", certificate "
             << job.t.certificate << ")\n";
    if (a.delta_prime) {
        PStar ps = pstar(a);
        MirrorData md = build_mirror_data(a, ps);
        ProjectionMaps pm = p_maps(a, ps);
        json mj = {{"pstar_cells", ps.complex.cells.size()},
                   {"pstar_maximal", ps.complex.maximal.size()},
                   {"newton", md.newton_ok},
                   {"face_duality", md.duality_ok},
                   {"dual_polytope_vertices", md.delta_check.vertices()},
                   {"dual_polytope_dim_ok", md.dim_delta_check_0_ok},
                   {"projection_consistent", pm.consistent},
                   {"projection_bijective", pm.p1_bijective}};
        out.doc["mirror_data"] = mj;
        out.text << "P_*: " << ps.complex.maximal.size() << " maximal cells, " << ps.complex.cells.size()
                 << " cells\n"
                 << "dual polyhedron duality = " << (md.duality_ok ? "ok" : "FAILED") << ", dual polytope has "
                 << md.delta_check.vertices().size() << " vertices\n";
    }
}

void cmd_hodge_s(const Job& job, Output& out) {
    HodgeTable h = hodge_diamond_S(job.a, job.t);
    out.doc["kodaira"] = kodaira_string(job.a.kodaira);
    out.doc["hodge_S"] = table_json(h);
    out.doc["triangulation"] = triangulation_info(job);
    out.text << table_text("hodge_S", h);
}

void cmd_hodge_mirror(const Job& job, Output& out) {
    MirrorContext ctx = mirror_context(job);
    HodgeTable h = mirror_hodge_table(ctx, ep_strata(ctx));
    out.doc["kodaira"] = kodaira_string(job.a.kodaira);
    out.doc["hodge_mirror"] = table_json(h);
    out.doc["triangulation"] = triangulation_info(job);
    out.text << table_text("hodge_mirror", h);
}

void cmd_verify(const Job& job, const Options& o, Output& out) {
    MirrorContext ctx = mirror_context(job);
    MainTheoremReport r = verify_main_theorem(ctx);
    DepthReport depth = stratum_depth_check(ctx);
    const int d = ctx.d;
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back({e.p, e.q, e.s, e.mirror, e.pass});
        out.text << (e.pass ? "PASS" : "FAIL") << " h^{" << e.p << "," << e.q << "}(S) = " << e.s << "  h^{" << d - e.p
                 << "," << e.q << "}(mirror) = " << e.mirror << "\n";
    }
    out.text << (r.euler_cross ? "PASS" : "FAIL") << " euler cross-check e^p(S) = (-1)^d e^{d-p}(mirror)\n";
    out.text << (depth.pass ? "PASS" : "FAIL") << " stratum depth " << depth.depth << " = kappa + 2 = " << depth.expected
             << "\n";
    json checks = {{"main_theorem", {{"pass", r.entries_pass}, {"entries", entries}}},
                   {"euler_cross", {{"pass", r.euler_cross}, {"e_S", r.ep_s}, {"e_mirror", r.ep_mirror}}},
                   {"depth", {{"pass", depth.pass}, {"depth", depth.depth}, {"expected", depth.expected}}}};
    bool ok = r.pass() && depth.pass;
    if (!o.second_order.empty()) {
        Triangulation t2 = triangulate(job.a, o.second_order);
        MirrorContext ctx2 = make_mirror_context(job.a, t2);
        HodgeTable h2 = mirror_hodge_table(ctx2, ep_strata(ctx2));
        bool same = h2 == r.hodge_mirror;
        bool distinct = !(t2 == job.t);
        checks["triangulation_independence"] = {{"pass", same}, {"distinct_triangulations", distinct},
                                                {"second_order", o.second_order}};
        out.text << (same ? "PASS" : "FAIL") << " triangulation independence against order " << o.second_order
                 << (distinct ? "" : " (triangulations coincide)") << "\n";
        ok = ok && same;
    }
    out.text << "OVERALL " << (ok ? "PASS" : "FAIL") << "\n";
    out.doc["kodaira"] = kodaira_string(job.a.kodaira);
    out.doc["hodge_S"] = table_json(r.hodge_s);
    out.doc["hodge_mirror"] = table_json(r.hodge_mirror);
    out.doc["checks"] = checks;
    out.doc["triangulation"] = triangulation_info(job);
    if (!ok) out.status = kVerify;
}

void cmd_dual_complex(const Job& job, Output& out) {
    if (!job.a.delta_prime) throw ExitError(kUnsupported, "dual complex unsupported: Delta has no interior lattice point");
    DualIntersectionComplex g = dual_intersection_complex(job.a, job.t);
    out.doc["kodaira"] = kodaira_string(job.a.kodaira);
    out.doc["dual_complex"] = dual_complex_json(g);
    out.doc["triangulation"] = triangulation_info(job);
    std::map<int, int> by_dim;
    for (const auto& s : g.simplices) ++by_dim[s.dim()];
    out.text << "dual intersection complex: " << g.topology << " of dimension " << g.topology_dim << " (case "
             << g.case_number << ")\n  simplices by dimension:";
    for (const auto& [k, n] : by_dim) out.text << " " << k << ":" << n;
    out.text << "\n  euler characteristic = " << g.euler_characteristic << "\n";
}

void cmd_curve_check(const Job& job, Output& out) {
    MirrorContext ctx = mirror_context(job);
    CurveReport r;
    try {
        r = curve_hh_check(ctx);
    } catch (const std::invalid_argument& e) {
        throw ExitError(kUnsupported, e.what());
    }
    json j = {{"genus", r.g},
              {"components", r.components},
              {"graph_genus", r.graph_genus},
              {"HH", {r.hh0, r.hh1, r.hh2}},
              {"H", {1, r.graph_genus, r.components}},
              {"pass", r.pass}};
    if (r.pick_applies)
        j["pick"] = {{"area2", r.area2}, {"interior", r.interior}, {"boundary", r.boundary},
                     {"edges", r.edges}, {"triangles", r.triangles}, {"pass", r.pick_ok}};
    out.doc["kodaira"] = kodaira_string(job.a.kodaira);
    out.doc["checks"] = {{"curve", j}};
    out.doc["triangulation"] = triangulation_info(job);
    out.text << "genus g = " << r.g << "\n"
             << "HH^0 = " << r.hh0 << ", HH^1 = " << r.hh1 << ", HH^2 = " << r.hh2 << "\n"
             << "H^0 = 1, H^1 = " << r.graph_genus << " (graph genus), H^2 = " << r.components << " (components)\n";
    if (r.pick_applies) out.text << "Pick chain " << (r.pick_ok ? "holds" : "FAILS") << "\n";
    out.text << (r.pass ? "PASS" : "FAIL") << " curve check\n";
    if (!r.pass) out.status = kVerify;
}

void cmd_gen(const Options& o, Output& out) {
    if (o.builtin.empty()) throw ExitError(kParse, "gen requires --builtin");
    InputDocument doc;
    try {
        doc = builtin(o.builtin);
    } catch (const ParseError& e) {
        throw ExitError(kParse, e.what());
    }
    if (o.with_triangulation) {
        PolytopeAnalysis a;
        try {
            a = delta_prime_and_kodaira(polytope_of(doc));
        } catch (const NonSmoothError& e) {
            throw ExitError(kUnsupported, e.what());
        }
        doc.triangulation = triangulate(a, o.order).simplices;
    }
    out.doc = document_json(doc);
    out.document = true;
}

void emit(const Output& out, const Options& o) {
    std::string s = o.format == "json" || out.document ? out.doc.dump(2) + "\n" : "# lgmirror 1.0\n" + out.text.str();
    if (o.out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ExitError(kParse, "cannot write " + o.out);
    f << s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge numbers of toric hypersurfaces and of their Landau-Ginzburg mirrors"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"analyze", "Kodaira dimension, Delta', reflexivity and triangulation summary"},
        {"hodge-s", "Hodge diamond of the hypersurface S"},
        {"hodge-mirror", "Hodge table of the mirror vanishing-cycle sheaf"},
        {"verify", "check h^{p,q}(S) = h^{d-p,q}(mirror) and the Euler cross-check"},
        {"dual-complex", "dual intersection complex of the central fibre"},
        {"curve-check", "Hochschild and cohomology counts for curves of genus >= 2"},
        {"gen", "print the input document of a builtin polytope"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input", o.input, "input JSON document");
        sub->add_option("--builtin", o.builtin, "builtin polytope, e.g. \"rectangle g=2\"");
        sub->add_option("--triangulation", o.triangulation, "triangulation JSON (cells as lattice points)");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--order", o.order, "pulling order: lex | revlex | random:SEED | file:PATH");
        sub->add_option("--out", o.out, "write output to this file");
        if (name == "verify")
            sub->add_option("--second-order", o.second_order, "also compare against a second pulling order");
        if (name == "gen") sub->add_flag("--with-triangulation", o.with_triangulation, "include a triangulation");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    Output out;
    try {
        if (cmd == "gen") {
            cmd_gen(o, out);
        } else {
            Job job = load(o);
            if (cmd == "analyze") cmd_analyze(job, out);
            else if (cmd == "hodge-s") cmd_hodge_s(job, out);
            else if (cmd == "hodge-mirror") cmd_hodge_mirror(job, out);
            else if (cmd == "verify") cmd_verify(job, o, out);
            else if (cmd == "dual-complex") cmd_dual_complex(job, out);
            else if (cmd == "curve-check") cmd_curve_check(job, out);
        }
        emit(out, o);
        return out.status;
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerify;
    }
}
