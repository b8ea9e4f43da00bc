#include "lgmirror/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lgm {

namespace {

using nlohmann::json;

Vec point_of(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array of integers");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(what + ": non-integral coordinate " + x.dump());
        v.push_back(x.get<Int>());
    }
    return v;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<Vec>> triangulation_cells_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("triangulation: expected an array of cells");
    std::vector<std::vector<Vec>> cells;
    for (const auto& c : j) {
        if (!c.is_array()) throw ParseError("triangulation: each cell must be an array of points");
        std::vector<Vec> cell;
        for (const auto& p : c) cell.push_back(point_of(p, "triangulation"));
        cells.push_back(cell);
    }
    return cells;
}

InputDocument parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("missing integer field \"dim\"");
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("missing array field \"vertices\"");
    InputDocument doc;
    doc.dim = j["dim"].get<int>();
    if (doc.dim < 1) throw ParseError("dim must be positive");
    for (const auto& v : j["vertices"]) {
        Vec p = point_of(v, "vertices");
        if (static_cast<int>(p.size()) != doc.dim)
            throw ParseError("vertex " + to_string(p) + " has " + std::to_string(p.size()) + " coordinates, expected " +
                             std::to_string(doc.dim));
        doc.vertices.push_back(p);
    }
    if (doc.vertices.empty()) throw ParseError("no vertices");
    if (j.contains("triangulation") && !j["triangulation"].is_null()) {
        doc.triangulation = triangulation_cells_from_json(j["triangulation"]);
        for (const auto& c : *doc.triangulation)
            for (const auto& p : c)
                if (static_cast<int>(p.size()) != doc.dim)
                    throw ParseError("triangulation point " + to_string(p) + " has the wrong dimension");
    }
    return doc;
}

InputDocument parse_input_file(const std::string& path) { return parse_input(read_file(path)); }

LatticePolytope polytope_of(const InputDocument& doc) {
    LatticePolytope p = LatticePolytope::hull(doc.vertices);
    if (!p.full_dimensional())
        throw ParseError("polytope has dimension " + std::to_string(p.dim()) + " in ambient dimension " +
                         std::to_string(doc.dim) + "; a full-dimensional polytope is required");
    return p;
}

InputDocument builtin(const std::string& spec) {
    std::istringstream is(spec);
    std::string name, tok;
    is >> name;
    std::map<std::string, Int> args;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("builtin: expected key=value, got " + tok);
        try {
            args[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("builtin: bad integer in " + tok);
        }
    }
    auto need = [&](const std::string& k, Int lo) {
        if (!args.count(k)) throw ParseError("builtin " + name + ": missing " + k + "=");
        if (args[k] < lo) throw ParseError("builtin " + name + ": " + k + " must be at least " + std::to_string(lo));
        return args[k];
    };
    InputDocument doc;
    if (name == "rectangle") {
        Int g = need("g", 0);
        doc.dim = 2;
        doc.vertices = {{0, 0}, {g + 1, 0}, {0, 2}, {g + 1, 2}};
    } else if (name == "dilated-simplex") {
        Int d = need("dim", 1), k = need("k", 1);
        doc.dim = static_cast<int>(d);
        doc.vertices.push_back(Vec(d, 0));
        for (Int i = 0; i < d; ++i) {
            Vec v(d, 0);
            v[i] = k;
            doc.vertices.push_back(v);
        }
    } else if (name == "square") {
        Int n = need("n", 1);
        doc.dim = 2;
        doc.vertices = {{0, 0}, {n, 0}, {0, n}, {n, n}};
    } else {
        throw ParseError("unknown builtin \"" + name + "\" (rectangle, dilated-simplex, square)");
    }
    return doc;
}

nlohmann::json document_json(const InputDocument& doc) {
    json j;
    j["dim"] = doc.dim;
    j["vertices"] = doc.vertices;
    if (doc.triangulation) j["triangulation"] = *doc.triangulation;
    return j;
}

nlohmann::json triangulation_json(const Triangulation& t) {
    json j;
    j["dim"] = t.dim;
    j["simplices"] = t.simplices;
    j["certificate"] = t.certificate;
    j["determinants"] = t.determinants;
    if (!t.order.empty()) j["order"] = t.order;
    return j;
}

nlohmann::json table_json(const HodgeTable& t) {
    json entries = json::array();
    for (int p = 0; p <= t.d; ++p)
        for (int q = 0; q <= t.d; ++q) entries.push_back({p, q, t.at(p, q), t.provenance[p][q]});
    return {{"d", t.d}, {"entries", entries}};
}

}  // namespace lgm
