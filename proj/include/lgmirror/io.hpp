// JSON input documents, built-in example polytopes and structured output.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgmirror/hodge_dk.hpp"
#include "lgmirror/subdivision.hpp"

namespace lgm {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"dim": D, "vertices": [[...], ...], "triangulation": [[[pt], ...], ...]}
struct InputDocument {
    int dim = 0;
    std::vector<Vec> vertices;
    std::optional<std::vector<std::vector<Vec>>> triangulation;  // cells as lattice points
};

// Throws ParseError on malformed documents.
InputDocument parse_input(const std::string& text);
InputDocument parse_input_file(const std::string& path);
// Throws ParseError unless the vertices span a full-dimensional polytope.
LatticePolytope polytope_of(const InputDocument& doc);

// "rectangle g=G" (the 2 x (G+1) rectangle), "dilated-simplex dim=D k=K",
// "square n=N". Throws ParseError on an unknown generator.
InputDocument builtin(const std::string& spec);

nlohmann::json document_json(const InputDocument& doc);
nlohmann::json triangulation_json(const Triangulation& t);
// Cells of a triangulation from the "triangulation" array of a document.
std::vector<std::vector<Vec>> triangulation_cells_from_json(const nlohmann::json& j);
// Entries as [p, q, value, provenance].
nlohmann::json table_json(const HodgeTable& t);

// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace lgm
