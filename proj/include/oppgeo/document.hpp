#pragma once

#include <string>
#include <variant>

#include "oppgeo/diagram.hpp"
#include "oppgeo/nelson.hpp"

namespace oppgeo {

// A loaded diagram file holds one diagram of either kind.
using DiagramDocument = std::variant<OppositionDiagram, NelsonDiagram>;

// Parses schema v1 document text:
//
//   {
//     "v": 1,
//     "kind": "opposition" | "nelson",
//     "atoms": ["D", "V"],            sorted, unique identifiers
//     "constraint": "!(D & V)",
//     "vertices": [{"id", "label", "formula", "role"?}, ...],
//     "edges":  [{"src", "dst", "relation"}, ...]   (opposition)
//     "arrows": [{"src", "dst"}, ...]               (nelson)
//   }
//
// "role" is required for nelson vertices and rejected elsewhere; relation
// and role values use the names emitted by edge_kind_name and role_name.
// The schema is strict: unknown keys are rejected, formula atoms must be
// declared, edge endpoints must exist. Violations raise SchemaError with a
// JSON-pointer-style path; a vertex formula that fails to parse raises
// FormulaSyntaxError carrying the vertex id.
DiagramDocument parse_document(const std::string& text);

// Reads and parses a document file. Throws DocumentIoError when the file
// cannot be read, otherwise as parse_document.
DiagramDocument load_document(const std::string& path);

// Serializes with fixed key order, two-space indentation, and a trailing
// newline. Formulas are written in canonical text form, so a canonically
// written file round-trips byte-exactly through load and save.
std::string serialize_document(const OppositionDiagram& d);
std::string serialize_document(const NelsonDiagram& n);
std::string serialize_document(const DiagramDocument& doc);

// Writes serialize_document output; DocumentIoError on failure.
void save_document(const DiagramDocument& doc, const std::string& path);

}  // namespace oppgeo
