#include "oppgeo/document.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "oppgeo/errors.hpp"

namespace oppgeo {

namespace {

using nlohmann::ordered_json;

std::string item_path(const char* array, std::size_t i, const char* field = nullptr) {
  std::string p = std::string("/") + array + "/" + std::to_string(i);
  if (field) p += std::string("/") + field;
  return p;
}

const ordered_json& require_field(const ordered_json& obj, const char* key,
                                  const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path + "/" + key, "missing key");
  }
  return *it;
}

std::string require_string(const ordered_json& obj, const char* key,
                           const std::string& path) {
  const ordered_json& v = require_field(obj, key, path);
  if (!v.is_string()) {
    throw SchemaError(path + "/" + key, "expected a string");
  }
  return v.get<std::string>();
}

void reject_unknown_keys(const ordered_json& obj, const std::set<std::string>& known,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) {
      throw SchemaError(path + "/" + it.key(), "unknown key");
    }
  }
}

bool valid_atom_name(const std::string& s) {
  if (s.empty() || s == "true" || s == "false") return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

AtomUniverse parse_atoms(const ordered_json& doc) {
  const ordered_json& arr = require_field(doc, "atoms", "");
  if (!arr.is_array()) throw SchemaError("/atoms", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      throw SchemaError(item_path("atoms", i), "expected a string");
    }
    std::string name = arr[i].get<std::string>();
    if (!valid_atom_name(name)) {
      throw SchemaError(item_path("atoms", i), "'" + name + "' is not a valid atom name");
    }
    if (!names.empty() && name <= names.back()) {
      throw SchemaError(item_path("atoms", i),
                        "atoms must be sorted and unique, '" + name + "' is out of order");
    }
    names.push_back(std::move(name));
  }
  return AtomUniverse(names);
}

void require_known_atoms(const Formula& f, const AtomUniverse& u, const std::string& path) {
  for (const std::string& atom : f.atoms()) {
    if (!u.contains(atom)) {
      throw SchemaError(path, "uses undeclared atom '" + atom + "'");
    }
  }
}

Formula parse_constraint(const ordered_json& doc, const AtomUniverse& u) {
  std::string text = require_string(doc, "constraint", "");
  Formula f = Formula::top();
  try {
    f = parse_formula(text);
  } catch (const SyntaxError& e) {
    throw SchemaError("/constraint", std::string("formula does not parse: ") + e.what());
  }
  require_known_atoms(f, u, "/constraint");
  return f;
}

struct RawVertex {
  std::string id;
  std::string label;
  Formula formula = Formula::top();
  std::optional<Role> role;
};

std::vector<RawVertex> parse_vertices(const ordered_json& doc, const AtomUniverse& u,
                                      bool nelson) {
  const ordered_json& arr = require_field(doc, "vertices", "");
  if (!arr.is_array()) throw SchemaError("/vertices", "expected an array");
  if (arr.empty()) throw SchemaError("/vertices", "expected at least one vertex");

  std::vector<RawVertex> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = item_path("vertices", i);
    const ordered_json& v = arr[i];
    if (!v.is_object()) throw SchemaError(path, "expected an object");
    std::set<std::string> known = {"id", "label", "formula"};
    if (nelson) known.insert("role");
    reject_unknown_keys(v, known, path);

    RawVertex raw;
    raw.id = require_string(v, "id", path);
    if (raw.id.empty()) throw SchemaError(path + "/id", "expected a nonempty id");
    if (!seen.insert(raw.id).second) {
      throw SchemaError(path + "/id", "duplicate vertex id '" + raw.id + "'");
    }
    raw.label = require_string(v, "label", path);

    std::string formulaText = require_string(v, "formula", path);
    try {
      raw.formula = parse_formula(formulaText);
    } catch (const SyntaxError& e) {
      throw FormulaSyntaxError(raw.id, e.what());
    }
    require_known_atoms(raw.formula, u, path + "/formula");

    if (nelson) {
      std::string roleName = require_string(v, "role", path);
      if (roleName == role_name(Role::SharedDisjunctivePremiss)) {
        raw.role = Role::SharedDisjunctivePremiss;
      } else if (roleName == role_name(Role::FactualPremiss)) {
        raw.role = Role::FactualPremiss;
      } else if (roleName == role_name(Role::FalseConsequence)) {
        raw.role = Role::FalseConsequence;
      } else if (roleName == role_name(Role::CorrectConclusion)) {
        raw.role = Role::CorrectConclusion;
      } else {
        throw SchemaError(path + "/role", "unknown role '" + roleName + "'");
      }
    }
    out.push_back(std::move(raw));
  }
  return out;
}

const RawVertex& endpoint(const std::vector<RawVertex>& vs, const std::string& id,
                          const std::string& path) {
  for (const RawVertex& v : vs) {
    if (v.id == id) return v;
  }
  throw SchemaError(path, "unknown vertex id '" + id + "'");
}

OppositionDiagram parse_opposition(const ordered_json& doc, AtomUniverse u,
                                   Formula constraint, std::vector<RawVertex> raw) {
  const ordered_json& arr = require_field(doc, "edges", "");
  if (!arr.is_array()) throw SchemaError("/edges", "expected an array");

  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = item_path("edges", i);
    const ordered_json& e = arr[i];
    if (!e.is_object()) throw SchemaError(path, "expected an object");
    reject_unknown_keys(e, {"src", "dst", "relation"}, path);

    DiagramEdge edge{"", "", EdgeKind::Contradictory};
    edge.src = require_string(e, "src", path);
    edge.dst = require_string(e, "dst", path);
    endpoint(raw, edge.src, path + "/src");
    endpoint(raw, edge.dst, path + "/dst");
    if (edge.src == edge.dst) {
      throw SchemaError(path, "edge endpoints must differ");
    }

    std::string rel = require_string(e, "relation", path);
    if (rel == edge_kind_name(EdgeKind::Contradictory)) {
      edge.kind = EdgeKind::Contradictory;
    } else if (rel == edge_kind_name(EdgeKind::Contrary)) {
      edge.kind = EdgeKind::Contrary;
    } else if (rel == edge_kind_name(EdgeKind::Subcontrary)) {
      edge.kind = EdgeKind::Subcontrary;
    } else if (rel == edge_kind_name(EdgeKind::Subalternation)) {
      edge.kind = EdgeKind::Subalternation;
    } else {
      throw SchemaError(path + "/relation", "unknown relation '" + rel + "'");
    }
    edges.push_back(std::move(edge));
  }

  std::vector<DiagramVertex> vertices;
  for (RawVertex& v : raw) {
    vertices.push_back({std::move(v.id), std::move(v.label), std::move(v.formula)});
  }
  return OppositionDiagram(std::move(u), std::move(constraint), std::move(vertices),
                           std::move(edges));
}

NelsonDiagram parse_nelson(const ordered_json& doc, AtomUniverse u, Formula constraint,
                           std::vector<RawVertex> raw) {
  const ordered_json& arr = require_field(doc, "arrows", "");
  if (!arr.is_array()) throw SchemaError("/arrows", "expected an array");

  // The shape rules the diagram constructor enforces are checked here first
  // so violations report a document location.
  std::size_t shared = 0, conclusions = 0, premisses = 0, consequences = 0;
  for (const RawVertex& v : raw) {
    switch (*v.role) {
      case Role::SharedDisjunctivePremiss: ++shared; break;
      case Role::CorrectConclusion: ++conclusions; break;
      case Role::FactualPremiss: ++premisses; break;
      case Role::FalseConsequence: ++consequences; break;
    }
  }
  if (shared != 1) {
    throw SchemaError("/vertices", "expected exactly one shared_disjunctive_premiss, got " +
                                       std::to_string(shared));
  }
  if (conclusions != 1) {
    throw SchemaError("/vertices", "expected exactly one correct_conclusion, got " +
                                       std::to_string(conclusions));
  }
  if (consequences == 0) {
    throw SchemaError("/vertices", "expected at least one false_consequence");
  }
  if (premisses != consequences && premisses + 1 != consequences) {
    throw SchemaError("/vertices",
                      "expected " + std::to_string(consequences) + " or " +
                          std::to_string(consequences - 1) + " factual_premiss vertices, got " +
                          std::to_string(premisses));
  }

  std::vector<NelsonArrow> arrows;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = item_path("arrows", i);
    const ordered_json& a = arr[i];
    if (!a.is_object()) throw SchemaError(path, "expected an object");
    reject_unknown_keys(a, {"src", "dst"}, path);

    NelsonArrow arrow;
    arrow.src = require_string(a, "src", path);
    arrow.dst = require_string(a, "dst", path);
    const RawVertex& src = endpoint(raw, arrow.src, path + "/src");
    const RawVertex& dst = endpoint(raw, arrow.dst, path + "/dst");
    if (*src.role != Role::SharedDisjunctivePremiss && *src.role != Role::FactualPremiss) {
      throw SchemaError(path + "/src", "arrow source must have a premiss role");
    }
    if (*dst.role != Role::FalseConsequence && *dst.role != Role::CorrectConclusion) {
      throw SchemaError(path + "/dst", "arrow target must have a consequence role");
    }
    arrows.push_back(std::move(arrow));
  }

  std::vector<NelsonVertex> vertices;
  for (RawVertex& v : raw) {
    vertices.push_back({std::move(v.id), std::move(v.label), std::move(v.formula), *v.role});
  }
  return NelsonDiagram(std::move(u), std::move(constraint), std::move(vertices),
                       std::move(arrows));
}

}  // namespace

DiagramDocument parse_document(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "expected an object");

  const ordered_json& v = require_field(doc, "v", "");
  if (!v.is_number_integer() || v.get<int>() != 1) {
    throw SchemaError("/v", "unsupported schema version");
  }
  std::string kind = require_string(doc, "kind", "");
  if (kind != "opposition" && kind != "nelson") {
    throw SchemaError("/kind", "expected \"opposition\" or \"nelson\"");
  }
  const bool nelson = kind == "nelson";
  reject_unknown_keys(
      doc, {"v", "kind", "atoms", "constraint", "vertices", nelson ? "arrows" : "edges"}, "");

  AtomUniverse universe = parse_atoms(doc);
  Formula constraint = parse_constraint(doc, universe);
  std::vector<RawVertex> raw = parse_vertices(doc, universe, nelson);

  if (nelson) {
    return parse_nelson(doc, std::move(universe), std::move(constraint), std::move(raw));
  }
  return parse_opposition(doc, std::move(universe), std::move(constraint), std::move(raw));
}

DiagramDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentIoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DocumentIoError("cannot read '" + path + "'");
  return parse_document(buf.str());
}

namespace {

ordered_json document_head(const char* kind, const AtomUniverse& u, const Formula& constraint) {
  ordered_json j;
  j["v"] = 1;
  j["kind"] = kind;
  j["atoms"] = u.names();
  j["constraint"] = constraint.text();
  return j;
}

}  // namespace

std::string serialize_document(const OppositionDiagram& d) {
  ordered_json j = document_head("opposition", d.universe(), d.constraint());
  j["vertices"] = ordered_json::array();
  for (const DiagramVertex& v : d.vertices()) {
    j["vertices"].push_back(
        {{"id", v.id}, {"label", v.label}, {"formula", v.formula.text()}});
  }
  j["edges"] = ordered_json::array();
  for (const DiagramEdge& e : d.edges()) {
    j["edges"].push_back(
        {{"src", e.src}, {"dst", e.dst}, {"relation", edge_kind_name(e.kind)}});
  }
  return j.dump(2) + "\n";
}

std::string serialize_document(const NelsonDiagram& n) {
  ordered_json j = document_head("nelson", n.universe(), n.constraint());
  j["vertices"] = ordered_json::array();
  for (const NelsonVertex& v : n.vertices()) {
    j["vertices"].push_back({{"id", v.id},
                             {"label", v.label},
                             {"formula", v.formula.text()},
                             {"role", role_name(v.role)}});
  }
  j["arrows"] = ordered_json::array();
  for (const NelsonArrow& a : n.arrows()) {
    j["arrows"].push_back({{"src", a.src}, {"dst", a.dst}});
  }
  return j.dump(2) + "\n";
}

std::string serialize_document(const DiagramDocument& doc) {
  if (const auto* d = std::get_if<OppositionDiagram>(&doc)) return serialize_document(*d);
  return serialize_document(std::get<NelsonDiagram>(doc));
}

void save_document(const DiagramDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentIoError("cannot write '" + path + "'");
  out << serialize_document(doc);
  out.flush();
  if (!out) throw DocumentIoError("cannot write '" + path + "'");
}

}  // namespace oppgeo
