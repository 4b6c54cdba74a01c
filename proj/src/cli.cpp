#include "oppgeo/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <variant>

#include "oppgeo/classify.hpp"
#include "oppgeo/corpus.hpp"
#include "oppgeo/diagram.hpp"
#include "oppgeo/document.hpp"
#include "oppgeo/errors.hpp"
#include "oppgeo/nelson.hpp"
#include "oppgeo/render.hpp"

namespace oppgeo {

namespace {

using nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DocumentIoError("cannot write '" + path + "'");
  f << text;
  f.flush();
  if (!f) throw DocumentIoError("cannot write '" + path + "'");
}

std::string val_text(const Valuation& v) {
  std::string s = v.to_string();
  return s.empty() ? "{}" : s;
}

std::string witness_line(const std::optional<Valuation>& v) {
  return v ? val_text(*v) : "(none)";
}

ordered_json witness_json(const Valuation& v) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < v.universe().size(); ++i) {
    j[v.universe().names()[i]] = v.value_at(i);
  }
  return j;
}

std::string edge_line(const EdgeVerdict& v) {
  const char* conn = v.edge.kind == EdgeKind::Subalternation ? " -> " : " -- ";
  std::string line = "edge " + std::string(edge_kind_name(v.edge.kind)) + " " + v.edge.src +
                     conn + v.edge.dst + ": ";
  if (v.confirmed) return line + "confirmed";
  line += "refuted (actually " + std::string(relation_kind_name(v.actual));
  if (v.witness) line += "; witness " + val_text(*v.witness);
  return line + ")";
}

std::string missing_line(const MissingPair& m) {
  return "missing: " + m.first + " -- " + m.second + " (" +
         relation_kind_name(m.relation) + ")";
}

std::size_t finding_count(const VerificationReport& rep) {
  std::size_t n = rep.missingPairs.size();
  for (const EdgeVerdict& v : rep.perEdge) {
    if (!v.confirmed) ++n;
  }
  return n;
}

std::string verification_text(const VerificationReport& rep) {
  std::string text;
  for (const EdgeVerdict& v : rep.perEdge) text += edge_line(v) + "\n";
  for (const MissingPair& m : rep.missingPairs) text += missing_line(m) + "\n";
  text += "partition:";
  for (const auto& [kind, count] : rep.partitionCounts) {
    text += " " + std::string(pair_kind_name(kind)) + "=" + std::to_string(count);
  }
  text += "\nfindings: " + std::to_string(finding_count(rep)) + "\n";
  return text;
}

std::string verification_json(const VerificationReport& rep) {
  ordered_json j;
  j["kind"] = "verification";
  j["edges"] = ordered_json::array();
  for (const EdgeVerdict& v : rep.perEdge) {
    ordered_json e = {{"src", v.edge.src},
                      {"dst", v.edge.dst},
                      {"relation", edge_kind_name(v.edge.kind)},
                      {"confirmed", v.confirmed}};
    if (!v.confirmed) e["actual"] = relation_kind_name(v.actual);
    if (v.witness) e["witness"] = witness_json(*v.witness);
    j["edges"].push_back(std::move(e));
  }
  j["missingPairs"] = ordered_json::array();
  for (const MissingPair& m : rep.missingPairs) {
    j["missingPairs"].push_back(
        {{"first", m.first}, {"second", m.second}, {"relation", relation_kind_name(m.relation)}});
  }
  j["partition"] = ordered_json::object();
  for (const auto& [kind, count] : rep.partitionCounts) {
    j["partition"][pair_kind_name(kind)] = count;
  }
  j["findings"] = finding_count(rep);
  return j.dump(2) + "\n";
}

std::string inference_line(const InferenceCheck& c) {
  std::string line = "inference " + c.vertexId + " <-";
  for (const std::string& id : c.premissIds) line += " " + id;
  line += ": ";
  if (c.valid) return line + "valid";
  return line + "invalid (counterexample " + witness_line(c.counterexample) + ")";
}

std::size_t finding_count(const InferenceReport& rep) {
  std::size_t n = 0;
  for (const InferenceCheck& c : rep.perConclusion) {
    if (!c.valid) ++n;
  }
  return n;
}

std::string inference_text(const InferenceReport& rep) {
  std::string text;
  for (const InferenceCheck& c : rep.perConclusion) text += inference_line(c) + "\n";
  text += "findings: " + std::to_string(finding_count(rep)) + "\n";
  return text;
}

std::string inference_json(const InferenceReport& rep) {
  ordered_json j;
  j["kind"] = "inference";
  j["checks"] = ordered_json::array();
  for (const InferenceCheck& c : rep.perConclusion) {
    ordered_json e = {{"conclusion", c.vertexId}, {"premisses", c.premissIds}, {"valid", c.valid}};
    if (c.counterexample) e["counterexample"] = witness_json(*c.counterexample);
    j["checks"].push_back(std::move(e));
  }
  j["findings"] = finding_count(rep);
  return j.dump(2) + "\n";
}

const OppositionDiagram& as_opposition(const DiagramDocument& doc, const char* verb) {
  const auto* d = std::get_if<OppositionDiagram>(&doc);
  if (!d) throw Error(std::string(verb) + " requires an opposition document");
  return *d;
}

const NelsonDiagram& as_nelson(const DiagramDocument& doc, const char* verb) {
  const auto* n = std::get_if<NelsonDiagram>(&doc);
  if (!n) throw Error(std::string(verb) + " requires a nelson document");
  return *n;
}

// Shared verify/report logic for `corpus verify-all`: one summary line per
// fixture, findings indented underneath.
bool report_fixture(const CorpusFixture& fixture, std::ostream& out) {
  DiagramDocument doc = parse_document(fixture.document);
  if (const auto* d = std::get_if<OppositionDiagram>(&doc)) {
    VerificationReport rep = verify(*d);
    std::size_t findings = finding_count(rep);
    if (findings == 0) {
      out << fixture.name << ": ok (" << rep.perEdge.size() << " edges confirmed)\n";
      return true;
    }
    out << fixture.name << ": " << findings << " findings\n";
    for (const EdgeVerdict& v : rep.perEdge) {
      if (!v.confirmed) out << "  " << edge_line(v) << "\n";
    }
    for (const MissingPair& m : rep.missingPairs) out << "  " << missing_line(m) << "\n";
    DegeneracyReport deg = detect_degeneracies(*d);
    if (deg.collapsedOrder != d->vertices().size()) {
      out << "  collapses to " << deg.collapsedOrder << " of " << d->vertices().size()
          << " classes\n";
    }
    return false;
  }

  const NelsonDiagram& n = std::get<NelsonDiagram>(doc);
  InferenceReport rep = validate_inferences(n);
  std::size_t findings = finding_count(rep);
  if (findings == 0) {
    bool cube = n.vertices().size() == 8 && check_cube_isomorphism(n).has_value();
    out << fixture.name << ": ok (" << rep.perConclusion.size() << " inferences valid"
        << (cube ? ", cube" : "") << ")\n";
    return true;
  }
  out << fixture.name << ": " << findings << " findings\n";
  for (const InferenceCheck& c : rep.perConclusion) {
    if (!c.valid) out << "  " << inference_line(c) << "\n";
  }
  return false;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opposition diagrams: build, classify, twist, verify, render"};
  app.name("oppgeo");
  app.require_subcommand(1);

  int exitCode = 0;
  std::string aText, bText, pText, qText, rText;
  std::string constraintText = "true";
  std::string filePath, outputPath, formatName, fixtureName;
  bool noNegR = false, jsonMode = false;

  auto* parseCmd = app.add_subcommand("parse", "Echo a formula in canonical form");
  parseCmd->add_option("formula", aText, "Formula text")->required();
  parseCmd->callback([&] { out << parse_formula(aText).text() << "\n"; });

  auto* classifyCmd =
      app.add_subcommand("classify", "Classify the relation between two formulas");
  classifyCmd->add_option("a", aText, "First formula")->required();
  classifyCmd->add_option("b", bText, "Second formula")->required();
  classifyCmd->add_option("--constraint", constraintText, "Background constraint");
  classifyCmd->callback([&] {
    OppositionRelation rel =
        classify(parse_formula(aText), parse_formula(bText), parse_formula(constraintText));
    out << "relation: " << relation_kind_name(rel.kind) << "\n"
        << "both-true: " << witness_line(rel.bothTrue) << "\n"
        << "both-false: " << witness_line(rel.bothFalse) << "\n"
        << "first-only: " << witness_line(rel.firstOnly) << "\n"
        << "second-only: " << witness_line(rel.secondOnly) << "\n";
  });

  auto* hexagonCmd =
      app.add_subcommand("hexagon", "Build the hexagon of opposition over two disjuncts");
  hexagonCmd->add_option("p", pText, "First disjunct")->required();
  hexagonCmd->add_option("q", qText, "Second disjunct")->required();
  hexagonCmd->add_option("--constraint", constraintText, "Background constraint");
  hexagonCmd->add_option("-o,--output", outputPath, "Write the document here");
  hexagonCmd->callback([&] {
    OppositionDiagram d = build_opposition_structure(
        {parse_formula(pText), parse_formula(qText)}, parse_formula(constraintText));
    write_output(serialize_document(d), outputPath, out);
  });

  auto* cubeCmd =
      app.add_subcommand("cube", "Build the cube of opposition over three disjuncts");
  cubeCmd->add_option("p", pText, "First disjunct")->required();
  cubeCmd->add_option("q", qText, "Second disjunct")->required();
  cubeCmd->add_option("r", rText, "Third disjunct")->required();
  cubeCmd->add_option("--constraint", constraintText, "Background constraint");
  cubeCmd->add_option("-o,--output", outputPath, "Write the document here");
  cubeCmd->callback([&] {
    OppositionDiagram d = build_opposition_structure(
        {parse_formula(pText), parse_formula(qText), parse_formula(rText)},
        parse_formula(constraintText));
    write_output(serialize_document(d), outputPath, out);
  });

  auto* nelsonCmd =
      app.add_subcommand("nelson", "Build the Nelson argument diagram over 2 or 3 disjuncts");
  nelsonCmd->add_option("p", pText, "First disjunct")->required();
  nelsonCmd->add_option("q", qText, "Second disjunct")->required();
  nelsonCmd->add_option("r", rText, "Third disjunct");
  nelsonCmd->add_flag("--no-neg-r", noNegR,
                      "Omit the third negation vertex (seven-vertex form)");
  nelsonCmd->add_option("-o,--output", outputPath, "Write the document here");
  nelsonCmd->callback([&] {
    if (noNegR && rText.empty()) throw Error("--no-neg-r requires a third disjunct");
    std::vector<Formula> disjuncts = {parse_formula(pText), parse_formula(qText)};
    if (!rText.empty()) disjuncts.push_back(parse_formula(rText));
    NelsonDiagram n = build_nelson(disjuncts, Formula::top(), !noNegR);
    write_output(serialize_document(n), outputPath, out);
  });

  auto* untwistCmd =
      app.add_subcommand("untwist", "Turn a Nelson diagram into its opposition counterpart");
  untwistCmd->add_option("file", filePath, "Nelson document")->required();
  untwistCmd->add_option("-o,--output", outputPath, "Write the document here");
  untwistCmd->callback([&] {
    DiagramDocument doc = load_document(filePath);
    write_output(serialize_document(untwist(as_nelson(doc, "untwist"))), outputPath, out);
  });

  auto* twistCmd =
      app.add_subcommand("twist", "Turn a built opposition structure into a Nelson diagram");
  twistCmd->add_option("file", filePath, "Opposition document")->required();
  twistCmd->add_option("-o,--output", outputPath, "Write the document here");
  twistCmd->callback([&] {
    DiagramDocument doc = load_document(filePath);
    write_output(serialize_document(twist(as_opposition(doc, "twist"))), outputPath, out);
  });

  auto* verifyCmd =
      app.add_subcommand("verify", "Check a diagram's claimed edges or inferences");
  verifyCmd->add_option("file", filePath, "Diagram document")->required();
  verifyCmd->add_flag("--json", jsonMode, "Machine-readable report");
  verifyCmd->callback([&] {
    DiagramDocument doc = load_document(filePath);
    std::size_t findings = 0;
    if (const auto* d = std::get_if<OppositionDiagram>(&doc)) {
      VerificationReport rep = verify(*d);
      findings = finding_count(rep);
      out << (jsonMode ? verification_json(rep) : verification_text(rep));
    } else {
      InferenceReport rep = validate_inferences(std::get<NelsonDiagram>(doc));
      findings = finding_count(rep);
      out << (jsonMode ? inference_json(rep) : inference_text(rep));
    }
    if (findings > 0) exitCode = 1;
  });

  auto* degCmd = app.add_subcommand("degeneracies", "Report collapse and failed contrariety");
  degCmd->add_option("file", filePath, "Opposition document")->required();
  degCmd->callback([&] {
    DiagramDocument doc = load_document(filePath);
    const OppositionDiagram& d = as_opposition(doc, "degeneracies");
    DegeneracyReport rep = detect_degeneracies(d);
    for (const auto& [a, b] : rep.equivalentPairs) out << "equivalent: " << a << " == " << b << "\n";
    for (const std::string& id : rep.nonContingentVertices) out << "non-contingent: " << id << "\n";
    for (const FailedContrariety& f : rep.failedContrarieties) {
      out << "failed contrariety: " << f.first << " -- " << f.second << " (both true at "
          << val_text(f.bothTrue) << ")\n";
    }
    out << "collapsed order: " << rep.collapsedOrder << " of " << d.vertices().size() << "\n";
    if (!rep.clean(d.vertices().size())) exitCode = 1;
  });

  auto* collapseCmd =
      app.add_subcommand("collapse", "Quotient a diagram by vertex equivalence");
  collapseCmd->add_option("file", filePath, "Opposition document")->required();
  collapseCmd->add_option("-o,--output", outputPath, "Write the document here");
  collapseCmd->callback([&] {
    DiagramDocument doc = load_document(filePath);
    write_output(serialize_document(collapse(as_opposition(doc, "collapse"))), outputPath, out);
  });

  auto* renderCmd = app.add_subcommand("render", "Render a diagram as DOT, TikZ, or SVG");
  renderCmd->add_option("file", filePath, "Diagram document")->required();
  renderCmd->add_option("--format", formatName, "dot, tikz, or svg")->required();
  renderCmd->add_option("-o,--output", outputPath, "Write the rendering here");
  renderCmd->callback([&] {
    DiagramDocument doc = load_document(filePath);
    RenderOptions opts;
    opts.format = parse_render_format(formatName);
    std::string text =
        std::visit([&](const auto& d) { return render_diagram(d, opts); }, doc);
    write_output(text, outputPath, out);
  });

  auto* corpusCmd = app.add_subcommand("corpus", "Operate on the shipped example corpus");
  corpusCmd->require_subcommand(1);
  auto* corpusList = corpusCmd->add_subcommand("list", "List fixture names");
  corpusList->callback([&] {
    for (const std::string& name : corpus_names()) out << name << "\n";
  });
  auto* corpusShow = corpusCmd->add_subcommand("show", "Print a fixture document");
  corpusShow->add_option("name", fixtureName, "Fixture name")->required();
  corpusShow->callback([&] { out << corpus_fixture(fixtureName).document; });
  auto* corpusVerify =
      corpusCmd->add_subcommand("verify-all", "Verify every fixture against the semantics");
  corpusVerify->callback([&] {
    bool allClean = true;
    for (const CorpusFixture& fixture : corpus_fixtures()) {
      if (!report_fixture(fixture, out)) allClean = false;
    }
    if (!allClean) exitCode = 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exitCode;
}

}  // namespace oppgeo
