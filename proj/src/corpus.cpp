#include "oppgeo/corpus.hpp"

#include <json.hpp>

#include "oppgeo/errors.hpp"

namespace oppgeo {

namespace {

using nlohmann::ordered_json;

ordered_json vtx(const char* id, const char* label, const char* formula) {
  return {{"id", id}, {"label", label}, {"formula", formula}};
}

ordered_json vtx(const char* id, const char* label, const char* formula, const char* role) {
  return {{"id", id}, {"label", label}, {"formula", formula}, {"role", role}};
}

ordered_json edge(const char* src, const char* dst, const char* relation) {
  return {{"src", src}, {"dst", dst}, {"relation", relation}};
}

ordered_json arrow(const char* src, const char* dst) {
  return {{"src", src}, {"dst", dst}};
}

ordered_json head(const char* kind, std::vector<const char*> atoms, const char* constraint) {
  ordered_json j;
  j["v"] = 1;
  j["kind"] = kind;
  j["atoms"] = atoms;
  j["constraint"] = constraint;
  return j;
}

// The full hexagon edge set in canonical order, shared by every six-vertex
// opposition fixture (duty-value claims it too; that is the point of that
// fixture).
ordered_json hexagon_edges() {
  return ordered_json::array({
      edge("bottom", "top", "contradictory"),
      edge("not_p", "p", "contradictory"),
      edge("not_q", "q", "contradictory"),
      edge("bottom", "p", "contrary"),
      edge("bottom", "q", "contrary"),
      edge("p", "q", "contrary"),
      edge("not_p", "not_q", "subcontrary"),
      edge("not_p", "top", "subcontrary"),
      edge("not_q", "top", "subcontrary"),
      edge("bottom", "not_p", "subalternation"),
      edge("bottom", "not_q", "subalternation"),
      edge("p", "not_q", "subalternation"),
      edge("p", "top", "subalternation"),
      edge("q", "not_p", "subalternation"),
      edge("q", "top", "subalternation"),
  });
}

// Arrow set of the standard two-disjunct argument diagram.
ordered_json dilemma_arrows() {
  return ordered_json::array({
      arrow("not_p", "bottom"),
      arrow("not_p", "q"),
      arrow("not_q", "bottom"),
      arrow("not_q", "p"),
      arrow("top", "p"),
      arrow("top", "q"),
  });
}

std::string kantian() {
  ordered_json j = head("opposition", {"E", "L"}, "!(E & L)");
  j["vertices"] = ordered_json::array({
      vtx("top", "analytic or a posteriori", "E | L"),
      vtx("p", "a posteriori", "E"),
      vtx("q", "analytic", "L"),
      vtx("not_p", "a priori", "!E"),
      vtx("not_q", "synthetic", "!L"),
      vtx("bottom", "synthetic a priori", "!E & !L"),
  });
  j["edges"] = hexagon_edges();
  return j.dump(2) + "\n";
}

std::string kantian_nelson() {
  ordered_json j = head("nelson", {"E", "L"}, "!(E & L)");
  j["vertices"] = ordered_json::array({
      vtx("top", "Every judgment is either logical or empirical", "E | L",
          "shared_disjunctive_premiss"),
      vtx("p", "The axioms of geometry stem from experience", "E", "false_consequence"),
      vtx("q", "The axioms of geometry stem from logic", "L", "false_consequence"),
      vtx("not_p", "The axioms of geometry do not stem from experience", "!E",
          "factual_premiss"),
      vtx("not_q", "The axioms of geometry do not stem from logic", "!L", "factual_premiss"),
      vtx("bottom", "The axioms of geometry stem neither from experience nor from logic",
          "!E & !L", "correct_conclusion"),
  });
  j["arrows"] = dilemma_arrows();
  return j.dump(2) + "\n";
}

std::string political() {
  ordered_json j = head("opposition", {"A", "W"}, "!(A & W)");
  j["vertices"] = ordered_json::array({
      vtx("top", "ISA acceptable ∨ WS necessary", "A | W"),
      vtx("p", "ISA acceptable", "A"),
      vtx("q", "WS necessary", "W"),
      vtx("not_p", "ISA not acceptable", "!A"),
      vtx("not_q", "WS not necessary", "!W"),
      vtx("bottom", "ISA not acceptable ∧ WS not necessary", "!A & !W"),
  });
  j["edges"] = hexagon_edges();
  return j.dump(2) + "\n";
}

std::string political_nelson() {
  ordered_json j = head("nelson", {"A", "W"}, "!(A & W)");
  j["vertices"] = ordered_json::array({
      vtx("top", "Complete Disjunction between Inter-State Anarchy and the World-State",
          "A | W", "shared_disjunctive_premiss"),
      vtx("p", "Denial that Inter-State Anarchy is Unacceptable", "A", "false_consequence"),
      vtx("q", "Necessity of a World-State", "W", "false_consequence"),
      vtx("not_p", "Unacceptability of Inter-State Anarchy", "!A", "factual_premiss"),
      vtx("not_q", "Denial that a World-State is Necessary", "!W", "factual_premiss"),
      vtx("bottom", "The above disjunction is incomplete", "!A & !W", "correct_conclusion"),
  });
  j["arrows"] = dilemma_arrows();
  return j.dump(2) + "\n";
}

std::string duty_value() {
  ordered_json j = head("opposition", {"D", "V"}, "true");
  j["vertices"] = ordered_json::array({
      vtx("top", "(V -> D) -> D -> V", "(V -> D) -> D -> V"),
      vtx("p", "D -> V", "D -> V"),
      vtx("q", "!(V -> D)", "!(V -> D)"),
      vtx("not_p", "!(D -> V)", "!(D -> V)"),
      vtx("not_q", "V -> D", "V -> D"),
      vtx("bottom", "(V -> D) & !(D -> V)", "(V -> D) & !(D -> V)"),
  });
  j["edges"] = hexagon_edges();
  return j.dump(2) + "\n";
}

std::string metaphysics() {
  ordered_json j = head("nelson", {"F", "I", "N"}, "!(I & F) & !(I & N) & !(F & N)");
  j["vertices"] = ordered_json::array({
      vtx("top",
          "Complete disjunction between intuition and reflection as possible sources of "
          "knowledge",
          "I | F | N", "shared_disjunctive_premiss"),
      vtx("p", "Metaphysics stems from intellectual intuition", "I", "false_consequence"),
      vtx("q", "Metaphysics stems from reflection", "F", "false_consequence"),
      vtx("r", "We have no metaphysical knowledge", "N", "false_consequence"),
      vtx("not_p", "Our intuition is not intellectual", "!I", "factual_premiss"),
      vtx("not_q", "Reflection is empty", "!F", "factual_premiss"),
      vtx("not_r", "We do have metaphysical knowledge", "!N", "factual_premiss"),
      vtx("bottom", "Metaphysics stems from an immediate nonintuitive knowledge",
          "!I & !F & !N", "correct_conclusion"),
  });
  j["arrows"] = ordered_json::array({
      arrow("not_p", "bottom"),
      arrow("not_p", "q"),
      arrow("not_p", "r"),
      arrow("not_q", "bottom"),
      arrow("not_q", "p"),
      arrow("not_q", "r"),
      arrow("not_r", "bottom"),
      arrow("not_r", "p"),
      arrow("not_r", "q"),
      arrow("top", "p"),
      arrow("top", "q"),
      arrow("top", "r"),
  });
  return j.dump(2) + "\n";
}

std::string poincare() {
  ordered_json j = head("nelson", {"C", "E", "L"}, "!(E & L) & !(E & C) & !(L & C)");
  j["vertices"] = ordered_json::array({
      vtx("top", "Every judgment is either logical or empirical", "E | L",
          "shared_disjunctive_premiss"),
      vtx("p", "The axioms of geometry stem from experience", "E", "false_consequence"),
      vtx("q", "The axioms of geometry stem from logic", "L", "false_consequence"),
      vtx("r", "The axioms of geometry contain no knowledge", "C", "false_consequence"),
      vtx("not_p", "The axioms of geometry do not stem from experience", "!E",
          "factual_premiss"),
      vtx("not_q", "The axioms of geometry do not stem from logic", "!L", "factual_premiss"),
      vtx("bottom", "The axioms of geometry stem neither from experience nor from logic",
          "!E & !L", "correct_conclusion"),
  });
  j["arrows"] = ordered_json::array({
      arrow("not_p", "bottom"),
      arrow("not_p", "q"),
      arrow("not_p", "r"),
      arrow("not_q", "bottom"),
      arrow("not_q", "p"),
      arrow("not_q", "r"),
      arrow("top", "p"),
      arrow("top", "q"),
      arrow("top", "r"),
  });
  return j.dump(2) + "\n";
}

std::vector<CorpusFixture> build_fixtures() {
  std::vector<CorpusFixture> out;
  out.push_back({"kantian", kantian(), {15, 0, 6, 0, false}});
  out.push_back({"kantian-nelson", kantian_nelson(), {0, 0, 0, 3, false}});
  out.push_back({"political", political(), {15, 0, 6, 0, false}});
  out.push_back({"political-nelson", political_nelson(), {0, 0, 0, 3, false}});
  out.push_back({"duty-value", duty_value(), {7, 8, 4, 0, false}});
  out.push_back({"metaphysics", metaphysics(), {0, 0, 0, 4, true}});
  out.push_back({"poincare", poincare(), {0, 0, 0, 4, false}});
  return out;
}

}  // namespace

const std::vector<CorpusFixture>& corpus_fixtures() {
  static const std::vector<CorpusFixture> fixtures = build_fixtures();
  return fixtures;
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const CorpusFixture& f : corpus_fixtures()) names.push_back(f.name);
  return names;
}

const CorpusFixture& corpus_fixture(const std::string& name) {
  for (const CorpusFixture& f : corpus_fixtures()) {
    if (f.name == name) return f;
  }
  throw Error("unknown corpus fixture '" + name + "'");
}

DiagramDocument corpus_document(const std::string& name) {
  return parse_document(corpus_fixture(name).document);
}

}  // namespace oppgeo
