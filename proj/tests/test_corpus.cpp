#include <doctest.h>

#include <string>
#include <vector>

#include "oppgeo/corpus.hpp"
#include "oppgeo/errors.hpp"

using namespace oppgeo;

namespace {

const EdgeVerdict& verdict_for(const VerificationReport& rep, const std::string& src,
                               const std::string& dst) {
  for (const EdgeVerdict& v : rep.perEdge) {
    if (v.edge.src == src && v.edge.dst == dst) return v;
  }
  REQUIRE(false);
  return rep.perEdge.front();
}

void check_refuted(const VerificationReport& rep, const std::string& src,
                   const std::string& dst, RelationKind actual, const char* witness) {
  const EdgeVerdict& v = verdict_for(rep, src, dst);
  CHECK_FALSE(v.confirmed);
  CHECK(v.actual == actual);
  if (witness == nullptr) {
    CHECK_FALSE(v.witness.has_value());
  } else {
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->to_string() == witness);
  }
}

}  // namespace

TEST_CASE("the corpus lists its fixtures in a fixed order") {
  CHECK(corpus_names() ==
        std::vector<std::string>{"kantian", "kantian-nelson", "political",
                                 "political-nelson", "duty-value", "metaphysics",
                                 "poincare"});
  CHECK(corpus_fixture("poincare").name == "poincare");
  CHECK_THROWS_WITH_AS(corpus_fixture("nope"), "unknown corpus fixture 'nope'", Error);
}

TEST_CASE("every fixture document is canonical schema text") {
  for (const CorpusFixture& f : corpus_fixtures()) {
    CAPTURE(f.name);
    DiagramDocument doc = parse_document(f.document);
    CHECK(serialize_document(doc) == f.document);
  }
}

TEST_CASE("every fixture meets its recorded expectations") {
  for (const CorpusFixture& f : corpus_fixtures()) {
    CAPTURE(f.name);
    DiagramDocument doc = parse_document(f.document);
    if (const auto* d = std::get_if<OppositionDiagram>(&doc)) {
      VerificationReport rep = verify(*d);
      std::size_t confirmed = 0, refuted = 0;
      for (const EdgeVerdict& v : rep.perEdge) ++(v.confirmed ? confirmed : refuted);
      CHECK(confirmed == f.expected.confirmedEdges);
      CHECK(refuted == f.expected.refutedEdges);
      CHECK(rep.missingPairs.empty());
      CHECK(detect_degeneracies(*d).collapsedOrder == f.expected.collapsedOrder);
    } else {
      const NelsonDiagram& n = std::get<NelsonDiagram>(doc);
      InferenceReport rep = validate_inferences(n);
      CHECK(rep.all_valid());
      CHECK(rep.perConclusion.size() == f.expected.validInferences);
      if (n.vertices().size() == 8) {
        CHECK(check_cube_isomorphism(n).has_value() == f.expected.cube);
      }
    }
  }
}

TEST_CASE("the dilemma hexagons verify clean") {
  for (const char* name : {"kantian", "political"}) {
    CAPTURE(name);
    auto d = std::get<OppositionDiagram>(corpus_document(name));
    CHECK(d.vertices().size() == 6);
    CHECK(d.edges().size() == 15);
    CHECK(verify(d).clean());
    CHECK(detect_degeneracies(d).clean(6));
  }
}

TEST_CASE("duty-value is refuted in the recorded places") {
  auto d = std::get<OppositionDiagram>(corpus_document("duty-value"));
  VerificationReport rep = verify(d);
  CHECK_FALSE(rep.clean());
  CHECK(rep.perEdge.size() == 15);

  CHECK(verdict_for(rep, "bottom", "top").confirmed);
  CHECK(verdict_for(rep, "bottom", "q").confirmed);
  CHECK(verdict_for(rep, "not_q", "top").confirmed);
  CHECK(verdict_for(rep, "bottom", "not_q").confirmed);
  CHECK(verdict_for(rep, "q", "top").confirmed);

  check_refuted(rep, "bottom", "p", RelationKind::Contradictory, nullptr);
  check_refuted(rep, "p", "q", RelationKind::SubalternationRightToLeft,
                "D=false V=true");
  check_refuted(rep, "not_p", "not_q", RelationKind::SubalternationLeftToRight,
                "D=false V=true");
  check_refuted(rep, "not_p", "top", RelationKind::Contradictory, nullptr);
  check_refuted(rep, "bottom", "not_p", RelationKind::Equivalent, nullptr);
  check_refuted(rep, "p", "not_q", RelationKind::Subcontrary, "D=false V=true");
  check_refuted(rep, "p", "top", RelationKind::Equivalent, nullptr);
  check_refuted(rep, "q", "not_p", RelationKind::Contrary, "D=false V=true");

  CHECK(rep.partitionCounts.at(PairKind::Contradictory) == 5);
  CHECK(rep.partitionCounts.at(PairKind::Contrary) == 2);
  CHECK(rep.partitionCounts.at(PairKind::Subcontrary) == 2);
  CHECK(rep.partitionCounts.at(PairKind::Subalternation) == 4);
  CHECK(rep.partitionCounts.at(PairKind::Equivalent) == 2);
  CHECK(rep.partitionCounts.at(PairKind::Unconnected) == 0);
}

TEST_CASE("duty-value collapses to a square") {
  auto d = std::get<OppositionDiagram>(corpus_document("duty-value"));
  DegeneracyReport rep = detect_degeneracies(d);
  CHECK(rep.equivalentPairs ==
        std::vector<std::pair<std::string, std::string>>{{"bottom", "not_p"},
                                                         {"p", "top"}});
  CHECK(rep.nonContingentVertices.empty());
  REQUIRE(rep.failedContrarieties.size() == 1);
  CHECK(rep.failedContrarieties[0].first == "p");
  CHECK(rep.failedContrarieties[0].second == "q");
  CHECK(rep.failedContrarieties[0].bothTrue.to_string() == "D=false V=true");
  CHECK(rep.collapsedOrder == 4);

  OppositionDiagram square = collapse(d);
  REQUIRE(square.vertices().size() == 4);
  CHECK(square.vertices()[0].id == "top");
  CHECK(square.vertices()[1].id == "q");
  CHECK(square.vertices()[2].id == "not_p");
  CHECK(square.vertices()[3].id == "not_q");
  CHECK(verify(square).clean());
}

TEST_CASE("the kantian argument untwists onto the kantian hexagon") {
  auto nelson = std::get<NelsonDiagram>(corpus_document("kantian-nelson"));
  auto hexagon = std::get<OppositionDiagram>(corpus_document("kantian"));
  OppositionDiagram flat = untwist(nelson);

  REQUIRE(flat.vertices().size() == hexagon.vertices().size());
  for (const DiagramVertex& v : hexagon.vertices()) {
    CHECK(flat.vertex(v.id).formula == v.formula);
  }
  CHECK(flat.edges() == hexagon.edges());
  CHECK(verify(flat).clean());
}

TEST_CASE("the seven-vertex fixture gains a synthesized negation when untwisted") {
  auto n = std::get<NelsonDiagram>(corpus_document("poincare"));
  CHECK(n.vertices().size() == 7);
  OppositionDiagram d = untwist(n);
  REQUIRE(d.vertices().size() == 8);
  const DiagramVertex& synth = d.vertices().back();
  CHECK(synth.id == "synth_r");
  CHECK(synth.formula == parse_formula("!C"));
  CHECK(synth.label == "(synthesized) !C");

  std::map<EdgeKind, int> census;
  for (const DiagramEdge& e : d.edges()) ++census[e.kind];
  CHECK(census[EdgeKind::Contradictory] == 4);
  CHECK(census[EdgeKind::Contrary] == 5);
  CHECK(census[EdgeKind::Subcontrary] == 6);
  CHECK(census[EdgeKind::Subalternation] == 13);
}

TEST_CASE("twist undoes untwist on the six- and eight-vertex fixtures") {
  for (const char* name : {"kantian-nelson", "political-nelson", "metaphysics"}) {
    CAPTURE(name);
    auto n = std::get<NelsonDiagram>(corpus_document(name));
    NelsonDiagram back = twist(untwist(n));
    CHECK(serialize_document(back) == serialize_document(n));
  }
}

TEST_CASE("metaphysics maps onto the cube with antipodal negations") {
  auto n = std::get<NelsonDiagram>(corpus_document("metaphysics"));
  auto mapping = check_cube_isomorphism(n);
  REQUIRE(mapping.has_value());
  CHECK((mapping->cornerOf.at("top") ^ mapping->cornerOf.at("bottom")) == 7);
  CHECK((mapping->cornerOf.at("p") ^ mapping->cornerOf.at("not_p")) == 7);
  CHECK((mapping->cornerOf.at("q") ^ mapping->cornerOf.at("not_q")) == 7);
  CHECK((mapping->cornerOf.at("r") ^ mapping->cornerOf.at("not_r")) == 7);
}
