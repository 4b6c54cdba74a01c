#include <doctest.h>

#include <algorithm>

#include "oppgeo/diagram.hpp"
#include "oppgeo/errors.hpp"

using namespace oppgeo;

namespace {

DiagramVertex vert(const char* id, const char* formulaText) {
  return {id, formulaText, parse_formula(formulaText)};
}

int count_kind(const OppositionDiagram& d, EdgeKind kind) {
  int n = 0;
  for (const DiagramEdge& e : d.edges()) n += e.kind == kind ? 1 : 0;
  return n;
}

bool has_edge(const OppositionDiagram& d, const char* src, const char* dst, EdgeKind kind) {
  return std::find(d.edges().begin(), d.edges().end(), DiagramEdge{src, dst, kind}) !=
         d.edges().end();
}

}  // namespace

TEST_CASE("two exclusive disjuncts build the full hexagon") {
  OppositionDiagram d = build_opposition_structure(
      {parse_formula("p"), parse_formula("q")}, Formula::top());

  REQUIRE(d.vertices().size() == 6);
  CHECK(d.vertices()[0].id == "top");
  CHECK(d.vertices()[0].formula == parse_formula("p | q"));
  CHECK(d.vertices()[0].label == "p | q");
  CHECK(d.vertex("bottom").formula == parse_formula("!(p | q)"));
  CHECK(d.vertex("n1").formula == parse_formula("!p"));
  CHECK(d.constraint() == parse_formula("!(p & q)"));
  CHECK(d.universe().names() == std::vector<std::string>{"p", "q"});

  REQUIRE(d.edges().size() == 15);
  CHECK(count_kind(d, EdgeKind::Contradictory) == 3);
  CHECK(count_kind(d, EdgeKind::Contrary) == 3);
  CHECK(count_kind(d, EdgeKind::Subcontrary) == 3);
  CHECK(count_kind(d, EdgeKind::Subalternation) == 6);

  CHECK(has_edge(d, "bottom", "top", EdgeKind::Contradictory));
  CHECK(has_edge(d, "d1", "n1", EdgeKind::Contradictory));
  CHECK(has_edge(d, "d1", "d2", EdgeKind::Contrary));
  CHECK(has_edge(d, "n1", "n2", EdgeKind::Subcontrary));
  CHECK(has_edge(d, "d1", "top", EdgeKind::Subalternation));
  CHECK(has_edge(d, "d1", "n2", EdgeKind::Subalternation));
  CHECK(has_edge(d, "bottom", "n1", EdgeKind::Subalternation));
}

TEST_CASE("a supplied constraint is conjoined with exclusivity") {
  OppositionDiagram d = build_opposition_structure(
      {parse_formula("E"), parse_formula("L")}, parse_formula("!(E & L)"));
  CHECK(d.constraint() == parse_formula("!(E & L) & !(E & L)"));
  CHECK(verify(d).clean());
}

TEST_CASE("three exclusive disjuncts build the cube") {
  OppositionDiagram d = build_opposition_structure(
      {parse_formula("P"), parse_formula("Q"), parse_formula("R")}, Formula::top());

  REQUIRE(d.vertices().size() == 8);
  CHECK(d.vertex("bottom").formula == parse_formula("!P & !Q & !R"));
  CHECK(d.vertex("top").formula == parse_formula("P | Q | R"));

  CHECK(count_kind(d, EdgeKind::Contradictory) == 4);
  CHECK(count_kind(d, EdgeKind::Contrary) == 6);
  CHECK(count_kind(d, EdgeKind::Subcontrary) == 6);
  CHECK(count_kind(d, EdgeKind::Subalternation) == 12);

  // The contrary tetrahedron: disjuncts plus the conjunction of negations.
  for (const char* a : {"bottom", "d1", "d2", "d3"}) {
    for (const char* b : {"bottom", "d1", "d2", "d3"}) {
      if (std::string(a) < b) CHECK(has_edge(d, a, b, EdgeKind::Contrary));
    }
  }
  // The subcontrary tetrahedron: negations plus the disjunction.
  for (const char* a : {"n1", "n2", "n3", "top"}) {
    for (const char* b : {"n1", "n2", "n3", "top"}) {
      if (std::string(a) < b) CHECK(has_edge(d, a, b, EdgeKind::Subcontrary));
    }
  }
  CHECK(verify(d).clean());
}

TEST_CASE("builder rejects degenerate input") {
  Formula p = parse_formula("p"), q = parse_formula("q");
  CHECK_THROWS_AS(build_opposition_structure({p}, Formula::top()), TooFewDisjunctsError);
  CHECK_THROWS_AS(build_opposition_structure({}, Formula::top()), TooFewDisjunctsError);
  CHECK_THROWS_AS(build_opposition_structure({p, q}, Formula::bottom()),
                  UnsatisfiableConstraintError);
  // p & q is forced false once exclusivity with p is added.
  CHECK_THROWS_AS(build_opposition_structure({p, parse_formula("p & q")}, Formula::top()),
                  DegenerateDisjunctError);
  CHECK_THROWS_AS(build_opposition_structure({p, q}, parse_formula("!p")),
                  DegenerateDisjunctError);
}

TEST_CASE("construction canonicalizes edges and validates endpoints") {
  std::vector<DiagramVertex> vs = {vert("a", "p"), vert("b", "!p")};
  AtomUniverse u({"p"});

  OppositionDiagram d(u, Formula::top(), vs,
                      {{"b", "a", EdgeKind::Contradictory},
                       {"b", "a", EdgeKind::Contradictory},
                       {"a", "b", EdgeKind::Contradictory}});
  // Undirected edges are stored src < dst and deduplicated.
  REQUIRE(d.edges().size() == 1);
  CHECK(d.edges()[0].src == "a");
  CHECK(d.edges()[0].dst == "b");

  CHECK_THROWS_AS(OppositionDiagram(u, Formula::top(),
                                    {vert("a", "p"), vert("a", "!p")}, {}),
                  InvalidDiagramError);
  CHECK_THROWS_AS(OppositionDiagram(u, Formula::top(), vs,
                                    {{"a", "zz", EdgeKind::Contrary}}),
                  InvalidDiagramError);
  CHECK_THROWS_AS(OppositionDiagram(u, Formula::top(), vs,
                                    {{"a", "a", EdgeKind::Contrary}}),
                  InvalidDiagramError);
  CHECK_THROWS_AS(d.vertex("zz"), InvalidDiagramError);
  CHECK(d.has_vertex("a"));
  CHECK_FALSE(d.has_vertex("zz"));
}

TEST_CASE("edges sort by kind rank, then endpoints") {
  std::vector<DiagramVertex> vs = {vert("a", "p"), vert("b", "!p"), vert("c", "p | q"),
                                   vert("d", "q")};
  OppositionDiagram d(AtomUniverse({"p", "q"}), Formula::top(), vs,
                      {{"a", "c", EdgeKind::Subalternation},
                       {"b", "a", EdgeKind::Contradictory},
                       {"a", "d", EdgeKind::Contrary}});
  REQUIRE(d.edges().size() == 3);
  CHECK(d.edges()[0].kind == EdgeKind::Contradictory);
  CHECK(d.edges()[1].kind == EdgeKind::Contrary);
  CHECK(d.edges()[2].kind == EdgeKind::Subalternation);
  // Directed subalternation keeps its direction.
  CHECK(d.edges()[2].src == "a");
  CHECK(d.edges()[2].dst == "c");
}

TEST_CASE("verify confirms the built hexagon and counts every pair") {
  OppositionDiagram d = build_opposition_structure(
      {parse_formula("p"), parse_formula("q")}, Formula::top());
  VerificationReport rep = verify(d);
  CHECK(rep.clean());
  CHECK(rep.perEdge.size() == 15);
  for (const EdgeVerdict& v : rep.perEdge) CHECK(v.confirmed);
  CHECK(rep.missingPairs.empty());

  REQUIRE(rep.partitionCounts.size() == 7);
  CHECK(rep.partitionCounts.at(PairKind::Contradictory) == 3);
  CHECK(rep.partitionCounts.at(PairKind::Contrary) == 3);
  CHECK(rep.partitionCounts.at(PairKind::Subcontrary) == 3);
  CHECK(rep.partitionCounts.at(PairKind::Subalternation) == 6);
  CHECK(rep.partitionCounts.at(PairKind::Equivalent) == 0);
  CHECK(rep.partitionCounts.at(PairKind::Unconnected) == 0);
  CHECK(rep.partitionCounts.at(PairKind::Degenerate) == 0);

  int total = 0;
  for (const auto& [kind, count] : rep.partitionCounts) total += count;
  CHECK(total == 15);
}

TEST_CASE("verify refutes a wrong claim with the forbidden-possibility witness") {
  // !p and !q are subcontrary under exclusivity; claiming them contrary is
  // refuted by the both-true valuation.
  std::vector<DiagramVertex> vs = {vert("x", "!p"), vert("y", "!q")};
  OppositionDiagram d(AtomUniverse({"p", "q"}), parse_formula("!(p & q)"), vs,
                      {{"x", "y", EdgeKind::Contrary}});
  VerificationReport rep = verify(d);
  CHECK_FALSE(rep.clean());
  REQUIRE(rep.perEdge.size() == 1);
  CHECK_FALSE(rep.perEdge[0].confirmed);
  CHECK(rep.perEdge[0].actual == RelationKind::Subcontrary);
  REQUIRE(rep.perEdge[0].witness.has_value());
  CHECK(rep.perEdge[0].witness->to_string() == "p=false q=false");
}

TEST_CASE("a refutation without a realizable forbidden possibility has no witness") {
  // p and !p are contradictory; the contrary claim fails only because the
  // required both-false case is unrealizable.
  std::vector<DiagramVertex> vs = {vert("x", "p"), vert("y", "!p")};
  OppositionDiagram d(AtomUniverse({"p"}), Formula::top(), vs,
                      {{"x", "y", EdgeKind::Contrary}});
  VerificationReport rep = verify(d);
  REQUIRE(rep.perEdge.size() == 1);
  CHECK_FALSE(rep.perEdge[0].confirmed);
  CHECK(rep.perEdge[0].actual == RelationKind::Contradictory);
  CHECK_FALSE(rep.perEdge[0].witness.has_value());
}

TEST_CASE("claimed subalternation in the wrong direction is refuted") {
  std::vector<DiagramVertex> vs = {vert("w", "p | q"), vert("v", "p")};
  OppositionDiagram d(AtomUniverse({"p", "q"}), Formula::top(), vs,
                      {{"w", "v", EdgeKind::Subalternation}});
  VerificationReport rep = verify(d);
  REQUIRE(rep.perEdge.size() == 1);
  CHECK_FALSE(rep.perEdge[0].confirmed);
  CHECK(rep.perEdge[0].actual == RelationKind::SubalternationRightToLeft);
  REQUIRE(rep.perEdge[0].witness.has_value());
  // Least valuation where the source holds and the target fails.
  CHECK(rep.perEdge[0].witness->to_string() == "p=false q=true");
}

TEST_CASE("unrecorded related pairs are reported missing, in vertex order") {
  std::vector<DiagramVertex> vs = {vert("a", "p"), vert("b", "p | q"), vert("c", "z")};
  OppositionDiagram d(AtomUniverse({"p", "q", "z"}), Formula::top(), vs, {});
  VerificationReport rep = verify(d);
  CHECK_FALSE(rep.clean());
  REQUIRE(rep.missingPairs.size() == 1);
  CHECK(rep.missingPairs[0].first == "a");
  CHECK(rep.missingPairs[0].second == "b");
  CHECK(rep.missingPairs[0].relation == RelationKind::SubalternationLeftToRight);
  // Unconnected pairs (a,c), (b,c) are legitimately edge-free.
  CHECK(rep.partitionCounts.at(PairKind::Unconnected) == 2);
  CHECK(rep.partitionCounts.at(PairKind::Subalternation) == 1);
}

TEST_CASE("verify uses exactly the stored constraint") {
  std::vector<DiagramVertex> vs = {vert("x", "p"), vert("y", "q")};
  OppositionDiagram constrained(AtomUniverse({"p", "q"}), parse_formula("!(p & q)"), vs,
                                {{"x", "y", EdgeKind::Contrary}});
  CHECK(verify(constrained).clean());

  OppositionDiagram unconstrained(AtomUniverse({"p", "q"}), Formula::top(), vs,
                                  {{"x", "y", EdgeKind::Contrary}});
  VerificationReport rep = verify(unconstrained);
  CHECK_FALSE(rep.clean());
  CHECK(rep.perEdge[0].actual == RelationKind::Unconnected);
  REQUIRE(rep.perEdge[0].witness.has_value());
  CHECK(rep.perEdge[0].witness->to_string() == "p=true q=true");
}

TEST_CASE("degeneracy detection reports equivalences, constants, and failed contrarieties") {
  std::vector<DiagramVertex> vs = {vert("x", "p | q"), vert("y", "q | p"),
                                   vert("z", "!(p | q)"), vert("k", "p & !p")};
  OppositionDiagram d(AtomUniverse({"p", "q"}), Formula::top(), vs,
                      {{"x", "z", EdgeKind::Contradictory}, {"x", "y", EdgeKind::Contrary}});
  DegeneracyReport rep = detect_degeneracies(d);
  CHECK_FALSE(rep.clean(d.vertices().size()));
  REQUIRE(rep.equivalentPairs.size() == 1);
  CHECK(rep.equivalentPairs[0] == std::pair<std::string, std::string>{"x", "y"});
  CHECK(rep.nonContingentVertices == std::vector<std::string>{"k"});
  REQUIRE(rep.failedContrarieties.size() == 1);
  CHECK(rep.failedContrarieties[0].first == "x");
  CHECK(rep.failedContrarieties[0].second == "y");
  CHECK(rep.failedContrarieties[0].bothTrue.to_string() == "p=false q=true");
  CHECK(rep.collapsedOrder == 3);

  OppositionDiagram clean = build_opposition_structure(
      {parse_formula("p"), parse_formula("q")}, Formula::top());
  CHECK(detect_degeneracies(clean).clean(6));
  CHECK(detect_degeneracies(clean).collapsedOrder == 6);
}

TEST_CASE("collapse quotients equivalent vertices and recomputes edges") {
  std::vector<DiagramVertex> vs = {vert("y", "q | p"), vert("x", "p | q"),
                                   vert("z", "!(p | q)")};
  OppositionDiagram d(AtomUniverse({"p", "q"}), Formula::top(), vs, {});
  OppositionDiagram c = collapse(d);

  REQUIRE(c.vertices().size() == 2);
  // Representative has the least label in the class; the class keeps its
  // first-occurrence position.
  CHECK(c.vertices()[0].id == "x");
  CHECK(c.vertices()[0].label == "p | q / q | p");
  CHECK(c.vertices()[0].formula == parse_formula("p | q"));
  CHECK(c.vertices()[1].id == "z");
  CHECK(c.vertices()[1].label == "!(p | q)");
  REQUIRE(c.edges().size() == 1);
  CHECK(c.edges()[0] == DiagramEdge{"x", "z", EdgeKind::Contradictory});

  // Collapsing again changes nothing.
  OppositionDiagram cc = collapse(c);
  CHECK(cc.vertices().size() == c.vertices().size());
  CHECK(cc.edges() == c.edges());
  CHECK(cc.vertices()[0].label == c.vertices()[0].label);
}
