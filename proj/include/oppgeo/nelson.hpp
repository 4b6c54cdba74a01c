#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oppgeo/diagram.hpp"
#include "oppgeo/formula.hpp"
#include "oppgeo/semantics.hpp"

namespace oppgeo {

// Vertex roles in a Nelson diagram: the shared disjunctive premiss at the
// top, the factual premisses rejecting individual disjuncts, the false
// consequences each party derives, and the correct conclusion rejecting the
// whole disjunction.
enum class Role {
  SharedDisjunctivePremiss,
  FactualPremiss,
  FalseConsequence,
  CorrectConclusion,
};

const char* role_name(Role role);

struct NelsonVertex {
  std::string id;
  std::string label;
  Formula formula;
  Role role;
};

struct NelsonArrow {
  std::string src;
  std::string dst;

  bool operator==(const NelsonArrow& other) const {
    return src == other.src && dst == other.dst;
  }
};

// A Nelson diagram: an argument diagram whose converging arrows mark linked
// premiss sets. Arrows are stored as drawn (sorted by (src, dst), exact
// duplicates dropped), so historically faithful diagrams, defective ones
// included, can be validated as-is.
//
// Shape rules, enforced at construction: exactly one SharedDisjunctivePremiss
// and one CorrectConclusion; with k FalseConsequence vertices, either k or
// k-1 FactualPremiss vertices (k-1 is the seven-vertex form, where one
// disjunct's negation is never stated); arrows run from premiss-role
// vertices to consequence-role vertices only.
class NelsonDiagram {
public:
  NelsonDiagram(AtomUniverse universe, Formula constraint,
                std::vector<NelsonVertex> vertices, std::vector<NelsonArrow> arrows);

  const AtomUniverse& universe() const { return universe_; }
  const Formula& constraint() const { return constraint_; }
  const std::vector<NelsonVertex>& vertices() const { return vertices_; }
  const std::vector<NelsonArrow>& arrows() const { return arrows_; }

  bool has_vertex(const std::string& id) const;
  const NelsonVertex& vertex(const std::string& id) const;

  // Number of FalseConsequence vertices.
  std::size_t disjunct_count() const;

private:
  AtomUniverse universe_;
  Formula constraint_;
  std::vector<NelsonVertex> vertices_;
  std::vector<NelsonArrow> arrows_;
};

// Builds the standard diagram over 2 or 3 pairwise-exclusive disjuncts
// (ids top, d1..dk, n1.., concl; labels are formula texts). The stored
// constraint conjoins the supplied one with pairwise exclusivity.
//
// With includeAllNegations=false and k=3, the third negation vertex is
// omitted and the diagram takes the seven-vertex form: the shared premiss is
// the dichotomy d1 | d2 and the conclusion is !d1 & !d2, with the third
// disjunct consequent on the premisses alone (its rejection needs no extra
// factual premiss). The flag has no effect for k=2, where dropping a
// negation would break the conclusion's support.
//
// Arrows: into each false consequence, one from the shared premiss and one
// from each present factual premiss of a different disjunct; into the
// conclusion, one from each present factual premiss.
//
// Throws UnsupportedArityError (k not 2 or 3), DegenerateDisjunctError, or
// UnsatisfiableConstraintError.
NelsonDiagram build_nelson(const std::vector<Formula>& disjuncts,
                           const Formula& constraint, bool includeAllNegations);

struct InferenceCheck {
  std::string vertexId;
  std::vector<std::string> premissIds;  // sorted
  bool valid;
  std::optional<Valuation> counterexample;  // least, when invalid
};

struct InferenceReport {
  // One entry per consequence-role vertex with at least one incoming arrow,
  // in vertex order.
  std::vector<InferenceCheck> perConclusion;

  bool all_valid() const;
};

// Checks each linked argument: the union of a vertex's arrow sources must
// entail it under the diagram's constraint conjoined with pairwise
// exclusivity of the false-consequence formulas.
InferenceReport validate_inferences(const NelsonDiagram& n);

// Untwists the diagram into its opposition counterpart: every arrow u -> v
// becomes the subalternation edge v -> u (kept as drawn, unchecked), and
// every remaining vertex pair gets its semantic relation under the
// constraint conjoined with exclusivity. A disjunct with no matching
// negation vertex (the seven-vertex form) gets one synthesized, appended
// last with id "synth_<disjunct id>" and a "(synthesized)" label prefix, so
// the result always has 2(k+1) vertices. The stored constraint is copied
// unchanged.
OppositionDiagram untwist(const NelsonDiagram& n);

// Inverse of untwist for structurally built shapes: locates the disjunction
// vertex whose disjuncts match other vertices, their negation vertices, and
// the remaining conclusion vertex; reassigns roles; and keeps exactly the
// reversed subalternation edges that fit the standard arrow pattern.
// Requires 6 or 8 vertices (the seven-vertex form has no opposition
// counterpart with a full negation set). Throws NotAnOppositionStructureError
// when the shapes cannot be matched.
NelsonDiagram twist(const OppositionDiagram& d);

// Assignment of diagram vertices to cube corners 0..7, where corners are
// coordinate bit triples and edges join corners differing in one bit.
struct CubeMapping {
  std::map<std::string, int> cornerOf;
};

// Reads the arrows as undirected edges and searches for an isomorphism onto
// the cube skeleton, preferring the orientation that places the shared
// premiss antipodal to the conclusion and each formula antipodal to its
// negation. Returns nullopt when the graph is not a cube (wrong edge count,
// wrong degrees, or no corner assignment). Throws WrongVertexCountError
// unless the diagram has exactly 8 vertices.
std::optional<CubeMapping> check_cube_isomorphism(const NelsonDiagram& n);

}  // namespace oppgeo
