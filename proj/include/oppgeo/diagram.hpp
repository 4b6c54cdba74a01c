#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oppgeo/classify.hpp"
#include "oppgeo/formula.hpp"
#include "oppgeo/semantics.hpp"

namespace oppgeo {

// The four edge kinds a diagram can claim. Subalternation edges are directed
// (src entails dst); the other three are undirected and stored with
// src < dst.
enum class EdgeKind { Contradictory, Contrary, Subcontrary, Subalternation };

const char* edge_kind_name(EdgeKind kind);

struct DiagramVertex {
  std::string id;
  std::string label;
  Formula formula;
};

struct DiagramEdge {
  std::string src;
  std::string dst;
  EdgeKind kind;

  bool operator==(const DiagramEdge& other) const {
    return src == other.src && dst == other.dst && kind == other.kind;
  }
};

// An opposition diagram: vertices carrying formulas, and claimed relation
// edges between them. "Claimed" because edges are stored as drawn; verify()
// checks them against the semantics. Vertex order is preserved as given;
// edges are canonicalized (undirected kinds get src < dst) and sorted by
// (kind, src, dst) so equal diagrams compare and serialize identically.
class OppositionDiagram {
public:
  OppositionDiagram(AtomUniverse universe, Formula constraint,
                    std::vector<DiagramVertex> vertices,
                    std::vector<DiagramEdge> edges);

  const AtomUniverse& universe() const { return universe_; }
  const Formula& constraint() const { return constraint_; }
  const std::vector<DiagramVertex>& vertices() const { return vertices_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const;
  const DiagramVertex& vertex(const std::string& id) const;

private:
  AtomUniverse universe_;
  Formula constraint_;
  std::vector<DiagramVertex> vertices_;
  std::vector<DiagramEdge> edges_;
};

// Builds the 2(k+1)-vertex structure over k pairwise-exclusive disjuncts:
// the disjuncts (ids d1..dk), their negations (n1..nk), their disjunction
// (top) and its negation (bottom; !(a|b) for k=2, the conjunction of the
// negations for k >= 3). Labels are the formula texts. The stored constraint
// is the supplied one conjoined with pairwise exclusivity of the disjuncts,
// and every edge is computed from the classifier under it: the JSB hexagon
// for k=2, the cube of opposition for k=3.
//
// Throws TooFewDisjunctsError (k < 2), UnsatisfiableConstraintError, or
// DegenerateDisjunctError (a disjunct constant, or two equivalent, under the
// effective constraint).
OppositionDiagram build_opposition_structure(const std::vector<Formula>& disjuncts,
                                             const Formula& constraint);

// One claimed edge checked against the classifier. When refuted, `actual` is
// the semantic relation of (src, dst) and `witness`, when present, is the
// least valuation realizing a joint possibility the claimed kind forbids
// (both-true for a false Contrary, both-false for a false Subcontrary,
// either for a false Contradictory, src-true-dst-false for a false
// Subalternation). A refutation that consists only of a required possibility
// being unrealizable has no such valuation and carries no witness.
struct EdgeVerdict {
  DiagramEdge edge;
  bool confirmed;
  RelationKind actual;
  std::optional<Valuation> witness;
};

// A vertex pair with a semantic relation but no recorded edge. `relation`
// is relative to (first, second), which follow vertex order.
struct MissingPair {
  std::string first;
  std::string second;
  RelationKind relation;
};

// Buckets for the pair census; the two subalternation directions count as
// one kind here.
enum class PairKind {
  Contradictory,
  Contrary,
  Subcontrary,
  Subalternation,
  Equivalent,
  Unconnected,
  Degenerate,
};

const char* pair_kind_name(PairKind kind);

struct VerificationReport {
  std::vector<EdgeVerdict> perEdge;
  std::vector<MissingPair> missingPairs;
  // Always holds all seven keys; sums to C(|vertices|, 2).
  std::map<PairKind, int> partitionCounts;

  bool clean() const;
};

// Checks every claimed edge and tallies the semantic relation of every
// vertex pair under the diagram's stored constraint. Unconnected pairs are
// legitimately edge-free; any other unrecorded pair is reported missing.
VerificationReport verify(const OppositionDiagram& d);

struct FailedContrariety {
  std::string first;
  std::string second;
  Valuation bothTrue;
};

struct DegeneracyReport {
  // Pairs of vertex ids with identical restricted tables, each pair sorted,
  // the list sorted.
  std::vector<std::pair<std::string, std::string>> equivalentPairs;
  // Ids of vertices constant under the constraint, sorted.
  std::vector<std::string> nonContingentVertices;
  // Claimed Contrary edges whose endpoints can be jointly true.
  std::vector<FailedContrariety> failedContrarieties;
  // Number of vertex equivalence classes.
  std::size_t collapsedOrder = 0;

  bool clean(std::size_t vertexCount) const;
};

DegeneracyReport detect_degeneracies(const OppositionDiagram& d);

// Quotients the diagram by vertex equivalence under the constraint. Each
// class is represented by its member with the least label (then least id);
// the quotient vertex keeps that member's id and formula, and its label
// joins the member labels, sorted, with " / ". Classes appear in first-
// occurrence order and edges are recomputed semantically between
// representatives.
OppositionDiagram collapse(const OppositionDiagram& d);

}  // namespace oppgeo
