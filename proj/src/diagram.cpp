#include "oppgeo/diagram.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "oppgeo/errors.hpp"

namespace oppgeo {

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Contradictory: return "contradictory";
    case EdgeKind::Contrary: return "contrary";
    case EdgeKind::Subcontrary: return "subcontrary";
    case EdgeKind::Subalternation: return "subalternation";
  }
  return "?";
}

const char* pair_kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::Contradictory: return "Contradictory";
    case PairKind::Contrary: return "Contrary";
    case PairKind::Subcontrary: return "Subcontrary";
    case PairKind::Subalternation: return "Subalternation";
    case PairKind::Equivalent: return "Equivalent";
    case PairKind::Unconnected: return "Unconnected";
    case PairKind::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

int edge_kind_rank(EdgeKind k) {
  switch (k) {
    case EdgeKind::Contradictory: return 0;
    case EdgeKind::Contrary: return 1;
    case EdgeKind::Subcontrary: return 2;
    case EdgeKind::Subalternation: return 3;
  }
  return 4;
}

PairKind bucket(RelationKind kind) {
  switch (kind) {
    case RelationKind::Contradictory: return PairKind::Contradictory;
    case RelationKind::Contrary: return PairKind::Contrary;
    case RelationKind::Subcontrary: return PairKind::Subcontrary;
    case RelationKind::SubalternationLeftToRight:
    case RelationKind::SubalternationRightToLeft: return PairKind::Subalternation;
    case RelationKind::Equivalent: return PairKind::Equivalent;
    case RelationKind::Unconnected: return PairKind::Unconnected;
    case RelationKind::Degenerate: return PairKind::Degenerate;
  }
  return PairKind::Unconnected;
}

// Conjoins, dropping a literal top so built constraints read naturally.
Formula conjoin(Formula acc, Formula next) {
  if (acc.kind() == FormulaKind::Top) return next;
  return Formula::conjunction(std::move(acc), std::move(next));
}

}  // namespace

OppositionDiagram::OppositionDiagram(AtomUniverse universe, Formula constraint,
                                     std::vector<DiagramVertex> vertices,
                                     std::vector<DiagramEdge> edges)
    : universe_(std::move(universe)),
      constraint_(std::move(constraint)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  std::set<std::string> ids;
  for (const DiagramVertex& v : vertices_) {
    if (!ids.insert(v.id).second) {
      throw InvalidDiagramError("duplicate vertex id '" + v.id + "'");
    }
  }
  for (DiagramEdge& e : edges_) {
    if (!ids.count(e.src)) throw InvalidDiagramError("edge endpoint '" + e.src + "' is not a vertex");
    if (!ids.count(e.dst)) throw InvalidDiagramError("edge endpoint '" + e.dst + "' is not a vertex");
    if (e.src == e.dst) throw InvalidDiagramError("self-edge on '" + e.src + "'");
    if (e.kind != EdgeKind::Subalternation && e.dst < e.src) std::swap(e.src, e.dst);
  }
  std::sort(edges_.begin(), edges_.end(), [](const DiagramEdge& a, const DiagramEdge& b) {
    return std::tuple(edge_kind_rank(a.kind), a.src, a.dst) <
           std::tuple(edge_kind_rank(b.kind), b.src, b.dst);
  });
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool OppositionDiagram::has_vertex(const std::string& id) const {
  for (const DiagramVertex& v : vertices_) {
    if (v.id == id) return true;
  }
  return false;
}

const DiagramVertex& OppositionDiagram::vertex(const std::string& id) const {
  for (const DiagramVertex& v : vertices_) {
    if (v.id == id) return v;
  }
  throw InvalidDiagramError("no vertex '" + id + "'");
}

OppositionDiagram build_opposition_structure(const std::vector<Formula>& disjuncts,
                                             const Formula& constraint) {
  const std::size_t k = disjuncts.size();
  if (k < 2) throw TooFewDisjunctsError(k);

  Formula effective = constraint;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      effective = conjoin(effective,
                          Formula::negation(Formula::conjunction(disjuncts[i], disjuncts[j])));
    }
  }

  std::vector<Formula> all = disjuncts;
  all.push_back(effective);
  AtomUniverse u = universe_of(all);

  TruthTable gamma = truth_table(effective, u);
  if (!gamma.any()) throw UnsatisfiableConstraintError();

  std::vector<TruthTable> tables;
  for (std::size_t i = 0; i < k; ++i) {
    TruthTable t = truth_table(disjuncts[i], u) & gamma;
    if (!t.any() || t == gamma) {
      throw DegenerateDisjunctError("disjunct " + std::to_string(i + 1) +
                                    " is constant under the constraint");
    }
    tables.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (tables[i] == tables[j]) {
        throw DegenerateDisjunctError("disjuncts " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) +
                                      " are equivalent under the constraint");
      }
    }
  }

  Formula top = disjuncts[0];
  for (std::size_t i = 1; i < k; ++i) top = Formula::disjunction(top, disjuncts[i]);

  Formula bottom = Formula::negation(top);
  if (k >= 3) {
    bottom = Formula::negation(disjuncts[0]);
    for (std::size_t i = 1; i < k; ++i) {
      bottom = Formula::conjunction(bottom, Formula::negation(disjuncts[i]));
    }
  }

  std::vector<DiagramVertex> vertices;
  vertices.push_back({"top", top.text(), top});
  for (std::size_t i = 0; i < k; ++i) {
    vertices.push_back({"d" + std::to_string(i + 1), disjuncts[i].text(), disjuncts[i]});
  }
  for (std::size_t i = 0; i < k; ++i) {
    Formula neg = Formula::negation(disjuncts[i]);
    vertices.push_back({"n" + std::to_string(i + 1), neg.text(), neg});
  }
  vertices.push_back({"bottom", bottom.text(), bottom});

  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      OppositionRelation rel =
          classify(vertices[i].formula, vertices[j].formula, effective, u);
      switch (rel.kind) {
        case RelationKind::Contradictory:
          edges.push_back({vertices[i].id, vertices[j].id, EdgeKind::Contradictory});
          break;
        case RelationKind::Contrary:
          edges.push_back({vertices[i].id, vertices[j].id, EdgeKind::Contrary});
          break;
        case RelationKind::Subcontrary:
          edges.push_back({vertices[i].id, vertices[j].id, EdgeKind::Subcontrary});
          break;
        case RelationKind::SubalternationLeftToRight:
          edges.push_back({vertices[i].id, vertices[j].id, EdgeKind::Subalternation});
          break;
        case RelationKind::SubalternationRightToLeft:
          edges.push_back({vertices[j].id, vertices[i].id, EdgeKind::Subalternation});
          break;
        default:
          break;
      }
    }
  }

  return OppositionDiagram(std::move(u), std::move(effective), std::move(vertices),
                           std::move(edges));
}

VerificationReport verify(const OppositionDiagram& d) {
  const AtomUniverse& u = d.universe();
  VerificationReport report;
  for (PairKind k :
       {PairKind::Contradictory, PairKind::Contrary, PairKind::Subcontrary,
        PairKind::Subalternation, PairKind::Equivalent, PairKind::Unconnected,
        PairKind::Degenerate}) {
    report.partitionCounts[k] = 0;
  }

  for (const DiagramEdge& e : d.edges()) {
    OppositionRelation rel =
        classify(d.vertex(e.src).formula, d.vertex(e.dst).formula, d.constraint(), u);
    bool ok = false;
    std::optional<Valuation> witness;
    switch (e.kind) {
      case EdgeKind::Contradictory:
        ok = rel.kind == RelationKind::Contradictory;
        if (!ok) witness = rel.bothTrue ? rel.bothTrue : rel.bothFalse;
        break;
      case EdgeKind::Contrary:
        ok = rel.kind == RelationKind::Contrary;
        if (!ok) witness = rel.bothTrue;
        break;
      case EdgeKind::Subcontrary:
        ok = rel.kind == RelationKind::Subcontrary;
        if (!ok) witness = rel.bothFalse;
        break;
      case EdgeKind::Subalternation:
        ok = rel.kind == RelationKind::SubalternationLeftToRight;
        if (!ok) witness = rel.firstOnly;
        break;
    }
    report.perEdge.push_back({e, ok, rel.kind, ok ? std::nullopt : witness});
  }

  std::set<std::pair<std::string, std::string>> covered;
  for (const DiagramEdge& e : d.edges()) {
    covered.insert({std::min(e.src, e.dst), std::max(e.src, e.dst)});
  }

  const auto& vs = d.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      OppositionRelation rel =
          classify(vs[i].formula, vs[j].formula, d.constraint(), u);
      ++report.partitionCounts[bucket(rel.kind)];
      if (rel.kind == RelationKind::Unconnected) continue;
      if (!covered.count({std::min(vs[i].id, vs[j].id), std::max(vs[i].id, vs[j].id)})) {
        report.missingPairs.push_back({vs[i].id, vs[j].id, rel.kind});
      }
    }
  }
  return report;
}

bool VerificationReport::clean() const {
  if (!missingPairs.empty()) return false;
  for (const EdgeVerdict& v : perEdge) {
    if (!v.confirmed) return false;
  }
  return true;
}

bool DegeneracyReport::clean(std::size_t vertexCount) const {
  return equivalentPairs.empty() && nonContingentVertices.empty() &&
         failedContrarieties.empty() && collapsedOrder == vertexCount;
}

DegeneracyReport detect_degeneracies(const OppositionDiagram& d) {
  const AtomUniverse& u = d.universe();
  TruthTable gamma = truth_table(d.constraint(), u);
  if (!gamma.any()) throw UnsatisfiableConstraintError();

  const auto& vs = d.vertices();
  std::vector<TruthTable> restricted;
  restricted.reserve(vs.size());
  for (const DiagramVertex& v : vs) restricted.push_back(truth_table(v.formula, u) & gamma);

  DegeneracyReport report;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (restricted[i] == restricted[j]) {
        report.equivalentPairs.push_back({std::min(vs[i].id, vs[j].id),
                                          std::max(vs[i].id, vs[j].id)});
      }
    }
  }
  std::sort(report.equivalentPairs.begin(), report.equivalentPairs.end());

  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!restricted[i].any() || restricted[i] == gamma) {
      report.nonContingentVertices.push_back(vs[i].id);
    }
  }
  std::sort(report.nonContingentVertices.begin(), report.nonContingentVertices.end());

  for (const DiagramEdge& e : d.edges()) {
    if (e.kind != EdgeKind::Contrary) continue;
    TruthTable both = truth_table(d.vertex(e.src).formula, u) &
                      truth_table(d.vertex(e.dst).formula, u) & gamma;
    if (auto witness = both.least_true()) {
      report.failedContrarieties.push_back({e.src, e.dst, *witness});
    }
  }

  std::vector<const TruthTable*> classes;
  for (const TruthTable& t : restricted) {
    bool seen = false;
    for (const TruthTable* c : classes) {
      if (*c == t) { seen = true; break; }
    }
    if (!seen) classes.push_back(&t);
  }
  report.collapsedOrder = classes.size();
  return report;
}

OppositionDiagram collapse(const OppositionDiagram& d) {
  const AtomUniverse& u = d.universe();
  TruthTable gamma = truth_table(d.constraint(), u);
  if (!gamma.any()) throw UnsatisfiableConstraintError();

  const auto& vs = d.vertices();
  std::vector<TruthTable> restricted;
  restricted.reserve(vs.size());
  for (const DiagramVertex& v : vs) restricted.push_back(truth_table(v.formula, u) & gamma);

  // Classes in first-occurrence order; each holds member indices.
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (restricted[cls.front()] == restricted[i]) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }

  std::vector<DiagramVertex> quotient;
  for (const auto& cls : classes) {
    std::size_t rep = cls.front();
    for (std::size_t i : cls) {
      if (std::tuple(vs[i].label, vs[i].id) < std::tuple(vs[rep].label, vs[rep].id)) rep = i;
    }
    std::vector<std::string> labels;
    for (std::size_t i : cls) labels.push_back(vs[i].label);
    std::sort(labels.begin(), labels.end());
    std::string joined = labels.front();
    for (std::size_t i = 1; i < labels.size(); ++i) joined += " / " + labels[i];
    quotient.push_back({vs[rep].id, std::move(joined), vs[rep].formula});
  }

  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < quotient.size(); ++i) {
    for (std::size_t j = i + 1; j < quotient.size(); ++j) {
      OppositionRelation rel =
          classify(quotient[i].formula, quotient[j].formula, d.constraint(), u);
      switch (rel.kind) {
        case RelationKind::Contradictory:
          edges.push_back({quotient[i].id, quotient[j].id, EdgeKind::Contradictory});
          break;
        case RelationKind::Contrary:
          edges.push_back({quotient[i].id, quotient[j].id, EdgeKind::Contrary});
          break;
        case RelationKind::Subcontrary:
          edges.push_back({quotient[i].id, quotient[j].id, EdgeKind::Subcontrary});
          break;
        case RelationKind::SubalternationLeftToRight:
          edges.push_back({quotient[i].id, quotient[j].id, EdgeKind::Subalternation});
          break;
        case RelationKind::SubalternationRightToLeft:
          edges.push_back({quotient[j].id, quotient[i].id, EdgeKind::Subalternation});
          break;
        default:
          break;
      }
    }
  }

  return OppositionDiagram(u, d.constraint(), std::move(quotient), std::move(edges));
}

}  // namespace oppgeo
