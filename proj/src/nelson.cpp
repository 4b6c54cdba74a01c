#include "oppgeo/nelson.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "oppgeo/errors.hpp"

namespace oppgeo {

const char* role_name(Role role) {
  switch (role) {
    case Role::SharedDisjunctivePremiss: return "shared_disjunctive_premiss";
    case Role::FactualPremiss: return "factual_premiss";
    case Role::FalseConsequence: return "false_consequence";
    case Role::CorrectConclusion: return "correct_conclusion";
  }
  return "?";
}

NelsonDiagram::NelsonDiagram(AtomUniverse universe, Formula constraint,
                             std::vector<NelsonVertex> vertices,
                             std::vector<NelsonArrow> arrows)
    : universe_(std::move(universe)),
      constraint_(std::move(constraint)),
      vertices_(std::move(vertices)),
      arrows_(std::move(arrows)) {
  std::map<std::string, Role> roles;
  std::size_t shared = 0, factual = 0, consequence = 0, conclusion = 0;
  for (const NelsonVertex& v : vertices_) {
    if (!roles.emplace(v.id, v.role).second) {
      throw InvalidDiagramError("duplicate vertex id '" + v.id + "'");
    }
    switch (v.role) {
      case Role::SharedDisjunctivePremiss: ++shared; break;
      case Role::FactualPremiss: ++factual; break;
      case Role::FalseConsequence: ++consequence; break;
      case Role::CorrectConclusion: ++conclusion; break;
    }
  }
  if (shared != 1) {
    throw InvalidDiagramError("need exactly one shared disjunctive premiss, found " +
                              std::to_string(shared));
  }
  if (conclusion != 1) {
    throw InvalidDiagramError("need exactly one correct conclusion, found " +
                              std::to_string(conclusion));
  }
  if (consequence == 0 || (factual != consequence && factual + 1 != consequence)) {
    throw InvalidDiagramError(
        "with " + std::to_string(consequence) + " false consequences there must be " +
        std::to_string(consequence) + " or " + std::to_string(consequence) +
        "-1 factual premisses, found " + std::to_string(factual));
  }
  for (const NelsonArrow& a : arrows_) {
    auto src = roles.find(a.src);
    auto dst = roles.find(a.dst);
    if (src == roles.end()) throw InvalidDiagramError("arrow source '" + a.src + "' is not a vertex");
    if (dst == roles.end()) throw InvalidDiagramError("arrow target '" + a.dst + "' is not a vertex");
    if (src->second != Role::SharedDisjunctivePremiss && src->second != Role::FactualPremiss) {
      throw InvalidDiagramError("arrow source '" + a.src + "' must be a premiss");
    }
    if (dst->second != Role::FalseConsequence && dst->second != Role::CorrectConclusion) {
      throw InvalidDiagramError("arrow target '" + a.dst + "' must be a consequence");
    }
  }
  std::sort(arrows_.begin(), arrows_.end(), [](const NelsonArrow& a, const NelsonArrow& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
}

bool NelsonDiagram::has_vertex(const std::string& id) const {
  for (const NelsonVertex& v : vertices_) {
    if (v.id == id) return true;
  }
  return false;
}

const NelsonVertex& NelsonDiagram::vertex(const std::string& id) const {
  for (const NelsonVertex& v : vertices_) {
    if (v.id == id) return v;
  }
  throw InvalidDiagramError("no vertex '" + id + "'");
}

std::size_t NelsonDiagram::disjunct_count() const {
  std::size_t k = 0;
  for (const NelsonVertex& v : vertices_) {
    if (v.role == Role::FalseConsequence) ++k;
  }
  return k;
}

namespace {

Formula conjoin(Formula acc, Formula next) {
  if (acc.kind() == FormulaKind::Top) return next;
  return Formula::conjunction(std::move(acc), std::move(next));
}

Formula exclusivity(Formula base, const std::vector<Formula>& disjuncts) {
  for (std::size_t i = 0; i < disjuncts.size(); ++i) {
    for (std::size_t j = i + 1; j < disjuncts.size(); ++j) {
      base = conjoin(std::move(base),
                     Formula::negation(Formula::conjunction(disjuncts[i], disjuncts[j])));
    }
  }
  return base;
}

// Structural negation match in either direction, so p / !p pairs up no
// matter which side carries the negation sign.
bool negation_of(const Formula& a, const Formula& b) {
  return a == Formula::negation(b) || b == Formula::negation(a);
}

void flatten(const Formula& f, FormulaKind op, std::vector<Formula>& out) {
  if (f.kind() == op) {
    flatten(f.left(), op, out);
    flatten(f.right(), op, out);
  } else {
    out.push_back(f);
  }
}

std::vector<std::string> sorted_texts(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const Formula& f : fs) out.push_back(f.text());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

NelsonDiagram build_nelson(const std::vector<Formula>& disjuncts,
                           const Formula& constraint, bool includeAllNegations) {
  const std::size_t k = disjuncts.size();
  if (k != 2 && k != 3) throw UnsupportedArityError(k);
  const bool dropLast = !includeAllNegations && k == 3;

  Formula effective = exclusivity(constraint, disjuncts);

  std::vector<Formula> all = disjuncts;
  all.push_back(effective);
  AtomUniverse u = universe_of(all);

  TruthTable gamma = truth_table(effective, u);
  if (!gamma.any()) throw UnsatisfiableConstraintError();
  for (std::size_t i = 0; i < k; ++i) {
    TruthTable t = truth_table(disjuncts[i], u) & gamma;
    if (!t.any() || t == gamma) {
      throw DegenerateDisjunctError("disjunct " + std::to_string(i + 1) +
                                    " is constant under the constraint");
    }
  }

  // The seven-vertex form treats the first two disjuncts as the stated
  // dichotomy; the third is the false way out, rejected without a premiss of
  // its own. Its shared premiss and conclusion therefore mention only the
  // dichotomy, which is exactly what keeps every inference below valid.
  const std::size_t stated = dropLast ? 2 : k;

  Formula top = disjuncts[0];
  for (std::size_t i = 1; i < stated; ++i) top = Formula::disjunction(top, disjuncts[i]);

  Formula conclusion = Formula::negation(top);
  if (stated >= 3) {
    conclusion = Formula::negation(disjuncts[0]);
    for (std::size_t i = 1; i < stated; ++i) {
      conclusion = Formula::conjunction(conclusion, Formula::negation(disjuncts[i]));
    }
  }

  std::vector<NelsonVertex> vertices;
  vertices.push_back({"top", top.text(), top, Role::SharedDisjunctivePremiss});
  for (std::size_t i = 0; i < k; ++i) {
    vertices.push_back({"d" + std::to_string(i + 1), disjuncts[i].text(), disjuncts[i],
                        Role::FalseConsequence});
  }
  const std::size_t negations = dropLast ? 2 : k;
  for (std::size_t i = 0; i < negations; ++i) {
    Formula neg = Formula::negation(disjuncts[i]);
    vertices.push_back({"n" + std::to_string(i + 1), neg.text(), neg, Role::FactualPremiss});
  }
  vertices.push_back({"concl", conclusion.text(), conclusion, Role::CorrectConclusion});

  std::vector<NelsonArrow> arrows;
  for (std::size_t i = 0; i < k; ++i) {
    arrows.push_back({"top", "d" + std::to_string(i + 1)});
    for (std::size_t j = 0; j < negations; ++j) {
      if (j != i) arrows.push_back({"n" + std::to_string(j + 1), "d" + std::to_string(i + 1)});
    }
  }
  for (std::size_t j = 0; j < negations; ++j) {
    arrows.push_back({"n" + std::to_string(j + 1), "concl"});
  }

  return NelsonDiagram(std::move(u), std::move(effective), std::move(vertices),
                       std::move(arrows));
}

bool InferenceReport::all_valid() const {
  for (const InferenceCheck& c : perConclusion) {
    if (!c.valid) return false;
  }
  return true;
}

InferenceReport validate_inferences(const NelsonDiagram& n) {
  std::vector<Formula> disjuncts;
  for (const NelsonVertex& v : n.vertices()) {
    if (v.role == Role::FalseConsequence) disjuncts.push_back(v.formula);
  }
  Formula effective = exclusivity(n.constraint(), disjuncts);
  if (!truth_table(effective, n.universe()).any()) throw UnsatisfiableConstraintError();

  InferenceReport report;
  for (const NelsonVertex& v : n.vertices()) {
    if (v.role != Role::FalseConsequence && v.role != Role::CorrectConclusion) continue;
    std::vector<std::string> premissIds;
    std::vector<Formula> premisses;
    for (const NelsonArrow& a : n.arrows()) {
      if (a.dst != v.id) continue;
      premissIds.push_back(a.src);
      premisses.push_back(n.vertex(a.src).formula);
    }
    if (premissIds.empty()) continue;
    auto counterexample = entailment_counterexample(premisses, v.formula, effective);
    report.perConclusion.push_back(
        {v.id, std::move(premissIds), !counterexample.has_value(), counterexample});
  }
  return report;
}

OppositionDiagram untwist(const NelsonDiagram& n) {
  std::vector<Formula> disjuncts;
  for (const NelsonVertex& v : n.vertices()) {
    if (v.role == Role::FalseConsequence) disjuncts.push_back(v.formula);
  }
  Formula effective = exclusivity(n.constraint(), disjuncts);

  std::vector<DiagramVertex> vertices;
  for (const NelsonVertex& v : n.vertices()) vertices.push_back({v.id, v.label, v.formula});

  // The seven-vertex form omits a disjunct's negation; restore it so the
  // opposition structure is complete.
  for (const NelsonVertex& v : n.vertices()) {
    if (v.role != Role::FalseConsequence) continue;
    bool matched = false;
    for (const NelsonVertex& g : n.vertices()) {
      if (g.role == Role::FactualPremiss && negation_of(g.formula, v.formula)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      Formula neg = Formula::negation(v.formula);
      vertices.push_back({"synth_" + v.id, "(synthesized) " + neg.text(), neg});
    }
  }

  std::vector<DiagramEdge> edges;
  std::set<std::pair<std::string, std::string>> covered;
  for (const NelsonArrow& a : n.arrows()) {
    edges.push_back({a.dst, a.src, EdgeKind::Subalternation});
    covered.insert({std::min(a.src, a.dst), std::max(a.src, a.dst)});
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (covered.count({std::min(vertices[i].id, vertices[j].id),
                         std::max(vertices[i].id, vertices[j].id)})) {
        continue;
      }
      OppositionRelation rel =
          classify(vertices[i].formula, vertices[j].formula, effective, n.universe());
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

  return OppositionDiagram(n.universe(), n.constraint(), std::move(vertices),
                           std::move(edges));
}

NelsonDiagram twist(const OppositionDiagram& d) {
  const auto& vs = d.vertices();
  if (vs.size() != 6 && vs.size() != 8) {
    throw NotAnOppositionStructureError("expected 6 or 8 vertices, got " +
                                        std::to_string(vs.size()));
  }
  const std::size_t k = vs.size() / 2 - 1;

  // Try each disjunction-rooted vertex as the shared premiss and match the
  // rest of the shape around it.
  for (std::size_t t = 0; t < vs.size(); ++t) {
    if (vs[t].formula.kind() != FormulaKind::Or) continue;
    std::vector<Formula> parts;
    flatten(vs[t].formula, FormulaKind::Or, parts);
    if (parts.size() != k) continue;

    std::vector<std::size_t> disjunctIdx;
    std::set<std::size_t> used{t};
    bool ok = true;
    for (const Formula& part : parts) {
      bool found = false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (used.count(i) || vs[i].formula != part) continue;
        disjunctIdx.push_back(i);
        used.insert(i);
        found = true;
        break;
      }
      if (!found) { ok = false; break; }
    }
    if (!ok) continue;

    std::vector<std::size_t> premissIdx;
    for (std::size_t di : disjunctIdx) {
      bool found = false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (used.count(i) || !negation_of(vs[i].formula, vs[di].formula)) continue;
        premissIdx.push_back(i);
        used.insert(i);
        found = true;
        break;
      }
      if (!found) { ok = false; break; }
    }
    if (!ok) continue;

    std::size_t conclIdx = vs.size();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!used.count(i)) { conclIdx = i; break; }
    }
    if (conclIdx == vs.size()) continue;

    // The conclusion is either the negated disjunction or the conjunction of
    // the negations; both shapes are accepted.
    std::vector<Formula> disjunctForms, premissForms;
    for (std::size_t i : disjunctIdx) disjunctForms.push_back(vs[i].formula);
    for (std::size_t i : premissIdx) premissForms.push_back(vs[i].formula);
    bool conclOk = false;
    const Formula& cf = vs[conclIdx].formula;
    if (cf.kind() == FormulaKind::Not) {
      std::vector<Formula> inner;
      flatten(cf.left(), FormulaKind::Or, inner);
      conclOk = sorted_texts(inner) == sorted_texts(disjunctForms);
    }
    if (!conclOk) {
      std::vector<Formula> inner;
      flatten(cf, FormulaKind::And, inner);
      conclOk = sorted_texts(inner) == sorted_texts(premissForms);
    }
    if (!conclOk) continue;

    std::set<std::pair<std::string, std::string>> expected;
    for (std::size_t i = 0; i < k; ++i) {
      expected.insert({vs[t].id, vs[disjunctIdx[i]].id});
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) expected.insert({vs[premissIdx[j]].id, vs[disjunctIdx[i]].id});
      }
      expected.insert({vs[premissIdx[i]].id, vs[conclIdx].id});
    }

    std::vector<NelsonArrow> arrows;
    for (const DiagramEdge& e : d.edges()) {
      if (e.kind != EdgeKind::Subalternation) continue;
      if (expected.count({e.dst, e.src})) arrows.push_back({e.dst, e.src});
    }

    std::vector<NelsonVertex> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Role role = Role::FalseConsequence;
      if (i == t) {
        role = Role::SharedDisjunctivePremiss;
      } else if (i == conclIdx) {
        role = Role::CorrectConclusion;
      } else if (std::find(premissIdx.begin(), premissIdx.end(), i) != premissIdx.end()) {
        role = Role::FactualPremiss;
      }
      vertices.push_back({vs[i].id, vs[i].label, vs[i].formula, role});
    }

    return NelsonDiagram(d.universe(), d.constraint(), std::move(vertices),
                         std::move(arrows));
  }

  throw NotAnOppositionStructureError(
      "no vertex is a disjunction of " + std::to_string(k) +
      " other vertices with matching negations and conclusion");
}

std::optional<CubeMapping> check_cube_isomorphism(const NelsonDiagram& n) {
  const auto& vs = n.vertices();
  if (vs.size() != 8) throw WrongVertexCountError(8, vs.size());

  std::set<std::pair<std::size_t, std::size_t>> edges;
  auto index_of = [&](const std::string& id) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].id == id) return i;
    }
    return vs.size();
  };
  for (const NelsonArrow& a : n.arrows()) {
    std::size_t i = index_of(a.src), j = index_of(a.dst);
    edges.insert({std::min(i, j), std::max(i, j)});
  }
  if (edges.size() != 12) return std::nullopt;

  std::vector<std::vector<bool>> adj(8, std::vector<bool>(8, false));
  std::vector<int> degree(8, 0);
  for (auto [i, j] : edges) {
    adj[i][j] = adj[j][i] = true;
    ++degree[i];
    ++degree[j];
  }
  for (int deg : degree) {
    if (deg != 3) return std::nullopt;
  }

  // Antipodal partners: shared premiss with conclusion, each consequence
  // with its negation premiss.
  std::vector<int> partner(8, -1);
  bool complete = true;
  {
    std::size_t shared = 8, concl = 8;
    for (std::size_t i = 0; i < 8; ++i) {
      if (vs[i].role == Role::SharedDisjunctivePremiss) shared = i;
      if (vs[i].role == Role::CorrectConclusion) concl = i;
    }
    partner[shared] = static_cast<int>(concl);
    partner[concl] = static_cast<int>(shared);
    for (std::size_t i = 0; i < 8; ++i) {
      if (vs[i].role != Role::FalseConsequence) continue;
      for (std::size_t j = 0; j < 8; ++j) {
        if (vs[j].role == Role::FactualPremiss && partner[j] < 0 &&
            negation_of(vs[i].formula, vs[j].formula)) {
          partner[i] = static_cast<int>(j);
          partner[j] = static_cast<int>(i);
          break;
        }
      }
      if (partner[i] < 0) complete = false;
    }
  }

  // Backtracking corner assignment. Cube corners are bit triples; adjacency
  // is hamming distance 1 and the antipode of c is c ^ 7.
  std::vector<int> corner(8, -1);
  std::vector<bool> cornerUsed(8, false);

  auto hamming1 = [](int a, int b) {
    int x = a ^ b;
    return x != 0 && (x & (x - 1)) == 0;
  };

  std::function<bool(std::size_t, bool)> place = [&](std::size_t v, bool constrained) -> bool {
    if (v == 8) return true;
    for (int c = 0; c < 8; ++c) {
      if (cornerUsed[c]) continue;
      if (constrained && partner[v] >= 0 && corner[partner[v]] >= 0 &&
          corner[partner[v]] != (c ^ 7)) {
        continue;
      }
      bool fits = true;
      for (std::size_t w = 0; w < v; ++w) {
        if (adj[v][w] != hamming1(c, corner[w])) { fits = false; break; }
      }
      if (!fits) continue;
      corner[v] = c;
      cornerUsed[c] = true;
      if (place(v + 1, constrained)) return true;
      corner[v] = -1;
      cornerUsed[c] = false;
    }
    return false;
  };

  bool found = place(0, true);
  if (!found && !complete) {
    std::fill(corner.begin(), corner.end(), -1);
    std::fill(cornerUsed.begin(), cornerUsed.end(), false);
    found = place(0, false);
  }
  if (!found) return std::nullopt;

  CubeMapping mapping;
  for (std::size_t i = 0; i < 8; ++i) mapping.cornerOf[vs[i].id] = corner[i];
  return mapping;
}

}  // namespace oppgeo
