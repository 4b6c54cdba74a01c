#include "oppgeo/classify.hpp"

#include "oppgeo/errors.hpp"

namespace oppgeo {

const char* relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Contradictory: return "Contradictory";
    case RelationKind::Contrary: return "Contrary";
    case RelationKind::Subcontrary: return "Subcontrary";
    case RelationKind::SubalternationLeftToRight: return "SubalternationLeftToRight";
    case RelationKind::SubalternationRightToLeft: return "SubalternationRightToLeft";
    case RelationKind::Equivalent: return "Equivalent";
    case RelationKind::Unconnected: return "Unconnected";
    case RelationKind::Degenerate: return "Degenerate";
  }
  return "?";
}

OppositionRelation classify(const Formula& a, const Formula& b,
                            const Formula& constraint) {
  return classify(a, b, constraint, universe_of({a, b, constraint}));
}

OppositionRelation classify(const Formula& a, const Formula& b,
                            const Formula& constraint, const AtomUniverse& u) {
  TruthTable gamma = truth_table(constraint, u);
  if (!gamma.any()) throw UnsatisfiableConstraintError();

  TruthTable ta = truth_table(a, u);
  TruthTable tb = truth_table(b, u);

  OppositionRelation rel{};
  rel.bothTrue = (ta & tb & gamma).least_true();
  rel.bothFalse = (~ta & ~tb & gamma).least_true();
  rel.firstOnly = (ta & ~tb & gamma).least_true();
  rel.secondOnly = (~ta & tb & gamma).least_true();

  const bool bt = rel.bothTrue.has_value();
  const bool bf = rel.bothFalse.has_value();
  const bool fo = rel.firstOnly.has_value();
  const bool so = rel.secondOnly.has_value();

  // A side is constant when it never varies across the constraint's models.
  const bool a_const = !(bt || fo) || !(bf || so);
  const bool b_const = !(bt || so) || !(bf || fo);

  if (a_const || b_const) {
    rel.kind = RelationKind::Degenerate;
  } else if (!fo && !so) {
    rel.kind = RelationKind::Equivalent;
  } else if (!bt && !bf) {
    rel.kind = RelationKind::Contradictory;
  } else if (!bt) {
    rel.kind = RelationKind::Contrary;
  } else if (!bf) {
    rel.kind = RelationKind::Subcontrary;
  } else if (!fo) {
    rel.kind = RelationKind::SubalternationLeftToRight;
  } else if (!so) {
    rel.kind = RelationKind::SubalternationRightToLeft;
  } else {
    rel.kind = RelationKind::Unconnected;
  }
  return rel;
}

}  // namespace oppgeo
