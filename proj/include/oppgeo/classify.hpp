#pragma once

#include <optional>
#include <string>

#include "oppgeo/formula.hpp"
#include "oppgeo/semantics.hpp"

namespace oppgeo {

// The Aristotelian relation taxonomy, extended with the three outcomes
// needed to report broken diagrams: Equivalent (identical restricted
// tables, so none of the classical relations apply strictly), Unconnected
// (all four joint possibilities realizable), and Degenerate (a side is
// constant under the constraint).
enum class RelationKind {
  Contradictory,
  Contrary,
  Subcontrary,
  SubalternationLeftToRight,
  SubalternationRightToLeft,
  Equivalent,
  Unconnected,
  Degenerate,
};

const char* relation_kind_name(RelationKind kind);

// Result of classifying a pair (a, b) relative to a constraint. Each of the
// four joint-truth possibilities carries its least witness valuation when
// realizable under the constraint:
//
//   bothTrue   a and b        bothFalse  !a and !b
//   firstOnly  a and !b       secondOnly !a and b
struct OppositionRelation {
  RelationKind kind;
  std::optional<Valuation> bothTrue;
  std::optional<Valuation> bothFalse;
  std::optional<Valuation> firstOnly;
  std::optional<Valuation> secondOnly;
};

// Classifies over the valuations satisfying the constraint:
//
//   either side constant        -> Degenerate
//   identical restricted tables -> Equivalent
//   !BT & !BF                   -> Contradictory
//   !BT &  BF                   -> Contrary
//    BT & !BF                   -> Subcontrary
//    BT &  BF & !FO             -> SubalternationLeftToRight  (a entails b)
//    BT &  BF & !SO             -> SubalternationRightToLeft  (b entails a)
//   otherwise                   -> Unconnected
//
// where BT/BF/FO/SO is the realizability of the corresponding possibility.
// Throws UnsatisfiableConstraintError when the constraint has no model.
OppositionRelation classify(const Formula& a, const Formula& b,
                            const Formula& constraint);

// Same, over a caller-supplied universe (which must cover all atoms), so a
// diagram's pairs are all classified against one valuation space.
OppositionRelation classify(const Formula& a, const Formula& b,
                            const Formula& constraint, const AtomUniverse& u);

}  // namespace oppgeo
