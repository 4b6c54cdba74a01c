#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oppgeo/formula.hpp"

namespace oppgeo {

// A fixed, sorted set of atom names. The order is canonical (lexicographic
// on the names) and every valuation/truth-table below is relative to it.
// At most 24 atoms, since truth tables are dense vectors of length 2^n.
class AtomUniverse {
public:
  AtomUniverse() = default;
  explicit AtomUniverse(std::vector<std::string> names);

  static AtomUniverse merged(const AtomUniverse& a, const AtomUniverse& b);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::uint32_t valuation_count() const { return std::uint32_t{1} << names_.size(); }

  bool contains(const std::string& name) const;
  // Position of the atom in canonical order; throws UnknownAtomError.
  std::size_t index_of(const std::string& name) const;

  bool operator==(const AtomUniverse& other) const { return names_ == other.names_; }
  bool operator!=(const AtomUniverse& other) const { return names_ != other.names_; }

private:
  std::vector<std::string> names_;
};

// One row of a truth table, identified by its rank.
//
// Rank encoding (frozen): the valuation of rank i assigns atom k of the
// universe (0-based, canonical order) the value of bit k of i. So the first
// atom toggles fastest as ranks count up.
//
// Note that rank order is NOT the lexicographic order on valuations: viewed
// as the tuple (v(a0), v(a1), ...) with false < true, the first atom is the
// most significant position of the tuple but the least significant bit of
// the rank. "Least valuation" anywhere in this library means tuple order.
class Valuation {
public:
  Valuation(AtomUniverse universe, std::uint32_t rank);

  const AtomUniverse& universe() const { return universe_; }
  std::uint32_t rank() const { return rank_; }

  bool value_at(std::size_t index) const { return (rank_ >> index) & 1u; }
  bool value(const std::string& atom) const;

  // "D=false V=true", atoms in canonical order.
  std::string to_string() const;

  bool operator==(const Valuation& other) const {
    return universe_ == other.universe_ && rank_ == other.rank_;
  }

private:
  AtomUniverse universe_;
  std::uint32_t rank_;
};

// Dense truth table over a universe: values[i] is the formula's value under
// the valuation of rank i.
class TruthTable {
public:
  TruthTable(AtomUniverse universe, std::vector<bool> values);

  static TruthTable constant(AtomUniverse universe, bool value);

  const AtomUniverse& universe() const { return universe_; }
  const std::vector<bool>& values() const { return values_; }
  bool at(std::uint32_t rank) const { return values_[rank]; }

  bool any() const;
  bool all() const;

  // Pointwise operations; both operands must share a universe.
  TruthTable operator~() const;
  TruthTable operator&(const TruthTable& other) const;
  TruthTable operator|(const TruthTable& other) const;

  bool operator==(const TruthTable& other) const {
    return universe_ == other.universe_ && values_ == other.values_;
  }

  // The tuple-lexicographically least valuation the table is true at
  // (see Valuation for the order), or nullopt when the table is empty.
  std::optional<Valuation> least_true() const;

private:
  AtomUniverse universe_;
  std::vector<bool> values_;
};

// The universe spanned by the atoms of the given formulas.
AtomUniverse universe_of(const std::vector<Formula>& formulas);

// Classical evaluation of f at every rank. Throws UnknownAtomError when f
// mentions an atom that u lacks.
TruthTable truth_table(const Formula& f, const AtomUniverse& u);

bool evaluate(const Formula& f, const Valuation& v);

// True iff a and b have identical tables over the union of their atoms.
bool equivalent(const Formula& a, const Formula& b);

// True iff every valuation satisfying the constraint and all premises
// satisfies the conclusion. The universe is the union of all atoms involved.
bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             const Formula& constraint);

// The least valuation satisfying constraint and premises but not the
// conclusion; nullopt when the entailment holds.
std::optional<Valuation> entailment_counterexample(const std::vector<Formula>& premises,
                                                   const Formula& conclusion,
                                                   const Formula& constraint);

}  // namespace oppgeo
