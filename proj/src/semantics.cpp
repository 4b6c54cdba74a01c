#include "oppgeo/semantics.hpp"

#include <algorithm>

#include "oppgeo/errors.hpp"

namespace oppgeo {

namespace {
constexpr std::size_t kAtomLimit = 24;
}

AtomUniverse::AtomUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  if (names_.size() > kAtomLimit) throw AtomLimitError(names_.size());
}

AtomUniverse AtomUniverse::merged(const AtomUniverse& a, const AtomUniverse& b) {
  std::vector<std::string> all = a.names_;
  all.insert(all.end(), b.names_.begin(), b.names_.end());
  return AtomUniverse(std::move(all));
}

bool AtomUniverse::contains(const std::string& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

std::size_t AtomUniverse::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) throw UnknownAtomError(name);
  return static_cast<std::size_t>(it - names_.begin());
}

Valuation::Valuation(AtomUniverse universe, std::uint32_t rank)
    : universe_(std::move(universe)), rank_(rank) {}

bool Valuation::value(const std::string& atom) const {
  return value_at(universe_.index_of(atom));
}

std::string Valuation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (i > 0) out += ' ';
    out += universe_.names()[i];
    out += value_at(i) ? "=true" : "=false";
  }
  return out;
}

TruthTable::TruthTable(AtomUniverse universe, std::vector<bool> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_.valuation_count()) {
    throw Error("truth table length " + std::to_string(values_.size()) +
                " does not match universe of " + std::to_string(universe_.size()) +
                " atoms");
  }
}

TruthTable TruthTable::constant(AtomUniverse universe, bool value) {
  std::vector<bool> values(std::size_t{1} << universe.size(), value);
  return TruthTable(std::move(universe), std::move(values));
}

bool TruthTable::any() const {
  return std::find(values_.begin(), values_.end(), true) != values_.end();
}

bool TruthTable::all() const {
  return std::find(values_.begin(), values_.end(), false) == values_.end();
}

TruthTable TruthTable::operator~() const {
  std::vector<bool> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = !values_[i];
  return TruthTable(universe_, std::move(out));
}

TruthTable TruthTable::operator&(const TruthTable& other) const {
  std::vector<bool> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] && other.values_[i];
  return TruthTable(universe_, std::move(out));
}

TruthTable TruthTable::operator|(const TruthTable& other) const {
  std::vector<bool> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] || other.values_[i];
  return TruthTable(universe_, std::move(out));
}

std::optional<Valuation> TruthTable::least_true() const {
  // The tuple order weights the first atom most, so compare ranks by their
  // bit-reversal within the universe width.
  const std::size_t n = universe_.size();
  std::optional<std::uint32_t> best_rank;
  std::uint32_t best_key = 0;
  for (std::uint32_t rank = 0; rank < values_.size(); ++rank) {
    if (!values_[rank]) continue;
    std::uint32_t key = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((rank >> k) & 1u) key |= std::uint32_t{1} << (n - 1 - k);
    }
    if (!best_rank || key < best_key) {
      best_rank = rank;
      best_key = key;
    }
  }
  if (!best_rank) return std::nullopt;
  return Valuation(universe_, *best_rank);
}

AtomUniverse universe_of(const std::vector<Formula>& formulas) {
  std::vector<std::string> names;
  for (const Formula& f : formulas) {
    auto a = f.atoms();
    names.insert(names.end(), a.begin(), a.end());
  }
  return AtomUniverse(std::move(names));
}

TruthTable truth_table(const Formula& f, const AtomUniverse& u) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::size_t index = u.index_of(f.atom_name());
      std::vector<bool> values(u.valuation_count());
      for (std::uint32_t rank = 0; rank < values.size(); ++rank) {
        values[rank] = (rank >> index) & 1u;
      }
      return TruthTable(u, std::move(values));
    }
    case FormulaKind::Top:
      return TruthTable::constant(u, true);
    case FormulaKind::Bottom:
      return TruthTable::constant(u, false);
    case FormulaKind::Not:
      return ~truth_table(f.left(), u);
    case FormulaKind::And:
      return truth_table(f.left(), u) & truth_table(f.right(), u);
    case FormulaKind::Or:
      return truth_table(f.left(), u) | truth_table(f.right(), u);
    case FormulaKind::Implies:
      return ~truth_table(f.left(), u) | truth_table(f.right(), u);
    case FormulaKind::Iff: {
      TruthTable a = truth_table(f.left(), u);
      TruthTable b = truth_table(f.right(), u);
      return (a & b) | (~a & ~b);
    }
  }
  throw Error("unreachable formula kind");
}

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case FormulaKind::Atom: return v.value(f.atom_name());
    case FormulaKind::Top: return true;
    case FormulaKind::Bottom: return false;
    case FormulaKind::Not: return !evaluate(f.left(), v);
    case FormulaKind::And: return evaluate(f.left(), v) && evaluate(f.right(), v);
    case FormulaKind::Or: return evaluate(f.left(), v) || evaluate(f.right(), v);
    case FormulaKind::Implies: return !evaluate(f.left(), v) || evaluate(f.right(), v);
    case FormulaKind::Iff: return evaluate(f.left(), v) == evaluate(f.right(), v);
  }
  throw Error("unreachable formula kind");
}

bool equivalent(const Formula& a, const Formula& b) {
  AtomUniverse u = universe_of({a, b});
  return truth_table(a, u) == truth_table(b, u);
}

std::optional<Valuation> entailment_counterexample(const std::vector<Formula>& premises,
                                                   const Formula& conclusion,
                                                   const Formula& constraint) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  all.push_back(constraint);
  AtomUniverse u = universe_of(all);

  TruthTable bad = truth_table(constraint, u) & ~truth_table(conclusion, u);
  for (const Formula& p : premises) bad = bad & truth_table(p, u);
  return bad.least_true();
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             const Formula& constraint) {
  return !entailment_counterexample(premises, conclusion, constraint).has_value();
}

}  // namespace oppgeo
