#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace oppgeo {

enum class FormulaKind { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

// An immutable propositional formula. Nodes are shared_ptr-linked and never
// mutated after construction, so copies are cheap and subtrees may be shared
// freely across formulas and threads.
class Formula {
public:
  struct Node {
    FormulaKind kind;
    std::string name;       // Atom only
    std::shared_ptr<const Node> left;   // unary child or left child
    std::shared_ptr<const Node> right;  // binary right child
  };

  // Factories. Atom names must match [A-Za-z_][A-Za-z0-9_]* and must not be
  // the reserved words "true"/"false"; parse() enforces this, the factory
  // trusts its caller.
  static Formula atom(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula biconditional(Formula a, Formula b);

  FormulaKind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  // Canonical text with minimal parentheses: `!` binds tightest, then `&`,
  // `|`, `->`, `<->`; the arrows are right-associative, `&`/`|` associate
  // left. parse(text()) always reproduces the same tree.
  std::string text() const;

  // Distinct atom names, sorted.
  std::vector<std::string> atoms() const;

  // Structural equality (same tree, not logical equivalence).
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Parses the concrete syntax. Grammar, loosest first:
//
//   iff     := implies ("<->" iff)?
//   implies := or ("->" implies)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "(" iff ")" | "true" | "false" | atom
//
// Unicode aliases are accepted on input and never emitted: ¬ for !, ∧ for &,
// ∨ for |, → for ->, ↔ for <->, ⊤ for true, ⊥ for false.
// Throws SyntaxError with the byte position and the expected-token set.
Formula parse_formula(std::string_view text);

}  // namespace oppgeo
