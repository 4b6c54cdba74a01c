#include "oppgeo/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "oppgeo/errors.hpp"

namespace oppgeo {

namespace {

std::shared_ptr<const Formula::Node> make_node(FormulaKind kind,
                                               std::string name,
                                               std::shared_ptr<const Formula::Node> left,
                                               std::shared_ptr<const Formula::Node> right) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

}  // namespace

Formula Formula::atom(std::string name) {
  return Formula(make_node(FormulaKind::Atom, std::move(name), nullptr, nullptr));
}

Formula Formula::top() {
  return Formula(make_node(FormulaKind::Top, {}, nullptr, nullptr));
}

Formula Formula::bottom() {
  return Formula(make_node(FormulaKind::Bottom, {}, nullptr, nullptr));
}

Formula Formula::negation(Formula f) {
  return Formula(make_node(FormulaKind::Not, {}, std::move(f.node_), nullptr));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::And, {}, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Or, {}, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Implies, {}, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::biconditional(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Iff, {}, std::move(a.node_), std::move(b.node_)));
}

namespace {

// Binding strength used by the printer; higher binds tighter.
int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not: return 5;
    default: return 6;
  }
}

// Renders with minimal parentheses: a subterm is parenthesized only when its
// own precedence is below what its position requires. The arrows take their
// own precedence on the right (right-associative), one higher on the left;
// & and | take one higher on the right (left-associative chains stay flat).
std::string render(const Formula& f, int min_prec) {
  std::string body;
  switch (f.kind()) {
    case FormulaKind::Atom: body = f.atom_name(); break;
    case FormulaKind::Top: body = "true"; break;
    case FormulaKind::Bottom: body = "false"; break;
    case FormulaKind::Not: body = "!" + render(f.left(), 5); break;
    case FormulaKind::And:
      body = render(f.left(), 4) + " & " + render(f.right(), 5);
      break;
    case FormulaKind::Or:
      body = render(f.left(), 3) + " | " + render(f.right(), 4);
      break;
    case FormulaKind::Implies:
      body = render(f.left(), 3) + " -> " + render(f.right(), 2);
      break;
    case FormulaKind::Iff:
      body = render(f.left(), 2) + " <-> " + render(f.right(), 1);
      break;
  }
  if (precedence(f.kind()) < min_prec) return "(" + body + ")";
  return body;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out.insert(f.atom_name());
      break;
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      break;
    case FormulaKind::Not:
      collect_atoms(f.left(), out);
      break;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      break;
  }
}

}  // namespace

std::string Formula::text() const { return render(*this, 0); }

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> names;
  collect_atoms(*this, names);
  return std::vector<std::string>(names.begin(), names.end());
}

bool Formula::operator==(const Formula& other) const {
  struct Cmp {
    static bool eq(const Node* a, const Node* b) {
      if (a == b) return true;
      if (a->kind != b->kind) return false;
      switch (a->kind) {
        case FormulaKind::Atom: return a->name == b->name;
        case FormulaKind::Top:
        case FormulaKind::Bottom: return true;
        case FormulaKind::Not: return eq(a->left.get(), b->left.get());
        default:
          return eq(a->left.get(), b->left.get()) &&
                 eq(a->right.get(), b->right.get());
      }
    }
  };
  return Cmp::eq(node_.get(), other.node_.get());
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End, Bad };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Hand-rolled lexer; the only subtlety is the UTF-8 aliases for the
// connectives, matched by their byte sequences.
class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "end of input", start};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok t, std::size_t len) {
      current_ = {t, std::string(text_.substr(start, len)), start};
      pos_ += len;
    };
    if (c == '(') return single(Tok::LParen, 1);
    if (c == ')') return single(Tok::RParen, 1);
    if (c == '!') return single(Tok::Not, 1);
    if (c == '&') return single(Tok::And, 1);
    if (c == '|') return single(Tok::Or, 1);
    if (c == '<' && text_.substr(pos_, 3) == "<->") return single(Tok::Iff, 3);
    if (c == '-' && text_.substr(pos_, 2) == "->") return single(Tok::Implies, 2);
    if (text_.substr(pos_, 2) == "\xc2\xac") return single(Tok::Not, 2);        // ¬
    if (text_.substr(pos_, 3) == "\xe2\x88\xa7") return single(Tok::And, 3);    // ∧
    if (text_.substr(pos_, 3) == "\xe2\x88\xa8") return single(Tok::Or, 3);     // ∨
    if (text_.substr(pos_, 3) == "\xe2\x86\x92") return single(Tok::Implies, 3);// →
    if (text_.substr(pos_, 3) == "\xe2\x86\x94") return single(Tok::Iff, 3);    // ↔
    if (text_.substr(pos_, 3) == "\xe2\x8a\xa4") return single(Tok::True, 3);   // ⊤
    if (text_.substr(pos_, 3) == "\xe2\x8a\xa5") return single(Tok::False, 3);  // ⊥
    if (is_ident_start(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && is_ident_char(text_[end])) ++end;
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "true") {
        current_ = {Tok::True, word, start};
      } else if (word == "false") {
        current_ = {Tok::False, word, start};
      } else {
        current_ = {Tok::Atom, word, start};
      }
      return;
    }
    current_ = {Tok::Bad, std::string(1, c), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

[[noreturn]] void fail(const Token& at, std::vector<std::string> expected) {
  std::string what = at.type == Tok::End ? at.text : "'" + at.text + "'";
  std::string msg = "syntax error at position " + std::to_string(at.pos) +
                    ": unexpected " + what + ", expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += expected.size() == 2 ? " or " : (i + 1 == expected.size() ? ", or " : ", ");
    msg += expected[i];
  }
  throw SyntaxError(at.pos, std::move(what), std::move(expected), msg);
}

const std::vector<std::string> kTermStart = {"'!'", "'('", "'true'", "'false'", "an atom"};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula run() {
    Formula f = iff();
    if (lex_.peek().type != Tok::End) {
      fail(lex_.peek(), {"'&'", "'|'", "'->'", "'<->'", "end of input"});
    }
    return f;
  }

private:
  Formula iff() {
    Formula a = implies();
    if (lex_.peek().type == Tok::Iff) {
      lex_.take();
      return Formula::biconditional(std::move(a), iff());
    }
    return a;
  }

  Formula implies() {
    Formula a = disj();
    if (lex_.peek().type == Tok::Implies) {
      lex_.take();
      return Formula::implication(std::move(a), implies());
    }
    return a;
  }

  Formula disj() {
    Formula a = conj();
    while (lex_.peek().type == Tok::Or) {
      lex_.take();
      a = Formula::disjunction(std::move(a), conj());
    }
    return a;
  }

  Formula conj() {
    Formula a = unary();
    while (lex_.peek().type == Tok::And) {
      lex_.take();
      a = Formula::conjunction(std::move(a), unary());
    }
    return a;
  }

  Formula unary() {
    Token t = lex_.peek();
    switch (t.type) {
      case Tok::Not:
        lex_.take();
        return Formula::negation(unary());
      case Tok::LParen: {
        lex_.take();
        Formula f = iff();
        if (lex_.peek().type != Tok::RParen) {
          fail(lex_.peek(), {"'&'", "'|'", "'->'", "'<->'", "')'"});
        }
        lex_.take();
        return f;
      }
      case Tok::True:
        lex_.take();
        return Formula::top();
      case Tok::False:
        lex_.take();
        return Formula::bottom();
      case Tok::Atom:
        lex_.take();
        return Formula::atom(t.text);
      default:
        fail(t, kTermStart);
    }
  }

  Lexer lex_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

}  // namespace oppgeo
