#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oppgeo {

// Base class for everything thrown by this library, so callers can catch
// one type at the CLI boundary.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed formula text. `position` is a byte offset into the input;
// `expected` lists the token categories that would have been legal there.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, std::string unexpected,
              std::vector<std::string> expected, const std::string& msg)
      : Error(msg),
        position(position),
        unexpected(std::move(unexpected)),
        expected(std::move(expected)) {}

  std::size_t position;
  std::string unexpected;
  std::vector<std::string> expected;
};

// A formula mentions an atom that is not in the universe it is being
// evaluated against.
class UnknownAtomError : public Error {
public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom: " + atom), atom(atom) {}

  std::string atom;
};

// More distinct atoms than the dense-truth-table representation supports.
class AtomLimitError : public Error {
public:
  explicit AtomLimitError(std::size_t count)
      : Error("atom universe of size " + std::to_string(count) +
              " exceeds the limit of 24") {}
};

// The background constraint has no satisfying valuation, so no relation
// can be computed relative to it.
class UnsatisfiableConstraintError : public Error {
public:
  UnsatisfiableConstraintError() : Error("constraint is unsatisfiable") {}
};

class TooFewDisjunctsError : public Error {
public:
  explicit TooFewDisjunctsError(std::size_t count)
      : Error("need at least 2 disjuncts, got " + std::to_string(count)) {}
};

// A disjunct is constant under the constraint, or two disjuncts are
// equivalent under it; either way the structure would be degenerate.
class DegenerateDisjunctError : public Error {
public:
  explicit DegenerateDisjunctError(const std::string& detail)
      : Error("degenerate disjunct: " + detail) {}
};

class UnsupportedArityError : public Error {
public:
  explicit UnsupportedArityError(std::size_t count)
      : Error("Nelson diagrams support 2 or 3 disjuncts, got " +
              std::to_string(count)) {}
};

// A diagram's vertices, roles, or arrows violate the Nelson shape rules.
class InvalidDiagramError : public Error {
public:
  explicit InvalidDiagramError(const std::string& detail)
      : Error("invalid diagram: " + detail) {}
};

// twist() could not match the input against the expected built shape.
class NotAnOppositionStructureError : public Error {
public:
  explicit NotAnOppositionStructureError(const std::string& detail)
      : Error("not an opposition structure: " + detail) {}
};

class WrongVertexCountError : public Error {
public:
  WrongVertexCountError(std::size_t expected, std::size_t got)
      : Error("expected " + std::to_string(expected) + " vertices, got " +
              std::to_string(got)) {}
};

class LayoutMismatchError : public Error {
public:
  explicit LayoutMismatchError(const std::string& detail)
      : Error("layout mismatch: " + detail) {}
};

class UnknownFormatError : public Error {
public:
  explicit UnknownFormatError(const std::string& name)
      : Error("unknown render format: " + name) {}
};

// Document violates the schema. `path` is a JSON-pointer-style location
// such as /vertices/3/id.
class SchemaError : public Error {
public:
  SchemaError(std::string path, const std::string& detail)
      : Error(detail + " at " + path), path(std::move(path)) {}

  std::string path;
};

// A vertex formula inside a document failed to parse.
class FormulaSyntaxError : public Error {
public:
  FormulaSyntaxError(std::string vertexId, const std::string& detail)
      : Error("formula for vertex '" + vertexId + "': " + detail),
        vertexId(std::move(vertexId)) {}

  std::string vertexId;
};

// Filesystem-level failure while reading or writing a document.
class DocumentIoError : public Error {
public:
  explicit DocumentIoError(const std::string& detail) : Error(detail) {}
};

}  // namespace oppgeo
