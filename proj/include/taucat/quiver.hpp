#pragma once

// Quiver description files:
//
//   field: Q              # or F5; optional, defaults to Q
//   vertices: 1 2 3
//   arrows: a: 1 -> 2, b: 2 -> 3
//   relations: b*a, c*d - d*c
//
// '#' starts a comment. Path syntax is right-to-left: b*a means "first a,
// then b", matching composition of the arrow matrices. Relation terms may
// carry a leading rational coefficient (2*b*a, 1/2*c*d); arrow labels must
// not be bare numeric literals so the grammar stays unambiguous.

#include <stdexcept>
#include <string>
#include <vector>

#include "taucat/scalar.hpp"

namespace taucat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

struct Arrow {
  std::string name;
  int src = -1, tgt = -1;
};

struct Quiver {
  Field field;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
};

struct RelTerm {
  Scalar coeff;
  std::vector<int> arrows;  // chronological: arrows[0] applied first
};

struct Relation {
  std::vector<RelTerm> terms;  // parallel paths, all the same (src, tgt)
  int src = -1, tgt = -1;
  std::string text;  // original source, for error reporting
};

struct ParsedQuiver {
  Quiver quiver;
  std::vector<Relation> relations;
};

ParsedQuiver parse_quiver_text(const std::string& text);

}  // namespace taucat
