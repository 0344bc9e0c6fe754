#pragma once

// Minimal s-expression reader shared by the knot and link-term grammars.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zek {

struct SExpr {
  enum class Kind { atom, list };

  Kind kind = Kind::atom;
  std::string atom;           // kind == atom
  std::vector<SExpr> items;   // kind == list
  std::size_t offset = 0;     // byte offset into the source, for error messages

  bool is_atom() const { return kind == Kind::atom; }
  bool is_list() const { return kind == Kind::list; }
};

/// Parses exactly one s-expression; trailing non-whitespace is an error.
SExpr parse_sexpr(std::string_view src);

/// Interprets an atom as a signed integer; throws ParseError otherwise.
long long atom_to_int(const SExpr& e);

/// Interprets an atom of the form "#n" as a selector position.
std::size_t atom_to_selector(const SExpr& e);

}  // namespace zek
