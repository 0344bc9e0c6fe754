#include "zek/sexpr.hpp"

#include <cctype>

#include "zek/errors.hpp"

namespace zek {

namespace {

struct Reader {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool atom_char(char c) const {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')';
  }

  SExpr read() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("unexpected end of input", pos);
    if (src[pos] == ')') throw ParseError("unexpected ')'", pos);
    if (src[pos] == '(') {
      SExpr list;
      list.kind = SExpr::Kind::list;
      list.offset = pos;
      ++pos;
      for (;;) {
        skip_ws();
        if (pos >= src.size()) throw ParseError("unterminated list", list.offset);
        if (src[pos] == ')') {
          ++pos;
          return list;
        }
        list.items.push_back(read());
      }
    }
    SExpr atom;
    atom.kind = SExpr::Kind::atom;
    atom.offset = pos;
    while (pos < src.size() && atom_char(src[pos])) ++pos;
    atom.atom = std::string(src.substr(atom.offset, pos - atom.offset));
    return atom;
  }
};

}  // namespace

SExpr parse_sexpr(std::string_view src) {
  Reader r{src};
  SExpr e = r.read();
  r.skip_ws();
  if (r.pos != src.size()) throw ParseError("trailing input after expression", r.pos);
  return e;
}

long long atom_to_int(const SExpr& e) {
  if (!e.is_atom()) throw ParseError("expected an integer, got a list", e.offset);
  const std::string& s = e.atom;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected an integer, got '" + s + "'", e.offset);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("expected an integer, got '" + s + "'", e.offset);
  }
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError("integer out of range: '" + s + "'", e.offset);
  }
}

std::size_t atom_to_selector(const SExpr& e) {
  if (!e.is_atom() || e.atom.size() < 2 || e.atom[0] != '#')
    throw ParseError("expected a selector of the form #n", e.offset);
  for (std::size_t j = 1; j < e.atom.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(e.atom[j])))
      throw ParseError("expected a selector of the form #n, got '" + e.atom + "'", e.offset);
  }
  try {
    return static_cast<std::size_t>(std::stoull(e.atom.substr(1)));
  } catch (const std::exception&) {
    throw ParseError("selector out of range: '" + e.atom + "'", e.offset);
  }
}

}  // namespace zek
