#include "zek/knot.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "zek/errors.hpp"
#include "zek/sexpr.hpp"

namespace zek {

struct Knot::Node {
  Kind kind = Kind::unknot;
  long long p = 0;
  long long q = 0;
  std::vector<Knot> children;  // cable: exactly the companion; sum: the factors
};

Knot::Knot(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Knot Knot::make_unknot() {
  static const std::shared_ptr<const Node> unknot_node = std::make_shared<Node>();
  return Knot(unknot_node);
}

Knot Knot::make_cable(long long p, long long q, Knot companion) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cable;
  n->p = p;
  n->q = q;
  n->children.push_back(std::move(companion));
  return Knot(std::move(n));
}

Knot Knot::make_sum(std::vector<Knot> factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->children = std::move(factors);
  return Knot(std::move(n));
}

Knot::Kind Knot::kind() const { return node_->kind; }
long long Knot::p() const { return node_->p; }
long long Knot::q() const { return node_->q; }
const Knot& Knot::companion() const { return node_->children.front(); }
std::span<const Knot> Knot::factors() const { return node_->children; }

std::size_t Knot::node_count() const {
  std::size_t n = 1;
  for (const Knot& c : node_->children) n += c.node_count();
  return n;
}

namespace {

long long abs_ll(long long v) { return v < 0 ? -v : v; }

void render(const Knot& k, std::ostringstream& out) {
  switch (k.kind()) {
    case Knot::Kind::unknot:
      out << 'U';
      return;
    case Knot::Kind::cable:
      out << "(cab " << k.p() << ' ' << k.q() << ' ';
      render(k.companion(), out);
      out << ')';
      return;
    case Knot::Kind::sum:
      out << "(sum";
      for (const Knot& f : k.factors()) {
        out << ' ';
        render(f, out);
      }
      out << ')';
      return;
  }
}

}  // namespace

std::string to_string(const Knot& k) {
  std::ostringstream out;
  render(k, out);
  return out.str();
}

void validate(const Knot& k) {
  switch (k.kind()) {
    case Knot::Kind::unknot:
      return;
    case Knot::Kind::cable: {
      long long g = std::gcd(abs_ll(k.p()), abs_ll(k.q()));
      if (g != 1)
        throw ValidationError("invalid cable " + to_string(k) +
                              ": p and q must be coprime (gcd = " + std::to_string(g) + ")");
      validate(k.companion());
      return;
    }
    case Knot::Kind::sum: {
      if (k.factors().size() < 2)
        throw ValidationError("invalid sum " + to_string(k) +
                              ": a connected sum needs at least two factors");
      for (const Knot& f : k.factors()) validate(f);
      return;
    }
  }
}

int compare(const Knot& a, const Knot& b) {
  auto rank = [](Knot::Kind k) {
    switch (k) {
      case Knot::Kind::unknot: return 0;
      case Knot::Kind::cable: return 1;
      case Knot::Kind::sum: return 2;
    }
    return 3;
  };
  if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Knot::Kind::unknot:
      return 0;
    case Knot::Kind::cable: {
      if (a.p() != b.p()) return a.p() < b.p() ? -1 : 1;
      if (a.q() != b.q()) return a.q() < b.q() ? -1 : 1;
      return compare(a.companion(), b.companion());
    }
    case Knot::Kind::sum: {
      auto fa = a.factors(), fb = b.factors();
      std::size_t n = std::min(fa.size(), fb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(fa[i], fb[i]);
        if (c != 0) return c;
      }
      if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool identical(const Knot& a, const Knot& b) { return compare(a, b) == 0; }

namespace {

// Assumes the subtree already passed validate().
Knot canon_rec(const Knot& k) {
  switch (k.kind()) {
    case Knot::Kind::unknot:
      return k;
    case Knot::Kind::cable: {
      Knot comp = canon_rec(k.companion());
      long long p = abs_ll(k.p());
      long long q = abs_ll(k.q());
      if (p == 1) return comp;                      // a longitude is the companion
      if (p == 0) return Knot::make_unknot();       // a meridian bounds a disc (q = ±1 by gcd)
      if (comp.kind() == Knot::Kind::unknot) {
        if (q <= 1) return Knot::make_unknot();     // T(p,q) unknotted when min(p,q) <= 1
        if (p > q) std::swap(p, q);                 // T(p,q) = T(q,p)
      }
      return Knot::make_cable(p, q, std::move(comp));
    }
    case Knot::Kind::sum: {
      std::vector<Knot> out;
      for (const Knot& f : k.factors()) {
        Knot cf = canon_rec(f);
        switch (cf.kind()) {
          case Knot::Kind::unknot:
            break;  // identity factor
          case Knot::Kind::sum:
            for (const Knot& g : cf.factors()) out.push_back(g);
            break;
          case Knot::Kind::cable:
            out.push_back(std::move(cf));
            break;
        }
      }
      if (out.empty()) return Knot::make_unknot();
      if (out.size() == 1) return out.front();
      std::sort(out.begin(), out.end(),
                [](const Knot& a, const Knot& b) { return compare(a, b) < 0; });
      return Knot::make_sum(std::move(out));
    }
  }
  return k;
}

}  // namespace

Knot canonicalize(const Knot& k) {
  validate(k);
  return canon_rec(k);
}

bool is_canonical(const Knot& k) {
  switch (k.kind()) {
    case Knot::Kind::unknot:
      return true;
    case Knot::Kind::cable: {
      if (k.p() < 2 || k.q() < 1) return false;
      if (std::gcd(k.p(), k.q()) != 1) return false;
      if (k.companion().kind() == Knot::Kind::unknot && !(k.p() <= k.q() && k.q() >= 2))
        return false;
      return is_canonical(k.companion());
    }
    case Knot::Kind::sum: {
      auto fs = k.factors();
      if (fs.size() < 2) return false;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].kind() != Knot::Kind::cable) return false;  // no unknot or nested sum factors
        if (!is_canonical(fs[i])) return false;
        if (i + 1 < fs.size() && compare(fs[i], fs[i + 1]) > 0) return false;
      }
      return true;
    }
  }
  return false;
}

bool equals(const Knot& a, const Knot& b) { return identical(canonicalize(a), canonicalize(b)); }

bool is_unknot(const Knot& k) { return canonicalize(k).kind() == Knot::Kind::unknot; }

Knot connected_sum(const Knot& a, const Knot& b) {
  return canonicalize(Knot::make_sum({a, b}));
}

Knot cable(long long p, long long q, const Knot& companion) {
  return canonicalize(Knot::make_cable(p, q, companion));
}

namespace {

void require_canonical(const Knot& k, const char* op) {
  if (!is_canonical(k))
    throw ValidationError(std::string(op) + ": input " + to_string(k) +
                          " is not in canonical form");
}

}  // namespace

bool is_prime(const Knot& k) {
  require_canonical(k, "is_prime");
  return k.kind() == Knot::Kind::cable;
}

std::vector<Knot> prime_factors(const Knot& k) {
  require_canonical(k, "prime_factors");
  switch (k.kind()) {
    case Knot::Kind::unknot:
      return {};
    case Knot::Kind::cable:
      return {k};
    case Knot::Kind::sum: {
      auto fs = k.factors();
      return std::vector<Knot>(fs.begin(), fs.end());
    }
  }
  return {};
}

namespace {

long long genus_canonical(const Knot& k) {
  switch (k.kind()) {
    case Knot::Kind::unknot:
      return 0;
    case Knot::Kind::cable:
      // Cable-genus formula with the Seifert framing; (p-1)(q-1) is even
      // since p and q are coprime.
      return k.p() * genus_canonical(k.companion()) + (k.p() - 1) * (k.q() - 1) / 2;
    case Knot::Kind::sum: {
      long long g = 0;
      for (const Knot& f : k.factors()) g += genus_canonical(f);
      return g;
    }
  }
  return 0;
}

}  // namespace

long long genus(const Knot& k) { return genus_canonical(canonicalize(k)); }

namespace {

Knot knot_from_sexpr(const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "U") return Knot::make_unknot();
    throw ParseError("unknown knot atom '" + e.atom + "' (expected U)", e.offset);
  }
  if (e.items.empty()) throw ParseError("empty list is not a knot", e.offset);
  const SExpr& head = e.items.front();
  if (!head.is_atom()) throw ParseError("expected cab or sum", head.offset);
  if (head.atom == "cab") {
    if (e.items.size() != 4)
      throw ParseError("cab takes exactly three arguments: (cab p q K)", e.offset);
    long long p = atom_to_int(e.items[1]);
    long long q = atom_to_int(e.items[2]);
    return Knot::make_cable(p, q, knot_from_sexpr(e.items[3]));
  }
  if (head.atom == "sum") {
    std::vector<Knot> factors;
    for (std::size_t i = 1; i < e.items.size(); ++i) factors.push_back(knot_from_sexpr(e.items[i]));
    return Knot::make_sum(std::move(factors));
  }
  throw ParseError("unknown knot constructor '" + head.atom + "'", head.offset);
}

}  // namespace

Knot parse_knot(std::string_view src) { return knot_from_sexpr(parse_sexpr(src)); }

std::string print_knot(const Knot& k) { return to_string(canonicalize(k)); }

}  // namespace zek
