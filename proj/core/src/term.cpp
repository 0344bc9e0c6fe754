#include "zek/term.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "zek/errors.hpp"
#include "zek/sexpr.hpp"

namespace zek {

struct LinkTerm::Node {
  MoveKind kind = MoveKind::hopf;
  std::shared_ptr<const Node> a, b;  // operands (a only for V/VI)
  std::size_t sel1 = 0, sel2 = 0;
  long long p = 0, q = 0;
  int idx1 = -1, idx3 = -1, merged = -1;
  int depth = 0;
  std::vector<std::string> lints;
  Link link;

  Node(MoveKind k, Link l) : kind(k), link(std::move(l)) {}
};

LinkTerm::LinkTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

MoveKind LinkTerm::kind() const { return node_->kind; }
const Link& LinkTerm::link() const { return node_->link; }
int LinkTerm::depth() const { return node_->depth; }
const std::vector<std::string>& LinkTerm::lints() const { return node_->lints; }

namespace {

std::string comp_str(const IndexedComponent& c) {
  return "(" + to_string(c.knot) + " " + std::to_string(c.index) + ")";
}

/// Resolves a selector against a link, enforcing the index constraint of the
/// calling axiom. allow0 / allow2 state which Morse indices are admissible.
const IndexedComponent& select(const Link& l, Selector s, const char* axiom, bool allow0,
                               bool allow2) {
  if (s.pos >= l.size())
    throw ValidationError(std::string("axiom ") + axiom + ": selector #" +
                          std::to_string(s.pos) + " out of range (link has " +
                          std::to_string(l.size()) + " components)");
  const IndexedComponent& c = l.components()[s.pos];
  bool ok = (c.index == 0 && allow0) || (c.index == 2 && allow2);
  if (!ok) {
    std::string want = allow0 && allow2 ? "0 or 2" : (allow0 ? "0" : "2");
    throw ValidationError(std::string("axiom ") + axiom + ": selected component #" +
                          std::to_string(s.pos) + " " + comp_str(c) + " must have index " +
                          want);
  }
  return c;
}

/// Accumulates components with explicit part ids, then normalizes into a Link.
struct LinkBuilder {
  std::vector<IndexedComponent> comps;
  std::vector<std::size_t> owner;  // part id per component
  std::size_t nparts = 0;

  std::size_t new_part() { return nparts++; }

  void add(Knot k, int index, std::string origin, std::size_t part) {
    comps.push_back(IndexedComponent{std::move(k), index, std::move(origin)});
    owner.push_back(part);
  }

  /// Imports l's components except the skipped positions, one fresh part per
  /// part of l (kept even if it imports empty, so moves can target it).
  /// Returns the map from l's part ids to builder part ids.
  std::vector<std::size_t> import(const Link& l, std::initializer_list<std::size_t> skip = {}) {
    std::vector<std::size_t> part_map(l.split_parts().size());
    for (std::size_t pi = 0; pi < l.split_parts().size(); ++pi) part_map[pi] = new_part();
    auto comps_in = l.components();
    for (std::size_t pos = 0; pos < comps_in.size(); ++pos) {
      bool skipped = false;
      for (std::size_t s : skip) skipped = skipped || s == pos;
      if (skipped) continue;
      add(comps_in[pos].knot, comps_in[pos].index, comps_in[pos].origin, part_map[l.part_of(pos)]);
    }
    return part_map;
  }

  void merge_into(std::size_t target, std::size_t source) {
    for (std::size_t& o : owner)
      if (o == source) o = target;
  }

  Link build() const {
    std::vector<std::vector<std::size_t>> parts(nparts);
    for (std::size_t i = 0; i < comps.size(); ++i) parts[owner[i]].push_back(i);
    return Link(comps, std::move(parts));  // Link drops empty parts
  }
};

int max_depth(const LinkTerm& a, const LinkTerm& b) {
  return a.depth() > b.depth() ? a.depth() : b.depth();
}

}  // namespace

LinkTerm LinkTerm::hopf() {
  LinkBuilder b;
  std::size_t part = b.new_part();
  b.add(Knot::make_unknot(), 0, "hopf", part);
  b.add(Knot::make_unknot(), 2, "hopf", part);
  auto node = std::make_shared<Node>(MoveKind::hopf, b.build());
  return LinkTerm(std::move(node));
}

LinkTerm move_i(const LinkTerm& l1, const LinkTerm& l2) {
  LinkBuilder b;
  b.import(l1.link());
  b.import(l2.link());
  b.add(Knot::make_unknot(), 1, "u", b.new_part());
  auto node = std::make_shared<LinkTerm::Node>(MoveKind::i, b.build());
  node->a = l1.node_;
  node->b = l2.node_;
  node->depth = 1 + max_depth(l1, l2);
  return LinkTerm(std::move(node));
}

LinkTerm move_ii(const LinkTerm& l1, const LinkTerm& l2, Selector removed) {
  select(l2.link(), removed, "II", true, true);
  LinkBuilder b;
  b.import(l1.link());
  b.import(l2.link(), {removed.pos});
  b.add(Knot::make_unknot(), 1, "u", b.new_part());
  auto node = std::make_shared<LinkTerm::Node>(MoveKind::ii, b.build());
  node->a = l1.node_;
  node->b = l2.node_;
  node->sel2 = removed.pos;
  node->depth = 1 + max_depth(l1, l2);
  return LinkTerm(std::move(node));
}

LinkTerm move_iii(const LinkTerm& l1, Selector k1, const LinkTerm& l2, Selector k2) {
  select(l1.link(), k1, "III", true, false);   // K1 has index 0
  select(l2.link(), k2, "III", false, true);   // K2 has index 2
  LinkBuilder b;
  b.import(l1.link(), {k1.pos});
  b.import(l2.link(), {k2.pos});
  b.add(Knot::make_unknot(), 1, "u", b.new_part());
  auto node = std::make_shared<LinkTerm::Node>(MoveKind::iii, b.build());
  node->a = l1.node_;
  node->b = l2.node_;
  node->sel1 = k1.pos;
  node->sel2 = k2.pos;
  node->depth = 1 + max_depth(l1, l2);
  return LinkTerm(std::move(node));
}

LinkTerm move_iv(const LinkTerm& l1, Selector k1, const LinkTerm& l2, Selector k2,
                 int merged_index) {
  const IndexedComponent& c1 = select(l1.link(), k1, "IV", true, true);
  const IndexedComponent& c2 = select(l2.link(), k2, "IV", true, true);
  if (merged_index != c1.index && merged_index != c2.index)
    throw ValidationError("axiom IV: the summed component's index (" +
                          std::to_string(merged_index) + ") must equal the index of K1 (" +
                          std::to_string(c1.index) + ") or of K2 (" + std::to_string(c2.index) +
                          ")");
  LinkBuilder b;
  auto pm1 = b.import(l1.link(), {k1.pos});
  auto pm2 = b.import(l2.link(), {k2.pos});
  // The sum crosses the separating sphere: K1's and K2's parts become one.
  std::size_t target = pm1[l1.link().part_of(k1.pos)];
  b.merge_into(target, pm2[l2.link().part_of(k2.pos)]);
  b.add(connected_sum(c1.knot, c2.knot), merged_index, "sum", target);
  b.add(Knot::make_unknot(), 1, "meridian", target);  // a meridian in S^3 bounds a disc
  auto node = std::make_shared<LinkTerm::Node>(MoveKind::iv, b.build());
  node->a = l1.node_;
  node->b = l2.node_;
  node->sel1 = k1.pos;
  node->sel2 = k2.pos;
  node->merged = merged_index;
  node->depth = 1 + max_depth(l1, l2);
  return LinkTerm(std::move(node));
}

LinkTerm move_v(const LinkTerm& l, Selector k, long long p, long long q, int idx_k1,
                int idx_k3) {
  const IndexedComponent& c = select(l.link(), k, "V", true, true);
  if (p < 1)
    throw ValidationError("axiom V: p must be >= 1 (got " + std::to_string(p) + ")");
  long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  if (g != 1)
    throw ValidationError("axiom V: cable parameters (" + std::to_string(p) + "," +
                          std::to_string(q) + ") must be coprime (gcd = " + std::to_string(g) +
                          ")");
  if ((idx_k1 != 0 && idx_k1 != 2) || (idx_k3 != 0 && idx_k3 != 2))
    throw ValidationError("axiom V: the indices of K1 and K3 must each be 0 or 2 (got " +
                          std::to_string(idx_k1) + ", " + std::to_string(idx_k3) + ")");
  if (idx_k1 != c.index && idx_k3 != c.index)
    throw ValidationError("axiom V: at least one of the indices of K1 and K3 must equal the "
                          "index of the replaced component K " +
                          comp_str(c) + " (got " + std::to_string(idx_k1) + ", " +
                          std::to_string(idx_k3) + ")");
  LinkBuilder b;
  auto pm = b.import(l.link(), {k.pos});
  std::size_t part = pm[l.link().part_of(k.pos)];
  Knot cbl = cable(p, q, c.knot);
  b.add(c.knot, idx_k1, "core", part);
  b.add(cbl, 1, "cable-K2", part);
  b.add(cbl, idx_k3, "cable-K3", part);
  auto node = std::make_shared<LinkTerm::Node>(MoveKind::v, b.build());
  node->a = l.node_;
  node->sel1 = k.pos;
  node->p = p;
  node->q = q;
  node->idx1 = idx_k1;
  node->idx3 = idx_k3;
  node->depth = 1 + l.depth();
  if (p == 1)
    node->lints.push_back("axiom V: p = 1, the parallel cables collapse to the core's knot type");
  return LinkTerm(std::move(node));
}

LinkTerm move_vi(const LinkTerm& l, Selector k, long long q) {
  const IndexedComponent& c = select(l.link(), k, "VI", true, true);
  if (q % 2 == 0)
    throw ValidationError("axiom VI: q must be odd, a (2,q) curve on the torus is connected "
                          "only when gcd(2,q) = 1 (got q = " +
                          std::to_string(q) + ")");
  LinkBuilder b;
  auto pm = b.import(l.link(), {k.pos});
  std::size_t part = pm[l.link().part_of(k.pos)];
  b.add(c.knot, 1, c.origin, part);                   // K itself, reindexed to 1
  b.add(cable(2, q, c.knot), c.index, "cable", part);  // the (2,q)-cable takes K's old index
  auto node = std::make_shared<LinkTerm::Node>(MoveKind::vi, b.build());
  node->a = l.node_;
  node->sel1 = k.pos;
  node->q = q;
  node->depth = 1 + l.depth();
  return LinkTerm(std::move(node));
}

struct TermRender {
  // Rendering needs operand traversal, which only Node has; TermRender is a
  // friend of LinkTerm and stays inside this implementation file.
  static void sexpr(const LinkTerm::Node* n, std::ostringstream& os) {
    switch (n->kind) {
      case MoveKind::hopf:
        os << "(hopf)";
        return;
      case MoveKind::i:
        os << "(I ";
        sexpr(n->a.get(), os);
        os << ' ';
        sexpr(n->b.get(), os);
        os << ')';
        return;
      case MoveKind::ii:
        os << "(II ";
        sexpr(n->a.get(), os);
        os << ' ';
        sexpr(n->b.get(), os);
        os << " #" << n->sel2 << ')';
        return;
      case MoveKind::iii:
        os << "(III ";
        sexpr(n->a.get(), os);
        os << " #" << n->sel1 << ' ';
        sexpr(n->b.get(), os);
        os << " #" << n->sel2 << ')';
        return;
      case MoveKind::iv:
        os << "(IV ";
        sexpr(n->a.get(), os);
        os << " #" << n->sel1 << ' ';
        sexpr(n->b.get(), os);
        os << " #" << n->sel2 << ' ' << n->merged << ')';
        return;
      case MoveKind::v:
        os << "(V ";
        sexpr(n->a.get(), os);
        os << " #" << n->sel1 << ' ' << n->p << ' ' << n->q << ' ' << n->idx1 << ' ' << n->idx3
           << ')';
        return;
      case MoveKind::vi:
        os << "(VI ";
        sexpr(n->a.get(), os);
        os << " #" << n->sel1 << ' ' << n->q << ')';
        return;
    }
  }

  static void certificate(const LinkTerm::Node* n, std::vector<std::string>& out) {
    auto echo = [](const LinkTerm::Node* operand, std::size_t pos) {
      return "#" + std::to_string(pos) + " [" + comp_str(operand->link.components()[pos]) + "]";
    };
    std::ostringstream line;
    switch (n->kind) {
      case MoveKind::hopf:
        out.push_back("O");
        return;
      case MoveKind::i:
        certificate(n->a.get(), out);
        certificate(n->b.get(), out);
        out.push_back("I  ;; split sum, adds u=(U 1)");
        return;
      case MoveKind::ii:
        certificate(n->a.get(), out);
        certificate(n->b.get(), out);
        line << "II K2=" << echo(n->b.get(), n->sel2) << "  ;; index(K2) in {0,2}";
        out.push_back(line.str());
        return;
      case MoveKind::iii:
        certificate(n->a.get(), out);
        certificate(n->b.get(), out);
        line << "III K1=" << echo(n->a.get(), n->sel1) << " K2=" << echo(n->b.get(), n->sel2)
             << "  ;; index(K1)=0, index(K2)=2";
        out.push_back(line.str());
        return;
      case MoveKind::iv:
        certificate(n->a.get(), out);
        certificate(n->b.get(), out);
        line << "IV K1=" << echo(n->a.get(), n->sel1) << " K2=" << echo(n->b.get(), n->sel2)
             << " index=" << n->merged << "  ;; merged index taken from K1 or K2, meridian m=(U 1)";
        out.push_back(line.str());
        return;
      case MoveKind::v:
        certificate(n->a.get(), out);
        line << "V K=" << echo(n->a.get(), n->sel1) << " p=" << n->p << " q=" << n->q
             << " idx_k1=" << n->idx1 << " idx_k3=" << n->idx3
             << "  ;; gcd(p,q)=1, an index among {idx_k1,idx_k3} equals index(K)";
        out.push_back(line.str());
        return;
      case MoveKind::vi:
        certificate(n->a.get(), out);
        line << "VI K=" << echo(n->a.get(), n->sel1) << " q=" << n->q
             << "  ;; q odd, cable takes K's old index, K reindexed to 1";
        out.push_back(line.str());
        return;
    }
  }
};

std::string LinkTerm::to_sexpr() const {
  std::ostringstream os;
  TermRender::sexpr(node_.get(), os);
  return os.str();
}

std::string LinkTerm::derivation() const {
  std::vector<std::string> lines;
  TermRender::certificate(node_.get(), lines);
  std::ostringstream os;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) os << '\n';
    os << lines[i];
  }
  return os.str();
}

namespace {

LinkTerm term_from_sexpr(const SExpr& e) {
  if (!e.is_list() || e.items.empty() || !e.items.front().is_atom())
    throw ParseError("expected a link term (hopf) or (MOVE ...)", e.offset);
  const std::string& head = e.items.front().atom;
  auto arity = [&](std::size_t n, const char* shape) {
    if (e.items.size() != n + 1)
      throw ParseError(std::string(head) + " takes the shape " + shape, e.offset);
  };
  if (head == "hopf") {
    arity(0, "(hopf)");
    return LinkTerm::hopf();
  }
  if (head == "I") {
    arity(2, "(I t1 t2)");
    return move_i(term_from_sexpr(e.items[1]), term_from_sexpr(e.items[2]));
  }
  if (head == "II") {
    arity(3, "(II t1 t2 sel)");
    return move_ii(term_from_sexpr(e.items[1]), term_from_sexpr(e.items[2]),
                   Selector{atom_to_selector(e.items[3])});
  }
  if (head == "III") {
    arity(4, "(III t1 sel t2 sel)");
    return move_iii(term_from_sexpr(e.items[1]), Selector{atom_to_selector(e.items[2])},
                    term_from_sexpr(e.items[3]), Selector{atom_to_selector(e.items[4])});
  }
  if (head == "IV") {
    arity(5, "(IV t1 sel t2 sel idx)");
    return move_iv(term_from_sexpr(e.items[1]), Selector{atom_to_selector(e.items[2])},
                   term_from_sexpr(e.items[3]), Selector{atom_to_selector(e.items[4])},
                   static_cast<int>(atom_to_int(e.items[5])));
  }
  if (head == "V") {
    arity(6, "(V t sel p q idx idx)");
    return move_v(term_from_sexpr(e.items[1]), Selector{atom_to_selector(e.items[2])},
                  atom_to_int(e.items[3]), atom_to_int(e.items[4]),
                  static_cast<int>(atom_to_int(e.items[5])),
                  static_cast<int>(atom_to_int(e.items[6])));
  }
  if (head == "VI") {
    arity(3, "(VI t sel q)");
    return move_vi(term_from_sexpr(e.items[1]), Selector{atom_to_selector(e.items[2])},
                   atom_to_int(e.items[3]));
  }
  throw ParseError("unknown move '" + head + "' (expected hopf, I..VI)", e.items.front().offset);
}

}  // namespace

LinkTerm parse_term(std::string_view src) { return term_from_sexpr(parse_sexpr(src)); }

}  // namespace zek
