#pragma once

// Derivation terms over the eight-axiom class of indexed links (the Wada
// moves). The class is generated from the Hopf link by six moves; a term
// records the exact derivation, and the derivation is the link's
// representation. Constructing a term checks the side conditions of its top
// move and evaluates the component table, so a LinkTerm is valid by
// construction.
//
// Component tables (u and m denote index-1 unknots; K.i is a selected
// component, constrained as stated):
//
//   O                  {(U,0), (U,2)}, one split part
//   I   (L1, L2)       L1 o L2 o u: disjoint split sum plus u
//   II  (L1, L2, K2)   L1 o (L2 - K2) o u, index(K2) in {0,2}
//   III (L1,K1,L2,K2)  (L1-K1) o (L2-K2) o u, index(K1) = 0, index(K2) = 2
//   IV  (L1,K1,L2,K2)  sum along K1,K2: remnants of both parts merge with
//                      (K1#K2, i) and a meridian m, i = index of K1 or K2
//   V   (L, K, p, q)   K replaced by its core (same knot type) and two
//                      parallel (p,q)-cables; the middle cable has index 1,
//                      the other two indices lie in {0,2} and at least one
//                      equals index(K)
//   VI  (L, K, q)      K reindexed to 1; a (2,q)-cable of K (q odd) takes
//                      K's old index, inside K's split part

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zek/link.hpp"

namespace zek {

enum class MoveKind : std::uint8_t { hopf, i, ii, iii, iv, v, vi };

/// Position into the sorted canonical component list of a subterm ("#n",
/// 0-based). Ties between equal (knot, index) components are broken by
/// provenance tag, then insertion order, so replays are exact.
struct Selector {
  std::size_t pos = 0;
};

class LinkTerm {
 public:
  /// Axiom O: the Hopf link indexed by 0 and 2.
  static LinkTerm hopf();

  MoveKind kind() const;
  const Link& link() const;
  /// Derivation height: 0 for hopf, 1 + max over operands otherwise.
  int depth() const;
  /// Warnings emitted during construction (e.g. axiom V with p = 1).
  const std::vector<std::string>& lints() const;

  /// Term grammar rendering: (hopf), (I t1 t2), (II t1 t2 #n),
  /// (III t1 #n t2 #n), (IV t1 #n t2 #n idx), (V t #n p q idx idx),
  /// (VI t #n q).
  std::string to_sexpr() const;

  /// Replayable membership certificate: one derivation step per line in
  /// evaluation (post-)order, citing the axiom, the selected components and
  /// the side conditions checked.
  std::string derivation() const;

 private:
  struct Node;
  explicit LinkTerm(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;

  friend struct TermRender;
  friend LinkTerm move_i(const LinkTerm&, const LinkTerm&);
  friend LinkTerm move_ii(const LinkTerm&, const LinkTerm&, Selector);
  friend LinkTerm move_iii(const LinkTerm&, Selector, const LinkTerm&, Selector);
  friend LinkTerm move_iv(const LinkTerm&, Selector, const LinkTerm&, Selector, int);
  friend LinkTerm move_v(const LinkTerm&, Selector, long long, long long, int, int);
  friend LinkTerm move_vi(const LinkTerm&, Selector, long long);
};

LinkTerm move_i(const LinkTerm& l1, const LinkTerm& l2);
LinkTerm move_ii(const LinkTerm& l1, const LinkTerm& l2, Selector removed);
LinkTerm move_iii(const LinkTerm& l1, Selector k1, const LinkTerm& l2, Selector k2);
LinkTerm move_iv(const LinkTerm& l1, Selector k1, const LinkTerm& l2, Selector k2,
                 int merged_index);
LinkTerm move_v(const LinkTerm& l, Selector k, long long p, long long q, int idx_k1,
                int idx_k3);
LinkTerm move_vi(const LinkTerm& l, Selector k, long long q);

/// The indexed link a term evaluates to.
inline const Link& components(const LinkTerm& t) { return t.link(); }

/// The syntactic split partition of a term's link: position lists into
/// components(t). Link::in_one_part answers whether a designated set of
/// components avoids every derivation-level separating sphere.
inline const std::vector<std::vector<std::size_t>>& split_components(const LinkTerm& t) {
  return t.link().split_parts();
}

/// Parses the term grammar; move side-condition violations surface as
/// ValidationError, grammar problems as ParseError.
LinkTerm parse_term(std::string_view src);

}  // namespace zek
