#pragma once

// Expression algebra for the knot class generated from the unknot by
// connected sum and cabling (iterated torus knots and their sums).
//
// A Knot is an immutable expression tree:
//
//   U                 the unknot
//   (cab p q K)       the (p,q)-cable of K: p longitudinal wraps with the
//                     Seifert framing of the companion, q meridional wraps
//   (sum K1 K2 ...)   connected sum of the factors
//
// Knot types are taken up to unoriented ambient isotopy including mirror
// images, so cable parameters normalize to positive values. Canonical forms
// are unique per knot class inside this algebra: class equality is
// structural equality of canonical trees.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zek {

class Knot {
 public:
  enum class Kind : std::uint8_t { unknot, cable, sum };

  // Raw builders. They record the tree verbatim: no normalization and no
  // admissibility checks. validate() / canonicalize() decide whether the
  // tree denotes a knot.
  static Knot make_unknot();
  static Knot make_cable(long long p, long long q, Knot companion);
  static Knot make_sum(std::vector<Knot> factors);

  Kind kind() const;

  // Cable accessors; call only when kind() == Kind::cable.
  long long p() const;
  long long q() const;
  const Knot& companion() const;

  // Sum accessor; call only when kind() == Kind::sum.
  std::span<const Knot> factors() const;

  std::size_t node_count() const;

 private:
  struct Node;
  explicit Knot(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Rejects cables with gcd(|p|, |q|) != 1 and sums with fewer than two
/// factors. The error message renders the offending subterm.
void validate(const Knot& k);

/// True when k already satisfies every canonical-form invariant: cables have
/// p >= 2, q >= 1, gcd(p, q) = 1, unknot-companion cables have 2 <= p <= q;
/// sums have >= 2 factors, all of them cables, sorted by compare().
bool is_canonical(const Knot& k);

/// The unique canonical form of k's knot class. Idempotent; throws
/// ValidationError on malformed input.
///
/// Rewrites applied (bottom-up):
///   (cab p q K)  -> (cab |p| |q| K)            mirror normalization
///   (cab ±1 q K) -> K                          a longitude copies its companion
///   (cab 0 ±1 K) -> U                          a meridian bounds a disc
///   (cab p q U)  -> U          min(p,q) <= 1   trivial torus knots
///   (cab p q U)  -> (cab q p U)     p > q      T(p,q) = T(q,p)
///   sums flatten, drop unknot factors, collapse singletons, sort factors
Knot canonicalize(const Knot& k);

/// Total encoding order on trees: constructor tag, then p, then q, then
/// children recursively. Fixes the factor order of canonical sums and every
/// sorted output in the project.
int compare(const Knot& a, const Knot& b);

/// Structural equality of trees, no canonicalization.
bool identical(const Knot& a, const Knot& b);

/// Knot-class equality: canonical forms are structurally identical.
bool equals(const Knot& a, const Knot& b);

bool is_unknot(const Knot& k);

/// Canonical connected sum; commutative and associative up to equals(), with
/// the unknot as identity.
Knot connected_sum(const Knot& a, const Knot& b);

/// Canonical (p,q)-cable of a companion. Requires gcd(|p|, |q|) = 1.
Knot cable(long long p, long long q, const Knot& companion);

/// True iff the canonical form is a cable node: a nontrivial cable of any
/// knot is prime, whatever the companion. The unknot is a unit, not a prime,
/// and sums are composite. Requires canonical input.
bool is_prime(const Knot& k);

/// Unknot -> {}, cable -> {k}, sum -> its factor list. Requires canonical
/// input; summing the factors reconstructs k.
std::vector<Knot> prime_factors(const Knot& k);

/// Seifert genus within this class: g(U) = 0, g additive over connected sum,
/// g(cab p q K) = p*g(K) + (p-1)(q-1)/2. Canonicalizes internally; zero
/// exactly on the unknot. Used as an internal certificate, never as the
/// definition of equality.
long long genus(const Knot& k);

/// Parses the grammar  U | (cab p q K) | (sum K1 K2 ...).  Arbitrary nesting
/// is accepted; bad tokens and arities raise ParseError. Semantic problems
/// (gcd, sum arity) are left to validate()/canonicalize().
Knot parse_knot(std::string_view src);

/// Renders the tree verbatim.
std::string to_string(const Knot& k);

/// Renders the canonical form; parse_knot(print_knot(k)) is identical to
/// canonicalize(k).
std::string print_knot(const Knot& k);

}  // namespace zek
