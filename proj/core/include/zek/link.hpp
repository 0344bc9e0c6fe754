#pragma once

// Indexed links as evaluated values: a multiset of components, each a knot
// type with a Morse index in {0,1,2}, partitioned into split-sum parts
// (maximal groups not separable from each other by an embedded 2-sphere).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zek/knot.hpp"

namespace zek {

struct IndexedComponent {
  Knot knot = Knot::make_unknot();  // stored in canonical form
  int index = 0;                    // Morse index: 0, 1 or 2
  std::string origin;               // provenance tag ("core", "meridian", ...)
};

/// An immutable indexed link. Components are kept sorted by (knot, index,
/// origin, insertion order); selectors and the split partition refer to
/// positions in that order.
class Link {
 public:
  /// `parts` must partition {0, ..., comps.size()-1} with positions referring
  /// to `comps` as given. Knots are canonicalized and indices checked.
  Link(std::vector<IndexedComponent> comps, std::vector<std::vector<std::size_t>> parts);

  std::span<const IndexedComponent> components() const { return comps_; }

  /// Split partition: position lists into components(), each sorted,
  /// parts in a deterministic order.
  const std::vector<std::vector<std::size_t>>& split_parts() const { return parts_; }

  std::size_t size() const { return comps_.size(); }
  std::size_t unknot_count() const;
  bool has_index(int index) const;
  std::size_t part_of(std::size_t position) const;

  /// True when every listed position lies in a single split part, i.e. no
  /// derivation-level 2-sphere separates the designated components.
  bool in_one_part(std::span<const std::size_t> positions) const;

  /// Equality key: the multiset of split parts, each part the multiset of its
  /// (knot, index) pairs. Origins are provenance, not identity.
  const std::string& key() const { return key_; }

 private:
  std::vector<IndexedComponent> comps_;
  std::vector<std::vector<std::size_t>> parts_;
  std::vector<std::size_t> part_of_;
  std::string key_;
};

/// The invariants every link in the generated class satisfies.
struct InvariantReport {
  std::size_t unknot_count = 0;
  bool unknot_pair = false;    // at least two unknotted components
  bool index0_present = false;
  bool index2_present = false;
  bool knots_in_class = true;  // every component knot canonical in the algebra

  bool pass() const {
    return unknot_pair && index0_present && index2_present && knots_in_class;
  }
};

InvariantReport check_invariants(const Link& l);

std::string to_string(const Link& l);

}  // namespace zek
