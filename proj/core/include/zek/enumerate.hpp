#pragma once

// Bounded breadth-first enumeration of the generated class of indexed links.
// The class is infinite; caps on cable parameters and per-level branching
// keep each level finite, and links are deduplicated by their canonical key
// (component multiset + split partition), which is a congruence for all six
// moves.

#include <functional>
#include <string>
#include <vector>

#include "zek/term.hpp"

namespace zek {

struct EnumCaps {
  long long max_p = 3;  // cable parameter bounds for moves V and VI
  long long max_q = 3;
  /// Valid move applications taken per (term, move kind) per level.
  /// Candidates are tried in a fixed order: partner terms by canonical key,
  /// selectors ascending, then p, q, index flags ascending.
  int max_branch = 4;
};

struct EnumStats {
  std::size_t applications = 0;  // moves applied
  std::size_t emitted = 0;       // distinct links emitted (including hopf)
  bool truncated = false;        // a branch budget cut off remaining candidates
};

/// Emits every retained link exactly once, level by level (derivation depth
/// 0, 1, ..., depth), each level sorted by canonical key. Two runs with the
/// same arguments produce identical streams. The term passed to `emit` is
/// the first-discovered derivation of its link.
EnumStats enumerate_links(int depth, const EnumCaps& caps,
                          const std::function<void(const LinkTerm&, const Link&)>& emit);

/// Snapshot convenience: one canonical key line per emitted link, sorted.
std::vector<std::string> enumerate_snapshot(int depth, const EnumCaps& caps,
                                            EnumStats* stats = nullptr);

}  // namespace zek
