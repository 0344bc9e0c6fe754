#include "zek/link.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zek/errors.hpp"

namespace zek {

Link::Link(std::vector<IndexedComponent> comps, std::vector<std::vector<std::size_t>> parts) {
  if (comps.empty()) throw ValidationError("an indexed link must be nonempty");
  for (IndexedComponent& c : comps) {
    if (c.index < 0 || c.index > 2)
      throw ValidationError("component index must be 0, 1 or 2 (got " +
                            std::to_string(c.index) + ")");
    c.knot = canonicalize(c.knot);
  }

  // The parts must partition the component positions.
  std::vector<std::size_t> owner(comps.size(), static_cast<std::size_t>(-1));
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    for (std::size_t pos : parts[pi]) {
      if (pos >= comps.size() || owner[pos] != static_cast<std::size_t>(-1))
        throw std::logic_error("split parts do not partition the component list");
      owner[pos] = pi;
    }
  }
  for (std::size_t o : owner)
    if (o == static_cast<std::size_t>(-1))
      throw std::logic_error("split parts do not cover the component list");

  // Sort components by (knot, index, origin); insertion order breaks ties.
  std::vector<std::size_t> perm(comps.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    int c = compare(comps[a].knot, comps[b].knot);
    if (c != 0) return c < 0;
    if (comps[a].index != comps[b].index) return comps[a].index < comps[b].index;
    return comps[a].origin < comps[b].origin;
  });
  std::vector<std::size_t> inverse(comps.size());
  comps_.reserve(comps.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    inverse[perm[i]] = i;
    comps_.push_back(std::move(comps[perm[i]]));
  }

  // Remap parts to sorted positions; drop empties; fix a deterministic part
  // order keyed by content (the key order), tie-broken by positions.
  struct PartRec {
    std::vector<std::size_t> positions;
    std::string content;
  };
  std::vector<PartRec> recs;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    PartRec rec;
    for (std::size_t pos : part) rec.positions.push_back(inverse[pos]);
    std::sort(rec.positions.begin(), rec.positions.end());
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < rec.positions.size(); ++i) {
      if (i) os << ' ';
      const IndexedComponent& c = comps_[rec.positions[i]];
      os << '(' << to_string(c.knot) << ' ' << c.index << ')';
    }
    os << ')';
    rec.content = os.str();
    recs.push_back(std::move(rec));
  }
  std::sort(recs.begin(), recs.end(), [](const PartRec& a, const PartRec& b) {
    if (a.content != b.content) return a.content < b.content;
    return a.positions < b.positions;
  });

  part_of_.assign(comps_.size(), 0);
  std::ostringstream key;
  key << '(';
  for (std::size_t pi = 0; pi < recs.size(); ++pi) {
    if (pi) key << ' ';
    key << recs[pi].content;
    for (std::size_t pos : recs[pi].positions) part_of_[pos] = pi;
    parts_.push_back(std::move(recs[pi].positions));
  }
  key << ')';
  key_ = key.str();
}

std::size_t Link::unknot_count() const {
  std::size_t n = 0;
  for (const IndexedComponent& c : comps_)
    if (c.knot.kind() == Knot::Kind::unknot) ++n;
  return n;
}

bool Link::has_index(int index) const {
  for (const IndexedComponent& c : comps_)
    if (c.index == index) return true;
  return false;
}

std::size_t Link::part_of(std::size_t position) const {
  if (position >= comps_.size()) throw std::out_of_range("component position out of range");
  return part_of_[position];
}

bool Link::in_one_part(std::span<const std::size_t> positions) const {
  if (positions.empty()) return true;
  std::size_t first = part_of(positions.front());
  for (std::size_t pos : positions)
    if (part_of(pos) != first) return false;
  return true;
}

InvariantReport check_invariants(const Link& l) {
  InvariantReport r;
  r.unknot_count = l.unknot_count();
  r.unknot_pair = r.unknot_count >= 2;
  r.index0_present = l.has_index(0);
  r.index2_present = l.has_index(2);
  r.knots_in_class = true;
  for (const IndexedComponent& c : l.components())
    if (!is_canonical(c.knot)) r.knots_in_class = false;
  return r;
}

std::string to_string(const Link& l) {
  std::ostringstream os;
  os << "components:\n";
  auto comps = l.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    os << "  #" << i << " (" << to_string(comps[i].knot) << ' ' << comps[i].index << ')';
    if (!comps[i].origin.empty()) os << "  origin=" << comps[i].origin;
    os << '\n';
  }
  os << "split parts: (";
  const auto& parts = l.split_parts();
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    if (pi) os << ' ';
    os << '(';
    for (std::size_t i = 0; i < parts[pi].size(); ++i) {
      if (i) os << ' ';
      os << parts[pi][i];
    }
    os << ')';
  }
  os << ")\n";
  return os.str();
}

}  // namespace zek
