#include "zek/enumerate.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <utility>

namespace zek {

namespace {

struct Entry {
  LinkTerm term;
  int level;
};

std::vector<std::size_t> positions_with_index(const Link& l, bool allow0, bool allow2) {
  std::vector<std::size_t> out;
  auto comps = l.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if ((comps[i].index == 0 && allow0) || (comps[i].index == 2 && allow2)) out.push_back(i);
  }
  return out;
}

/// Per-(term, move kind) application budget for one level. apply() returns
/// false once the budget is spent, marking the stream truncated if another
/// candidate was still pending.
struct Budget {
  int remaining;
  bool* truncated;

  bool take() {
    if (remaining == 0) {
      *truncated = true;
      return false;
    }
    --remaining;
    return true;
  }
};

}  // namespace

EnumStats enumerate_links(int depth, const EnumCaps& caps,
                          const std::function<void(const LinkTerm&, const Link&)>& emit) {
  EnumStats stats;

  std::vector<Entry> all;  // retained terms, kept sorted by link key
  std::set<std::string> seen;

  auto sort_entries = [](std::vector<Entry>& v) {
    std::sort(v.begin(), v.end(),
              [](const Entry& a, const Entry& b) { return a.term.link().key() < b.term.link().key(); });
  };

  LinkTerm root = LinkTerm::hopf();
  seen.insert(root.link().key());
  all.push_back(Entry{root, 0});
  emit(root, root.link());
  ++stats.emitted;

  for (int level = 1; level <= depth; ++level) {
    std::vector<LinkTerm> candidates;
    auto propose = [&](LinkTerm t) {
      ++stats.applications;
      candidates.push_back(std::move(t));
    };

    for (const Entry& e1 : all) {
      const LinkTerm& t1 = e1.term;
      bool t1_new = e1.level == level - 1;

      // Binary moves pair t1 with every retained partner, skipping pairs of
      // two old terms (their results appeared at earlier levels).
      auto partners = [&](auto&& per_pair) {
        for (const Entry& e2 : all) {
          if (!t1_new && e2.level != level - 1) continue;
          if (!per_pair(e2.term)) return;
        }
      };

      {  // move I
        Budget budget{caps.max_branch, &stats.truncated};
        partners([&](const LinkTerm& t2) {
          if (!budget.take()) return false;
          propose(move_i(t1, t2));
          return true;
        });
      }
      {  // move II: remove an index-0/2 component of the second operand
        Budget budget{caps.max_branch, &stats.truncated};
        partners([&](const LinkTerm& t2) {
          for (std::size_t pos : positions_with_index(t2.link(), true, true)) {
            if (!budget.take()) return false;
            propose(move_ii(t1, t2, Selector{pos}));
          }
          return true;
        });
      }
      {  // move III: an index-0 component of t1 against an index-2 of t2
        Budget budget{caps.max_branch, &stats.truncated};
        auto sel1 = positions_with_index(t1.link(), true, false);
        partners([&](const LinkTerm& t2) {
          for (std::size_t p1 : sel1) {
            for (std::size_t p2 : positions_with_index(t2.link(), false, true)) {
              if (!budget.take()) return false;
              propose(move_iii(t1, Selector{p1}, t2, Selector{p2}));
            }
          }
          return true;
        });
      }
      {  // move IV: sum along chosen components, merged index from K1 then K2
        Budget budget{caps.max_branch, &stats.truncated};
        auto sel1 = positions_with_index(t1.link(), true, true);
        partners([&](const LinkTerm& t2) {
          for (std::size_t p1 : sel1) {
            int i1 = t1.link().components()[p1].index;
            for (std::size_t p2 : positions_with_index(t2.link(), true, true)) {
              int i2 = t2.link().components()[p2].index;
              if (!budget.take()) return false;
              propose(move_iv(t1, Selector{p1}, t2, Selector{p2}, i1));
              if (i2 != i1) {
                if (!budget.take()) return false;
                propose(move_iv(t1, Selector{p1}, t2, Selector{p2}, i2));
              }
            }
          }
          return true;
        });
      }

      if (!t1_new) continue;  // unary moves on the newest level only

      {  // move V: p >= 2 in generated terms, q coprime, index flags ascending
        Budget budget{caps.max_branch, &stats.truncated};
        bool spent = false;
        for (std::size_t pos : positions_with_index(t1.link(), true, true)) {
          int ik = t1.link().components()[pos].index;
          for (long long p = 2; p <= caps.max_p && !spent; ++p) {
            for (long long q = 1; q <= caps.max_q && !spent; ++q) {
              if (std::gcd(p, q) != 1) continue;
              for (int i1 : {0, 2}) {
                for (int i3 : {0, 2}) {
                  if (i1 != ik && i3 != ik) continue;
                  if (!budget.take()) {
                    spent = true;
                    break;
                  }
                  propose(move_v(t1, Selector{pos}, p, q, i1, i3));
                }
                if (spent) break;
              }
            }
          }
          if (spent) break;
        }
      }
      {  // move VI: odd q ascending
        Budget budget{caps.max_branch, &stats.truncated};
        bool spent = false;
        for (std::size_t pos : positions_with_index(t1.link(), true, true)) {
          for (long long q = 1; q <= caps.max_q; q += 2) {
            if (!budget.take()) {
              spent = true;
              break;
            }
            propose(move_vi(t1, Selector{pos}, q));
          }
          if (spent) break;
        }
      }
    }

    // Deduplicate by canonical link key, first derivation wins.
    std::vector<Entry> fresh;
    for (LinkTerm& t : candidates) {
      if (!seen.insert(t.link().key()).second) continue;
      fresh.push_back(Entry{std::move(t), level});
    }
    sort_entries(fresh);
    for (const Entry& e : fresh) {
      emit(e.term, e.term.link());
      ++stats.emitted;
    }
    all.insert(all.end(), std::make_move_iterator(fresh.begin()),
               std::make_move_iterator(fresh.end()));
    sort_entries(all);
  }

  return stats;
}

std::vector<std::string> enumerate_snapshot(int depth, const EnumCaps& caps, EnumStats* stats) {
  std::vector<std::string> lines;
  EnumStats s = enumerate_links(depth, caps,
                                [&](const LinkTerm&, const Link& l) { lines.push_back(l.key()); });
  if (stats) *stats = s;
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace zek
