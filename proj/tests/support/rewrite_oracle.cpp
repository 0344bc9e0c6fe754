#include "support/rewrite_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace zek::testing {

namespace {

using zek::Knot;

long long abs_ll(long long v) { return v < 0 ? -v : v; }

// One rewrite rule applicable at a node. `swap_with` is the factor position
// for the adjacent-transposition sort rule.
struct Redex {
  enum class Rule {
    mirror,          // (cab p q K), p<0 or q<0         -> (cab |p| |q| K)
    meridian,        // (cab 0 q K)                     -> U
    longitude,       // (cab ±1 q K)                    -> K
    trivial_torus,   // (cab p q U), min(|p|,|q|) <= 1  -> U
    torus_order,     // (cab p q U), |p| > |q| >= 2     -> (cab q p U)
    sum_flatten,     // sum with a sum factor           -> splice it
    sum_drop_unknot, // sum with a U factor             -> remove it
    sum_empty,       // (sum)                           -> U
    sum_singleton,   // (sum K)                         -> K
    sum_swap,        // adjacent factors out of order   -> transpose them
  };
  std::vector<std::size_t> path;  // child positions from the root
  Rule rule;
  std::size_t arg = 0;  // factor position for sum_flatten/sum_drop_unknot/sum_swap
};

void collect(const Knot& k, std::vector<std::size_t>& path, std::vector<Redex>& out) {
  switch (k.kind()) {
    case Knot::Kind::unknot:
      return;
    case Knot::Kind::cable: {
      long long p = k.p(), q = k.q();
      if (p < 0 || q < 0) out.push_back({path, Redex::Rule::mirror});
      if (p == 0) out.push_back({path, Redex::Rule::meridian});
      if (abs_ll(p) == 1) out.push_back({path, Redex::Rule::longitude});
      if (k.companion().kind() == Knot::Kind::unknot) {
        if (std::min(abs_ll(p), abs_ll(q)) <= 1 && abs_ll(p) != 1 && p != 0)
          out.push_back({path, Redex::Rule::trivial_torus});
        if (abs_ll(p) > abs_ll(q) && abs_ll(q) >= 2)
          out.push_back({path, Redex::Rule::torus_order});
      }
      path.push_back(0);
      collect(k.companion(), path, out);
      path.pop_back();
      return;
    }
    case Knot::Kind::sum: {
      auto fs = k.factors();
      if (fs.empty()) out.push_back({path, Redex::Rule::sum_empty});
      if (fs.size() == 1) out.push_back({path, Redex::Rule::sum_singleton});
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].kind() == Knot::Kind::sum) out.push_back({path, Redex::Rule::sum_flatten, i});
        if (fs[i].kind() == Knot::Kind::unknot)
          out.push_back({path, Redex::Rule::sum_drop_unknot, i});
        if (i + 1 < fs.size() && zek::compare(fs[i], fs[i + 1]) > 0)
          out.push_back({path, Redex::Rule::sum_swap, i});
      }
      for (std::size_t i = 0; i < fs.size(); ++i) {
        path.push_back(i);
        collect(fs[i], path, out);
        path.pop_back();
      }
      return;
    }
  }
}

Knot apply_at(const Knot& k, const Redex& r, std::size_t path_pos) {
  if (path_pos < r.path.size()) {
    std::size_t child = r.path[path_pos];
    if (k.kind() == Knot::Kind::cable) {
      return Knot::make_cable(k.p(), k.q(), apply_at(k.companion(), r, path_pos + 1));
    }
    auto fs = k.factors();
    std::vector<Knot> out(fs.begin(), fs.end());
    out[child] = apply_at(out[child], r, path_pos + 1);
    return Knot::make_sum(std::move(out));
  }
  switch (r.rule) {
    case Redex::Rule::mirror:
      return Knot::make_cable(abs_ll(k.p()), abs_ll(k.q()), k.companion());
    case Redex::Rule::meridian:
      return Knot::make_unknot();
    case Redex::Rule::longitude:
      return k.companion();
    case Redex::Rule::trivial_torus:
      return Knot::make_unknot();
    case Redex::Rule::torus_order:
      return Knot::make_cable(k.q(), k.p(), k.companion());
    case Redex::Rule::sum_flatten: {
      auto fs = k.factors();
      std::vector<Knot> out;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i == r.arg) {
          for (const Knot& g : fs[i].factors()) out.push_back(g);
        } else {
          out.push_back(fs[i]);
        }
      }
      return Knot::make_sum(std::move(out));
    }
    case Redex::Rule::sum_drop_unknot: {
      auto fs = k.factors();
      std::vector<Knot> out;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (i != r.arg) out.push_back(fs[i]);
      return Knot::make_sum(std::move(out));
    }
    case Redex::Rule::sum_empty:
      return Knot::make_unknot();
    case Redex::Rule::sum_singleton:
      return k.factors()[0];
    case Redex::Rule::sum_swap: {
      auto fs = k.factors();
      std::vector<Knot> out(fs.begin(), fs.end());
      std::swap(out[r.arg], out[r.arg + 1]);
      return Knot::make_sum(std::move(out));
    }
  }
  return k;
}

}  // namespace

std::size_t count_redexes(const zek::Knot& k) {
  std::vector<Redex> redexes;
  std::vector<std::size_t> path;
  collect(k, path, redexes);
  return redexes.size();
}

zek::Knot slow_canonicalize(const zek::Knot& k, std::mt19937_64& rng) {
  zek::validate(k);
  Knot cur = k;
  // Every rule strictly decreases (nodes, negative parameters, inversions)
  // lexicographically, so this cap is far beyond any reachable step count.
  std::size_t cap = 64 * cur.node_count() * cur.node_count() + 1024;
  for (std::size_t step = 0; step < cap; ++step) {
    std::vector<Redex> redexes;
    std::vector<std::size_t> path;
    collect(cur, path, redexes);
    if (redexes.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    cur = apply_at(cur, redexes[pick(rng)], 0);
  }
  throw std::logic_error("slow_canonicalize did not reach a fixpoint");
}

}  // namespace zek::testing
