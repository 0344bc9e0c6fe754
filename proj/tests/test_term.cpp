#include <doctest.h>

#include <vector>

#include "support/replay.hpp"
#include "zek/enumerate.hpp"
#include "zek/errors.hpp"
#include "zek/term.hpp"

using namespace zek;

namespace {

Knot U() { return Knot::make_unknot(); }
Knot trefoil() { return cable(2, 3, Knot::make_unknot()); }

std::size_t count_comp(const Link& l, const Knot& k, int index) {
  std::size_t n = 0;
  for (const IndexedComponent& c : l.components())
    if (c.index == index && equals(c.knot, k)) ++n;
  return n;
}

}  // namespace

TEST_CASE("axiom O: the base Hopf link") {
  LinkTerm h = LinkTerm::hopf();
  const Link& l = h.link();
  REQUIRE(l.size() == 2);
  CHECK(count_comp(l, U(), 0) == 1);
  CHECK(count_comp(l, U(), 2) == 1);
  CHECK(l.unknot_count() == 2);
  CHECK(l.split_parts().size() == 1);
  CHECK(h.depth() == 0);
}

TEST_CASE("move I: split sum with a separating unknot") {
  LinkTerm t = move_i(LinkTerm::hopf(), LinkTerm::hopf());
  const Link& l = t.link();
  REQUIRE(l.size() == 5);
  CHECK(count_comp(l, U(), 0) == 2);
  CHECK(count_comp(l, U(), 2) == 2);
  CHECK(count_comp(l, U(), 1) == 1);
  CHECK(l.split_parts().size() == 3);  // two Hopf parts plus u
}

TEST_CASE("move II: drop a 0/2-indexed component of the second operand") {
  LinkTerm h = LinkTerm::hopf();
  LinkTerm t = move_ii(h, h, Selector{0});  // #0 = (U,0)
  const Link& l = t.link();
  CHECK(l.size() == 4);  // |L1| + |L2| components
  CHECK(count_comp(l, U(), 0) == 1);
  CHECK(count_comp(l, U(), 2) == 2);
  CHECK(count_comp(l, U(), 1) == 1);
  CHECK(l.split_parts().size() == 3);
}

TEST_CASE("move III: fuse an attractor and a repeller") {
  LinkTerm h = LinkTerm::hopf();
  LinkTerm t = move_iii(h, Selector{0}, h, Selector{1});
  const Link& l = t.link();
  CHECK(l.size() == 3);  // |L1| + |L2| - 1
  CHECK(count_comp(l, U(), 0) == 1);
  CHECK(count_comp(l, U(), 1) == 1);
  CHECK(count_comp(l, U(), 2) == 1);
  CHECK(l.split_parts().size() == 3);
  // K1 must have index 0 and K2 index 2.
  CHECK_THROWS_WITH_AS(move_iii(h, Selector{1}, h, Selector{1}),
                       doctest::Contains("axiom III"), ValidationError);
  CHECK_THROWS_WITH_AS(move_iii(h, Selector{0}, h, Selector{0}),
                       doctest::Contains("must have index 2"), ValidationError);
}

TEST_CASE("move IV: connected sum along selected components plus a meridian") {
  LinkTerm h = LinkTerm::hopf();
  LinkTerm t = move_iv(h, Selector{0}, h, Selector{0}, 0);
  const Link& l = t.link();
  REQUIRE(l.size() == 4);  // |L1| + |L2|
  CHECK(count_comp(l, U(), 0) == 1);  // U # U = U
  CHECK(count_comp(l, U(), 1) == 1);  // the meridian
  CHECK(count_comp(l, U(), 2) == 2);
  CHECK(l.split_parts().size() == 1);  // the sphere-sum merges the parts
  // The merged index must come from K1 or K2.
  CHECK_THROWS_WITH_AS(move_iv(h, Selector{0}, h, Selector{0}, 2),
                       doctest::Contains("axiom IV"), ValidationError);
  CHECK_NOTHROW(move_iv(h, Selector{0}, h, Selector{1}, 2));
}

TEST_CASE("move V: a core and two parallel cables") {
  LinkTerm h = LinkTerm::hopf();
  // K = #1 = (U,2); idx_k1 = 2 satisfies the index condition.
  LinkTerm t = move_v(h, Selector{1}, 2, 3, 2, 0);
  const Link& l = t.link();
  REQUIRE(l.size() == 4);  // |L| + 2
  CHECK(count_comp(l, U(), 0) == 1);
  CHECK(count_comp(l, U(), 2) == 1);       // the core kept K's knot type
  CHECK(count_comp(l, trefoil(), 1) == 1);  // cable K2
  CHECK(count_comp(l, trefoil(), 0) == 1);  // cable K3
  CHECK(l.split_parts().size() == 1);

  // Neither K1 nor K3 takes K's index: rejected.
  CHECK_THROWS_WITH_AS(move_v(h, Selector{1}, 2, 3, 0, 0),
                       doctest::Contains("at least one of the indices"), ValidationError);
  CHECK_THROWS_WITH_AS(move_v(h, Selector{1}, 2, 4, 2, 0), doctest::Contains("coprime"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(move_v(h, Selector{1}, 0, 1, 2, 0), doctest::Contains("p must be >= 1"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(move_v(h, Selector{1}, 2, 3, 1, 2),
                       doctest::Contains("must each be 0 or 2"), ValidationError);
  // p = 1 is admitted with a lint: the cables collapse to the core's type.
  LinkTerm collapsed = move_v(h, Selector{1}, 1, 5, 2, 0);
  CHECK(collapsed.lints().size() == 1);
  CHECK(count_comp(collapsed.link(), U(), 1) == 1);
}

TEST_CASE("move VI: reindex K and add a (2,q)-cable") {
  LinkTerm h = LinkTerm::hopf();
  LinkTerm t = move_vi(h, Selector{0}, 3);
  const Link& l = t.link();
  REQUIRE(l.size() == 3);  // |L| + 1
  CHECK(count_comp(l, U(), 1) == 1);        // K reindexed to 1
  CHECK(count_comp(l, U(), 2) == 1);
  CHECK(count_comp(l, trefoil(), 0) == 1);  // the cable takes K's old index
  CHECK(l.split_parts().size() == 1);
  CHECK_THROWS_WITH_AS(move_vi(h, Selector{0}, 4), doctest::Contains("odd"), ValidationError);
  CHECK_NOTHROW(move_vi(h, Selector{0}, -3));
}

TEST_CASE("selectors are bounds- and index-checked") {
  LinkTerm h = LinkTerm::hopf();
  CHECK_THROWS_WITH_AS(move_ii(h, h, Selector{7}), doctest::Contains("out of range"),
                       ValidationError);
  LinkTerm t = move_i(h, h);  // contains (U,1), never selectable
  std::size_t u_pos = 0;
  auto comps = t.link().components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].index == 1) u_pos = i;
  CHECK_THROWS_WITH_AS(move_vi(t, Selector{u_pos}, 3), doctest::Contains("index"),
                       ValidationError);
}

TEST_CASE("component count deltas over random derivations") {
  EnumCaps caps;
  caps.max_p = 3;
  caps.max_q = 3;
  caps.max_branch = 3;
  std::vector<LinkTerm> pool;
  enumerate_links(2, caps, [&](const LinkTerm& t, const Link&) { pool.push_back(t); });
  REQUIRE(pool.size() > 10);
  auto first_critical = [](const Link& l) {
    auto comps = l.components();
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i].index == 0 || comps[i].index == 2) return i;
    REQUIRE(false);  // every generated link has index-0 and index-2 components
    return std::size_t{0};
  };
  for (const LinkTerm& a : pool) {
    const std::size_t na = a.link().size();
    const LinkTerm& b = pool[(na * 7 + 3) % pool.size()];
    const std::size_t nb = b.link().size();
    std::size_t ka = first_critical(a.link());
    std::size_t kb = first_critical(b.link());
    int ia = a.link().components()[ka].index;
    int ib = b.link().components()[kb].index;
    CHECK(move_i(a, b).link().size() == na + nb + 1);
    CHECK(move_ii(a, b, Selector{kb}).link().size() == na + nb);
    CHECK(move_iv(a, Selector{ka}, b, Selector{kb}, ia).link().size() == na + nb);
    CHECK(move_v(a, Selector{ka}, 2, 3, ia, ia).link().size() == na + 2);
    CHECK(move_vi(a, Selector{ka}, 3).link().size() == na + 1);
    if (ia == 0 && ib == 2)
      CHECK(move_iii(a, Selector{ka}, b, Selector{kb}).link().size() == na + nb - 1);
  }
}

TEST_CASE("check_invariants") {
  CHECK(check_invariants(LinkTerm::hopf().link()).pass());
  // A hand-built link outside the generated class: no unknotted component.
  Link bad({IndexedComponent{trefoil(), 0, "x"}, IndexedComponent{trefoil(), 2, "y"}},
           {{0, 1}});
  InvariantReport r = check_invariants(bad);
  CHECK_FALSE(r.unknot_pair);
  CHECK(r.unknot_count == 0);
  CHECK(r.index0_present);
  CHECK(r.index2_present);
  CHECK_FALSE(r.pass());
}

TEST_CASE("a split part vanishes when its last component is removed") {
  // Inner term: hopf with a lone (U,0) remnant part and the unknot u.
  LinkTerm inner = move_ii(LinkTerm::hopf(), LinkTerm::hopf(), Selector{1});
  REQUIRE(inner.link().split_parts().size() == 3);
  // #1 is the singleton (U,0): insertion order puts the first operand's
  // components ahead of the remnant on full ties.
  REQUIRE(inner.link().components()[1].index == 0);
  REQUIRE(inner.link().split_parts()[1].size() == 1);
  LinkTerm outer = move_ii(LinkTerm::hopf(), inner, Selector{1});
  CHECK(outer.link().size() == 6);
  CHECK(outer.link().key() == "(((U 0) (U 2)) ((U 0) (U 2)) ((U 1)) ((U 1)))");
}

TEST_CASE("split parts and the nonsplittability query") {
  LinkTerm h = LinkTerm::hopf();
  CHECK(h.link().split_parts().size() == 1);
  std::vector<std::size_t> both{0, 1};
  CHECK(h.link().in_one_part(both));  // a designated set inside one part: not separated

  LinkTerm t = move_i(h, h);
  CHECK(t.link().split_parts().size() == 3);
  const auto& parts = t.link().split_parts();
  // Components of different parts are separated.
  std::vector<std::size_t> across{parts[0][0], parts[1][0]};
  CHECK_FALSE(t.link().in_one_part(across));
  CHECK(t.link().in_one_part(parts[0]));
}

TEST_CASE("derivation certificates") {
  CHECK(LinkTerm::hopf().derivation() == "O");
  LinkTerm t = move_vi(LinkTerm::hopf(), Selector{0}, 3);
  std::string cert = t.derivation();
  CHECK(cert.find("O\nVI K=#0") == 0);
  CHECK(cert.find("q=3") != std::string::npos);

  // Replay oracle: random terms of depth <= 3 replay to the same link.
  EnumCaps caps;
  caps.max_p = 3;
  caps.max_q = 3;
  caps.max_branch = 2;
  std::size_t replayed = 0;
  enumerate_links(3, caps, [&](const LinkTerm& term, const Link& l) {
    LinkTerm again = zek::testing::replay_certificate(term.derivation());
    CHECK(again.link().key() == l.key());
    ++replayed;
  });
  CHECK(replayed > 50);
}

TEST_CASE("term grammar round trip") {
  LinkTerm t = parse_term("(V (hopf) #1 2 3 2 0)");
  CHECK(t.link().size() == 4);
  CHECK(parse_term(t.to_sexpr()).link().key() == t.link().key());

  LinkTerm nested = parse_term("(VI (I (hopf) (hopf)) #0 3)");
  CHECK(nested.to_sexpr() == "(VI (I (hopf) (hopf)) #0 3)");
  CHECK(nested.depth() == 2);

  CHECK_THROWS_AS(parse_term("(hopf extra)"), ParseError);
  CHECK_THROWS_AS(parse_term("(VII (hopf))"), ParseError);
  CHECK_THROWS_AS(parse_term("(II (hopf) (hopf))"), ParseError);
  // Axiom V failure: #1 = (U,2) but both offered indices are 0.
  CHECK_THROWS_WITH_AS(parse_term("(V (hopf) #1 2 3 0 0)"),
                       doctest::Contains("at least one of the indices"), ValidationError);
}
