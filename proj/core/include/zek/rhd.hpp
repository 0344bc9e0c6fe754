#pragma once

// Round handles, stratified critical-set descriptions, and the thickening
// construction: a valid torus-free stratification becomes a round-handle
// decomposition plan whose cores carry an indexed link.
//
// A round handle is a solid torus with an index and an exit set on its
// boundary: index 0 has empty exit set, index 1 exits through two annuli
// (orientable) or one doubly-wrapping annulus (nonorientable), index 2 exits
// through the whole boundary torus. Handles attach in nondecreasing index
// order. 1-strata circles thicken to 0-handles, annulus/Möbius 2-strata to
// orientable/nonorientable 1-handles, declared exterior solid tori close the
// plan as 2-handles.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "zek/knot.hpp"
#include "zek/link.hpp"

namespace zek {

struct RoundHandle {
  enum class Exit : std::uint8_t { none, orientable, nonorientable, full };

  int index = 0;  // 0, 1 or 2
  Exit exit = Exit::none;
  Knot core_knot = Knot::make_unknot();
  std::vector<std::size_t> attachments;  // earlier handles in the plan
  std::string provenance;                // "one_stratum:i" | "two_stratum:j" | "exterior:k"
};

/// Combinatorial description of a critical set: 1-strata circles with knot
/// types, 2-strata glued to them, and the declared exterior solid tori.
struct StratifiedSet {
  struct Circle {
    Knot knot = Knot::make_unknot();
  };
  struct Annulus {
    std::size_t end_a = 0, end_b = 0;  // refs into one_strata
  };
  struct Mobius {
    std::size_t end = 0;               // ref into one_strata
    long long boundary_cable_q = 3;    // odd; the end circle is the (2,q)-cable of the band core
  };
  struct CriticalTorus {};  // closed 2-stratum, no ends
  using TwoStratum = std::variant<Annulus, Mobius, CriticalTorus>;

  struct ExteriorTorus {
    Knot core_knot = Knot::make_unknot();
  };

  std::vector<Circle> one_strata;
  std::vector<TwoStratum> two_strata;
  std::vector<ExteriorTorus> exterior_tori;
};

struct StratificationReport {
  std::vector<int> prong_counts;  // incident 2-stratum sheets per 1-stratum
  std::size_t annuli = 0;
  std::size_t mobius_bands = 0;
  std::size_t critical_tori = 0;
  std::vector<std::string> errors;
  std::vector<std::string> lints;

  bool ok() const { return errors.empty(); }
};

/// Checks the stratification data: no dangling circle references, every
/// listed 1-stratum has prong count >= 1 (an isolated circle is the
/// 1-dimensional critical set, a distinct case), Möbius boundaries
/// destructure as (2,q)-cables with the declared odd q, annulus ends carry
/// equal knot types. Prong count 2 is a lint: a manifold point that could be
/// merged into the 2-stratum.
StratificationReport validate_stratification(const StratifiedSet& s);

struct RHDPlan {
  std::vector<RoundHandle> handles;  // nondecreasing index order
};

/// Thickens a valid torus-free stratification: one 0-handle per 1-stratum
/// (core = the stratum knot), one 1-handle per annulus/Möbius band (core =
/// the band core knot, attached to its end circles' 0-handles), one 2-handle
/// per declared exterior solid torus. Critical tori are rejected: the
/// construction has no convention for them.
RHDPlan build_rhd(const StratifiedSet& s);

/// One component per handle: (core knot, handle index), origins recording
/// provenance, one split part (no separating sphere is certified).
Link cores_link(const RHDPlan& p);

/// Destructures canonicalize(boundary) as (cab 2 q K) and returns K, the
/// core the band's guaranteed periodic orbit is isotopic to. Any canonical
/// (2,q)-cable has q odd. Errors otherwise: not a Möbius boundary in this
/// model.
Knot mobius_core_knot(const Knot& boundary);

/// The closing construction: two 1-strata carrying (2,2n+1) torus knots,
/// each the boundary of a Möbius band with unknotted core, the two band
/// cores forming a Hopf link; two declared unknotted exterior solid tori
/// close the assembly. Requires n >= 1.
StratifiedSet seifert_example(long long n);

std::string to_string(const RHDPlan& p);
std::string to_string(const StratificationReport& r);

}  // namespace zek
