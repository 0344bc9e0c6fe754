#pragma once

// Versioned JSON encodings for machine consumers. Schema identifiers:
//
//   zek.indexed_link/1    {"schema", "components": [{"knot","index","origin"}...],
//                          "split_parts": [[positions]...]}
//   zek.stratified_set/1  {"schema", "one_strata": [{"knot"}...],
//                          "two_strata": [{"type":"annulus","ends":[a,b]} |
//                                         {"type":"mobius","end":e,"boundary_cable_q":q} |
//                                         {"type":"torus"}...],
//                          "exterior_tori": [{"core_knot"}...]}
//   zek.rhd_plan/1        {"schema", "handles": [{"index","exit","core_knot",
//                          "attachments","provenance"}...]}
//   zek.enumeration/1     {"schema", "depth", "caps", "links": [{"term","key",
//                          "components","split_parts"}...]}  (sorted by key)
//
// Knots are canonical s-expression strings; positions refer to the sorted
// canonical component order.

#include <string>
#include <string_view>

#include "zek/enumerate.hpp"
#include "zek/link.hpp"
#include "zek/rhd.hpp"

namespace zek {

std::string link_to_json(const Link& l, int indent = 2);

/// Runs enumerate_links and serializes the stream.
std::string enumeration_to_json(int depth, const EnumCaps& caps, EnumStats* stats = nullptr,
                                int indent = 2);

std::string stratified_set_to_json(const StratifiedSet& s, int indent = 2);
StratifiedSet stratified_set_from_json(std::string_view text);

std::string rhd_plan_to_json(const RHDPlan& p, int indent = 2);

}  // namespace zek
