#include "zek/json_io.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zek/errors.hpp"

namespace zek {

namespace {

using nlohmann::json;

constexpr const char* kLinkSchema = "zek.indexed_link/1";
constexpr const char* kStratSchema = "zek.stratified_set/1";
constexpr const char* kPlanSchema = "zek.rhd_plan/1";

json parse_document(std::string_view text, const char* schema) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != schema)
    throw ParseError(std::string("expected a document with \"schema\": \"") + schema + "\"", 0);
  return doc;
}

const char* exit_name(RoundHandle::Exit e) {
  switch (e) {
    case RoundHandle::Exit::none: return "none";
    case RoundHandle::Exit::orientable: return "orientable";
    case RoundHandle::Exit::nonorientable: return "nonorientable";
    case RoundHandle::Exit::full: return "full";
  }
  return "?";
}

}  // namespace

std::string link_to_json(const Link& l, int indent) {
  json doc;
  doc["schema"] = kLinkSchema;
  doc["components"] = json::array();
  for (const IndexedComponent& c : l.components()) {
    doc["components"].push_back(
        {{"knot", to_string(c.knot)}, {"index", c.index}, {"origin", c.origin}});
  }
  doc["split_parts"] = l.split_parts();
  return doc.dump(indent);
}

namespace {

json link_body(const Link& l) {
  json body;
  body["components"] = json::array();
  for (const IndexedComponent& c : l.components()) {
    body["components"].push_back(
        {{"knot", to_string(c.knot)}, {"index", c.index}, {"origin", c.origin}});
  }
  body["split_parts"] = l.split_parts();
  return body;
}

}  // namespace

std::string enumeration_to_json(int depth, const EnumCaps& caps, EnumStats* stats, int indent) {
  std::vector<std::pair<std::string, json>> rows;
  EnumStats s = enumerate_links(depth, caps, [&](const LinkTerm& t, const Link& l) {
    json row = link_body(l);
    row["term"] = t.to_sexpr();
    row["key"] = l.key();
    rows.emplace_back(l.key(), std::move(row));
  });
  if (stats) *stats = s;
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json doc;
  doc["schema"] = "zek.enumeration/1";
  doc["depth"] = depth;
  doc["caps"] = {{"max_p", caps.max_p}, {"max_q", caps.max_q}, {"max_branch", caps.max_branch}};
  doc["links"] = json::array();
  for (auto& [key, row] : rows) doc["links"].push_back(std::move(row));
  return doc.dump(indent);
}

std::string stratified_set_to_json(const StratifiedSet& s, int indent) {
  json doc;
  doc["schema"] = kStratSchema;
  doc["one_strata"] = json::array();
  for (const auto& c : s.one_strata) doc["one_strata"].push_back({{"knot", to_string(c.knot)}});
  doc["two_strata"] = json::array();
  for (const auto& stratum : s.two_strata) {
    if (const auto* a = std::get_if<StratifiedSet::Annulus>(&stratum)) {
      doc["two_strata"].push_back(
          {{"type", "annulus"}, {"ends", json::array({a->end_a, a->end_b})}});
    } else if (const auto* m = std::get_if<StratifiedSet::Mobius>(&stratum)) {
      doc["two_strata"].push_back(
          {{"type", "mobius"}, {"end", m->end}, {"boundary_cable_q", m->boundary_cable_q}});
    } else {
      doc["two_strata"].push_back({{"type", "torus"}});
    }
  }
  doc["exterior_tori"] = json::array();
  for (const auto& t : s.exterior_tori)
    doc["exterior_tori"].push_back({{"core_knot", to_string(t.core_knot)}});
  return doc.dump(indent);
}

StratifiedSet stratified_set_from_json(std::string_view text) {
  json doc = parse_document(text, kStratSchema);
  StratifiedSet s;
  try {
    for (const auto& c : doc.value("one_strata", json::array())) {
      s.one_strata.push_back(
          StratifiedSet::Circle{parse_knot(c.at("knot").get<std::string>())});
    }
    for (const auto& t : doc.value("two_strata", json::array())) {
      const std::string type = t.at("type").get<std::string>();
      if (type == "annulus") {
        const auto& ends = t.at("ends");
        if (!ends.is_array() || ends.size() != 2)
          throw ParseError("annulus \"ends\" must be an array of two 1-stratum indices", 0);
        s.two_strata.push_back(StratifiedSet::Annulus{ends[0].get<std::size_t>(),
                                                      ends[1].get<std::size_t>()});
      } else if (type == "mobius") {
        s.two_strata.push_back(StratifiedSet::Mobius{t.at("end").get<std::size_t>(),
                                                     t.at("boundary_cable_q").get<long long>()});
      } else if (type == "torus") {
        s.two_strata.push_back(StratifiedSet::CriticalTorus{});
      } else {
        throw ParseError("unknown two_strata type '" + type + "'", 0);
      }
    }
    for (const auto& t : doc.value("exterior_tori", json::array())) {
      s.exterior_tori.push_back(
          StratifiedSet::ExteriorTorus{parse_knot(t.at("core_knot").get<std::string>())});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed stratified set document: ") + e.what(), 0);
  }
  return s;
}

std::string rhd_plan_to_json(const RHDPlan& p, int indent) {
  json doc;
  doc["schema"] = kPlanSchema;
  doc["handles"] = json::array();
  for (const RoundHandle& h : p.handles) {
    doc["handles"].push_back({{"index", h.index},
                              {"exit", exit_name(h.exit)},
                              {"core_knot", to_string(h.core_knot)},
                              {"attachments", h.attachments},
                              {"provenance", h.provenance}});
  }
  return doc.dump(indent);
}

}  // namespace zek
