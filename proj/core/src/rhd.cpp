#include "zek/rhd.hpp"

#include <sstream>

#include "zek/errors.hpp"

namespace zek {

StratificationReport validate_stratification(const StratifiedSet& s) {
  StratificationReport r;
  r.prong_counts.assign(s.one_strata.size(), 0);

  auto circle_ok = [&](std::size_t idx, const char* what, std::size_t stratum) {
    if (idx < s.one_strata.size()) return true;
    std::ostringstream os;
    os << "two_strata[" << stratum << "]: " << what << " references missing 1-stratum " << idx
       << " (have " << s.one_strata.size() << ")";
    r.errors.push_back(os.str());
    return false;
  };

  for (std::size_t si = 0; si < s.two_strata.size(); ++si) {
    const auto& stratum = s.two_strata[si];
    if (const auto* a = std::get_if<StratifiedSet::Annulus>(&stratum)) {
      ++r.annuli;
      bool ends_ok = circle_ok(a->end_a, "annulus end", si);
      ends_ok = circle_ok(a->end_b, "annulus end", si) && ends_ok;
      if (ends_ok) {
        ++r.prong_counts[a->end_a];
        ++r.prong_counts[a->end_b];
        // Both boundary circles of an embedded annulus are isotopic to its
        // core, so their knot types must agree.
        if (!equals(s.one_strata[a->end_a].knot, s.one_strata[a->end_b].knot)) {
          std::ostringstream os;
          os << "two_strata[" << si << "]: annulus ends carry different knot types "
             << print_knot(s.one_strata[a->end_a].knot) << " vs "
             << print_knot(s.one_strata[a->end_b].knot);
          r.errors.push_back(os.str());
        }
      }
    } else if (const auto* m = std::get_if<StratifiedSet::Mobius>(&stratum)) {
      ++r.mobius_bands;
      if (m->boundary_cable_q % 2 == 0) {
        std::ostringstream os;
        os << "two_strata[" << si << "]: Mobius boundary_cable_q must be odd (got "
           << m->boundary_cable_q << ")";
        r.errors.push_back(os.str());
      } else if (circle_ok(m->end, "Mobius end", si)) {
        ++r.prong_counts[m->end];
        // The boundary circle must be the (2,q)-cable of the band core.
        Knot boundary = canonicalize(s.one_strata[m->end].knot);
        bool match = boundary.kind() == Knot::Kind::cable && boundary.p() == 2 &&
                     boundary.q() == (m->boundary_cable_q < 0 ? -m->boundary_cable_q
                                                              : m->boundary_cable_q);
        if (!match) {
          std::ostringstream os;
          os << "two_strata[" << si << "]: 1-stratum knot " << print_knot(boundary)
             << " is not the (2," << m->boundary_cable_q << ")-cable of any core";
          r.errors.push_back(os.str());
        }
      }
    } else {
      ++r.critical_tori;
    }
  }

  for (std::size_t ci = 0; ci < s.one_strata.size(); ++ci) {
    if (r.prong_counts[ci] == 0) {
      std::ostringstream os;
      os << "one_strata[" << ci << "]: prong count 0: an isolated critical circle is the "
            "1-dimensional case and cannot sit in a 2-dimensional stratification";
      r.errors.push_back(os.str());
    } else if (r.prong_counts[ci] == 2) {
      std::ostringstream os;
      os << "one_strata[" << ci << "]: prong count 2 is a manifold point, merge into the "
            "2-stratum";
      r.lints.push_back(os.str());
    }
  }

  return r;
}

Knot mobius_core_knot(const Knot& boundary) {
  Knot b = canonicalize(boundary);
  if (b.kind() != Knot::Kind::cable || b.p() != 2)
    throw ValidationError("not a Mobius boundary in this model: " + to_string(b) +
                          " is not a (2,q)-cable");
  return b.companion();  // canonical (2,q)-cables have q odd automatically
}

RHDPlan build_rhd(const StratifiedSet& s) {
  StratificationReport report = validate_stratification(s);
  if (!report.ok()) {
    std::ostringstream os;
    os << "invalid stratification:";
    for (const std::string& e : report.errors) os << "\n  " << e;
    throw ValidationError(os.str());
  }
  if (report.critical_tori > 0)
    throw ValidationError("unsupported: critical torus 2-strata (" +
                          std::to_string(report.critical_tori) +
                          " present); the thickening construction covers annuli and Mobius "
                          "bands only");
  if (s.two_strata.empty())
    throw ValidationError("no 2-strata to thicken: a bare critical circle is the "
                          "1-dimensional case, not an input to the round-handle construction");

  RHDPlan plan;

  // 0-handles: one per 1-stratum, the stratum knot as core.
  std::vector<std::size_t> zero_handle(s.one_strata.size());
  for (std::size_t ci = 0; ci < s.one_strata.size(); ++ci) {
    RoundHandle h;
    h.index = 0;
    h.exit = RoundHandle::Exit::none;
    h.core_knot = canonicalize(s.one_strata[ci].knot);
    h.provenance = "one_stratum:" + std::to_string(ci);
    zero_handle[ci] = plan.handles.size();
    plan.handles.push_back(std::move(h));
  }

  // 1-handles: annuli thicken to orientable handles, Mobius bands to
  // nonorientable ones; each attaches to the 0-handles of its end circles.
  for (std::size_t si = 0; si < s.two_strata.size(); ++si) {
    RoundHandle h;
    h.index = 1;
    h.provenance = "two_stratum:" + std::to_string(si);
    if (const auto* a = std::get_if<StratifiedSet::Annulus>(&s.two_strata[si])) {
      h.exit = RoundHandle::Exit::orientable;
      h.core_knot = canonicalize(s.one_strata[a->end_a].knot);
      h.attachments.push_back(zero_handle[a->end_a]);
      if (a->end_b != a->end_a) h.attachments.push_back(zero_handle[a->end_b]);
    } else {
      const auto& m = std::get<StratifiedSet::Mobius>(s.two_strata[si]);
      h.exit = RoundHandle::Exit::nonorientable;
      h.core_knot = mobius_core_knot(s.one_strata[m.end].knot);
      h.attachments.push_back(zero_handle[m.end]);
    }
    plan.handles.push_back(std::move(h));
  }

  // 2-handles: the declared exterior solid tori. The data records no gluing
  // incidence for them, so the attachment list stays empty.
  for (std::size_t ei = 0; ei < s.exterior_tori.size(); ++ei) {
    RoundHandle h;
    h.index = 2;
    h.exit = RoundHandle::Exit::full;
    h.core_knot = canonicalize(s.exterior_tori[ei].core_knot);
    h.provenance = "exterior:" + std::to_string(ei);
    plan.handles.push_back(std::move(h));
  }

  return plan;
}

Link cores_link(const RHDPlan& p) {
  std::vector<IndexedComponent> comps;
  std::vector<std::vector<std::size_t>> parts(1);
  for (std::size_t i = 0; i < p.handles.size(); ++i) {
    comps.push_back(IndexedComponent{p.handles[i].core_knot, p.handles[i].index,
                                     p.handles[i].provenance});
    parts[0].push_back(i);
  }
  return Link(std::move(comps), std::move(parts));
}

StratifiedSet seifert_example(long long n) {
  if (n < 1)
    throw ValidationError("seifert_example requires n >= 1 (got " + std::to_string(n) + ")");
  StratifiedSet s;
  Knot torus_knot = cable(2, 2 * n + 1, Knot::make_unknot());
  s.one_strata.push_back(StratifiedSet::Circle{torus_knot});
  s.one_strata.push_back(StratifiedSet::Circle{torus_knot});
  s.two_strata.push_back(StratifiedSet::Mobius{0, 2 * n + 1});
  s.two_strata.push_back(StratifiedSet::Mobius{1, 2 * n + 1});
  s.exterior_tori.push_back(StratifiedSet::ExteriorTorus{Knot::make_unknot()});
  s.exterior_tori.push_back(StratifiedSet::ExteriorTorus{Knot::make_unknot()});
  return s;
}

namespace {

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

std::string to_string(const RHDPlan& p) {
  std::ostringstream os;
  os << "round-handle plan (" << p.handles.size() << " handles):\n";
  for (std::size_t i = 0; i < p.handles.size(); ++i) {
    const RoundHandle& h = p.handles[i];
    os << "  [" << i << "] index " << h.index << "  core " << to_string(h.core_knot) << "  exit "
       << exit_name(h.exit);
    if (!h.attachments.empty()) {
      os << "  attach (";
      for (std::size_t j = 0; j < h.attachments.size(); ++j) {
        if (j) os << ' ';
        os << h.attachments[j];
      }
      os << ')';
    }
    os << "  <- " << h.provenance << '\n';
  }
  return os.str();
}

std::string to_string(const StratificationReport& r) {
  std::ostringstream os;
  os << "stratification: " << r.prong_counts.size() << " circles, " << r.annuli << " annuli, "
     << r.mobius_bands << " Mobius bands, " << r.critical_tori << " critical tori\n";
  for (std::size_t i = 0; i < r.prong_counts.size(); ++i)
    os << "  one_strata[" << i << "]: " << r.prong_counts[i] << " prongs\n";
  for (const std::string& l : r.lints) os << "  lint: " << l << '\n';
  for (const std::string& e : r.errors) os << "  error: " << e << '\n';
  os << (r.ok() ? "valid" : "invalid") << '\n';
  return os.str();
}

}  // namespace zek
