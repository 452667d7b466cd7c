#include "focalis/report.hpp"

#include <iomanip>
#include <sstream>

namespace focalis {

namespace {

Json vec_json(const Vec<QExt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::string kind_str(LocusKind k) { return k == LocusKind::WholeComponent ? "WholeComponent" : "FinitePoints"; }

}  // namespace

Json to_json(const SecondOrderLocus& l) {
  Json j;
  j["kind"] = kind_str(l.kind);
  j["form"] = l.form;
  j["form_degree"] = l.form_degree;
  j["squarefree_degree"] = l.squarefree_degree;
  j["total_multiplicity"] = l.total_multiplicity();
  Json pts = Json::array();
  for (const auto& p : l.points) {
    Json q;
    q["exact"] = p.exact;
    q["point"] = p.str();
    q["multiplicity"] = p.multiplicity;
    pts.push_back(std::move(q));
  }
  j["points"] = std::move(pts);
  return j;
}

Json to_json(const RealizationVerdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["family_dim"] = v.family_dim;
  j["swept_dim"] = v.swept_dim;
  j["vertex"] = v.vertex.empty() ? Json(nullptr) : vec_json(v.vertex);
  Json span = Json::array();
  for (const auto& s : v.span) span.push_back(vec_json(s));
  j["span"] = std::move(span);
  j["developable_samples"] = v.developable_samples;
  j["samples"] = v.samples;
  j["note"] = v.note;
  return j;
}

Json to_json(const ProbeReport& p) {
  Json j;
  Json br = Json::array();
  for (const auto& b : p.branches) {
    Json x;
    x["component"] = b.component;
    x["grassmann_rank"] = b.grassmann.generic;
    x["grassmann_rank_per_sample"] = b.grassmann.per_sample;
    x["realization"] = to_json(b.verdict);
    x["tangency"] = opt_bool(b.tangency);
    x["pencil_linear"] = opt_bool(b.pencil_linear);
    br.push_back(std::move(x));
  }
  j["branches"] = std::move(br);
  if (p.sigma_prime) {
    Json s;
    s["kind"] = to_string(p.sigma_prime->kind);
    s["rank"] = p.sigma_prime->rank;
    s["point"] = p.sigma_prime->point.empty() ? Json(nullptr) : vec_json(p.sigma_prime->point);
    j["sigma_prime"] = std::move(s);
  } else {
    j["sigma_prime"] = nullptr;
  }
  j["plane_directrix"] = opt_bool(p.plane_directrix);
  j["hyperplane_confinement"] = opt_bool(p.hyperplane_confinement);
  j["heuristic"] = Json::array({"pencil_linear", "hyperplane_confinement"});
  return j;
}

Json subclass_rules() {
  Json j;
  j["G1"] = "rank-one family realized as a nondevelopable ruled surface and tangency_check true";
  j["G2"] = "rank-one family realized as a tangent developable";
  j["G3"] = "rank-one family realized as a cone";
  j["B2"] = "singular-point locus is a curve and a branch is a tangent developable";
  j["B3"] = "both branches are cones with a common vertex";
  j["A3"] = "the developable-direction line r sweeps a nondevelopable ruled surface and tangency_check false";
  j["A1/A2"] = "only from the construction label of a gallery item";
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["input"] = r.input;
  j["mode"] = to_string(r.mode);
  j["seed"] = r.seed;
  j["frame"] = r.frame_text;
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json x;
    x["point"] = Json::array({s.point.u.str(), s.point.v.str()});
    x["conic_rank"] = s.conic_rank;
    x["dev_form_degree"] = s.dev_form_degree;
    x["dev_tag"] = to_string(s.dev_tag);
    x["kept"] = s.kept;
    if (!s.kept) x["discard_reason"] = s.discard_reason;
    Json so = Json::object();
    for (const auto& c : s.components) {
      Json cj = to_json(c.locus);
      if (c.grassmann_rank >= 0) cj["grassmann_rank"] = c.grassmann_rank;
      so[c.name] = std::move(cj);
    }
    x["second_order"] = std::move(so);
    samples.push_back(std::move(x));
  }
  j["samples"] = std::move(samples);
  j["class"] = r.cls ? Json(to_string(*r.cls)) : Json(nullptr);
  j["subclass"] = r.cls ? Json(to_string(r.sub)) : Json(nullptr);
  j["segre"] = r.segre ? Json(to_string(*r.segre)) : Json(nullptr);
  j["probes"] = to_json(r.probes);
  j["subclass_rules"] = subclass_rules();
  if (r.symbolic) {
    Json s;
    Json q = Json::array();
    for (int i = 0; i < 3; ++i) {
      Json row = Json::array();
      for (int k = 0; k < 3; ++k) row.push_back(r.symbolic->focal_form(i, k).str());
      q.push_back(std::move(row));
    }
    s["focal_form"] = std::move(q);
    s["generic_conic_rank"] = r.symbolic->generic_conic_rank;
    j["symbolic"] = std::move(s);
  } else {
    j["symbolic"] = nullptr;
  }
  j["warnings"] = r.warnings;
  if (r.error) {
    j["error"] = {{"kind", r.error->kind}, {"message", r.error->message}};
  } else {
    j["error"] = nullptr;
  }
  return j;
}

Json error_report(const std::string& input, Mode mode, std::uint64_t seed, const std::string& kind,
                  const std::string& message) {
  Json j;
  j["input"] = input;
  j["mode"] = to_string(mode);
  j["seed"] = seed;
  j["frame"] = nullptr;
  j["samples"] = Json::array();
  j["class"] = nullptr;
  j["subclass"] = nullptr;
  j["segre"] = nullptr;
  j["probes"] = nullptr;
  j["subclass_rules"] = subclass_rules();
  j["symbolic"] = nullptr;
  j["warnings"] = Json::array();
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input:    " << r.input << "\n";
  os << "mode:     " << to_string(r.mode) << "   seed: " << r.seed << "   samples: " << r.samples.size()
     << " (kept " << r.kept_samples() << ")\n";
  os << "class:    " << (r.cls ? to_string(*r.cls) : "-") << "\n";
  os << "subclass: " << (r.cls ? to_string(r.sub) : "-") << "\n";
  os << "segre:    " << (r.segre ? to_string(*r.segre) : "-") << "\n";
  if (r.symbolic) os << "symbolic: generic conic rank " << r.symbolic->generic_conic_rank << "\n";
  if (r.error) os << "error:    " << r.error->kind << ": " << r.error->message << "\n";
  os << "\n" << std::left << std::setw(14) << "point" << std::setw(6) << "rank" << std::setw(13) << "dev"
     << std::setw(5) << "deg" << "second order\n";
  for (const auto& s : r.samples) {
    std::string pt = "(" + s.point.u.str() + ", " + s.point.v.str() + ")";
    os << std::setw(14) << pt << std::setw(6) << s.conic_rank << std::setw(13) << to_string(s.dev_tag)
       << std::setw(5) << s.dev_form_degree;
    if (!s.kept) os << "discarded: " << s.discard_reason;
    bool first = true;
    for (const auto& c : s.components) {
      if (!first) os << "; ";
      first = false;
      os << c.name << " ";
      if (c.locus.kind == LocusKind::WholeComponent) os << "whole";
      else os << c.locus.squarefree_degree << " pts, mult " << c.locus.total_multiplicity();
    }
    os << "\n";
  }
  if (!r.probes.branches.empty() || r.probes.sigma_prime) {
    os << "\nprobes:\n";
    for (const auto& b : r.probes.branches) {
      os << "  " << b.component << ": grassmann rank " << b.grassmann.generic << ", " << to_string(b.verdict.kind);
      if (!b.verdict.vertex.empty()) {
        os << " vertex (";
        for (size_t i = 0; i < b.verdict.vertex.size(); ++i) os << (i ? ":" : "") << b.verdict.vertex[i].str();
        os << ")";
      }
      if (b.tangency) os << ", tangency " << (*b.tangency ? "yes" : "no");
      if (b.pencil_linear) os << ", pencil linear " << (*b.pencil_linear ? "yes" : "no");
      os << "\n";
    }
    if (r.probes.sigma_prime) os << "  singular points: " << to_string(r.probes.sigma_prime->kind) << "\n";
    if (r.probes.plane_directrix) os << "  plane directrix: " << (*r.probes.plane_directrix ? "yes" : "no") << "\n";
    if (r.probes.hyperplane_confinement)
      os << "  hyperplane confinement (heuristic): " << (*r.probes.hyperplane_confinement ? "yes" : "no") << "\n";
  }
  if (!r.warnings.empty()) {
    os << "\nwarnings:\n";
    for (const auto& w : r.warnings) os << "  " << w << "\n";
  }
  return os.str();
}

}  // namespace focalis
