#include "focalis/classify.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace focalis {

namespace {

bool meets_threshold(int count, int total) { return total > 0 && 5 * count >= 4 * total; }

std::string point_str(const SamplePoint& p) { return "(" + p.u.str() + ", " + p.v.str() + ")"; }

Vec<QExt> line_val(const LineFamily& l) {
  Vec<QExt> r;
  for (const auto& j : l.ell) r.push_back(j.val);
  return r;
}

using Signature = std::tuple<int, int, int>;

Signature signature(const ComponentRecord& c, const LineFamily& l) {
  int dev = c.grassmann_rank == 1 ? (developable_at(l) ? 1 : 0) : -1;
  return {c.locus.kind == LocusKind::WholeComponent ? 1 : 0, c.grassmann_rank, dev};
}

struct Work {
  LocalFrame lf;
  NormalClasses nc;
  DevDirections dev;
  Matrix<Rat> q;
  std::vector<LineFamily> lines;
};

/// Orders the two lines of an alpha sample as (r, r'), r being the focal
/// line of the developable direction.
void order_alpha(Work& w) {
  if (w.dev.dirs.empty()) throw InconsistentBranch("developable direction not found");
  const auto& d = w.dev.dirs[0];
  auto cu = to_qext(w.nc.cu()), cv = to_qext(w.nc.cv());
  Vec<QExt> row;
  for (int r = 0; r < 2 && row.empty(); ++r) {
    Vec<QExt> cand(3);
    for (int c = 0; c < 3; ++c) cand[c] = d.lam * cu(r, c) + d.mu * cv(r, c);
    if (!is_zero_vec(cand)) row = cand;
  }
  if (row.empty()) throw InconsistentBranch("developable direction has no focal line");
  if (w.lines.size() != 2) throw InconsistentBranch("alpha sample without two focal lines");
  if (proportional(row, line_val(w.lines[0]))) return;
  if (proportional(row, line_val(w.lines[1]))) {
    std::swap(w.lines[0], w.lines[1]);
    return;
  }
  throw InconsistentBranch("focal line of the developable direction is not a component");
}

std::vector<std::string> component_names(ClassTag c) {
  switch (c) {
    case ClassTag::Nondegenerate: return {"conic"};
    case ClassTag::Alpha: return {"r", "r'"};
    case ClassTag::Beta: return {"r1", "r2"};
    default: return {"r"};
  }
}

bool all_whole(const std::vector<SampleRecord>& s) {
  bool any = false;
  for (const auto& r : s) {
    if (!r.kept) continue;
    any = true;
    for (const auto& c : r.components)
      if (c.locus.kind != LocusKind::WholeComponent) return false;
  }
  return any;
}

}  // namespace

std::string to_string(ClassTag c) {
  switch (c) {
    case ClassTag::Nondegenerate: return "NondegenerateConic";
    case ClassTag::Alpha: return "Alpha";
    case ClassTag::Beta: return "Beta";
    case ClassTag::Gamma: return "Gamma";
    case ClassTag::Delta: return "Delta";
  }
  return "?";
}

std::string to_string(SubClass s) {
  switch (s) {
    case SubClass::None: return "None";
    case SubClass::FivePoints: return "FivePoints";
    case SubClass::WholeConic: return "WholeConic";
    case SubClass::A1: return "A1";
    case SubClass::A2: return "A2";
    case SubClass::A3: return "A3";
    case SubClass::B2: return "B2";
    case SubClass::B3: return "B3";
    case SubClass::G1: return "G1";
    case SubClass::G2: return "G2";
    case SubClass::G3: return "G3";
    case SubClass::UnknownSub: return "UnknownSub";
  }
  return "?";
}

std::string to_string(SegreCase s) {
  switch (s) {
    case SegreCase::Case1Veronese: return "Case1Veronese";
    case SegreCase::Case2aTwoCones: return "Case2aTwoCones";
    case SegreCase::Case2bPlaneDirectrix: return "Case2bPlaneDirectrix";
    case SegreCase::Case3Line: return "Case3Line";
    case SegreCase::Case3NondevRuled: return "Case3NondevRuled";
    case SegreCase::Case3TangentDev: return "Case3TangentDev";
    case SegreCase::Case3Cone: return "Case3Cone";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::Sampled ? "sampled" : "symbolic"; }

ClassTag parse_class(const std::string& s) {
  for (auto c : {ClassTag::Nondegenerate, ClassTag::Alpha, ClassTag::Beta, ClassTag::Gamma, ClassTag::Delta})
    if (to_string(c) == s) return c;
  throw UsageError("unknown class " + s);
}

SubClass parse_subclass(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(SubClass::UnknownSub); ++i)
    if (to_string(static_cast<SubClass>(i)) == s) return static_cast<SubClass>(i);
  throw UsageError("unknown subclass " + s);
}

SegreCase parse_segre(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(SegreCase::Case3Cone); ++i)
    if (to_string(static_cast<SegreCase>(i)) == s) return static_cast<SegreCase>(i);
  throw UsageError("unknown Segre case " + s);
}

std::optional<ClassTag> tag_of(int conic_rank, DevTag dev) {
  if (dev == DevTag::Infinite) return ClassTag::Delta;
  if (conic_rank == 3 && dev == DevTag::NoneDev) return ClassTag::Nondegenerate;
  if (conic_rank == 2 && dev == DevTag::One) return ClassTag::Alpha;
  if (conic_rank == 2 && dev == DevTag::TwoDistinct) return ClassTag::Beta;
  if (conic_rank == 1 && (dev == DevTag::OneDouble || dev == DevTag::One)) return ClassTag::Gamma;
  return std::nullopt;
}

int AnalysisReport::kept_samples() const {
  return static_cast<int>(std::count_if(samples.begin(), samples.end(), [](const SampleRecord& s) { return s.kept; }));
}

std::vector<SamplePoint> focal_samples(const PlaneFrame& f, int n, std::uint64_t seed) {
  return sample_points(f, n, seed, [](const LocalFrame& lf) { return !focal_form(lf).is_zero_matrix(); });
}

AnalysisReport classify(const PlaneFrame& f, const ClassifyOptions& opt) {
  if (opt.samples < 3) throw UsageError("at least 3 samples are required");
  AnalysisReport rep;
  rep.mode = opt.mode;
  rep.seed = opt.seed;
  rep.frame_text = print_congruence(f);

  if (opt.mode == Mode::Symbolic) {
    if (!f.is_polynomial()) throw UsageError("symbolic mode needs a polynomial frame");
    if (f.total_degree() > kSymbolicMaxDegree)
      throw UsageError("symbolic mode supports frames of total degree <= " + std::to_string(kSymbolicMaxDegree) +
                       " (this frame has degree " + std::to_string(f.total_degree()) + ")");
  }
  validate_frame(f);
  if (opt.mode == Mode::Symbolic) {
    SymbolicInfo si;
    si.focal_form = focal_form_symbolic(f);
    si.generic_conic_rank = rank_fraction_free(si.focal_form);
    rep.symbolic = std::move(si);
  }

  auto pts = focal_samples(f, opt.samples, opt.seed);
  const int n = static_cast<int>(pts.size());
  std::vector<Work> work;
  std::vector<std::optional<ClassTag>> tags;
  for (const auto& p : pts) {
    Work w;
    w.lf = localize(f, p.u, p.v);
    w.q = focal_form(w.lf);
    w.nc = normal_classes(w.lf);
    w.dev = developable_form(w.nc);
    SampleRecord rec;
    rec.point = p;
    rec.conic_rank = conic_rank(w.q);
    rec.dev_tag = w.dev.tag;
    rec.dev_form_degree = w.dev.form_degree();
    if (rep.symbolic) {
      bool same = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) same = same && eval_poly(rep.symbolic->focal_form(i, j), p.u, p.v) == w.q(i, j);
      if (!same) rep.warnings.push_back("symbolic focal form disagrees with the sampled one at " + point_str(p));
    }
    tags.push_back(tag_of(rec.conic_rank, rec.dev_tag));
    rep.samples.push_back(std::move(rec));
    work.push_back(std::move(w));
  }

  // majority tag over all samples
  std::map<ClassTag, int> counts;
  for (const auto& t : tags)
    if (t) ++counts[*t];
  std::optional<ClassTag> best;
  int best_count = 0;
  for (auto [t, c] : counts)
    if (c > best_count) best = t, best_count = c;
  if (!best || !meets_threshold(best_count, n)) {
    for (int i = 0; i < n; ++i) rep.samples[i].kept = false, rep.samples[i].discard_reason = "no majority class";
    rep.error = ErrorInfo{"AmbiguousVerdict", "no class holds at 80% of the samples (best: " +
                                                  (best ? to_string(*best) : std::string("none")) + " at " +
                                                  std::to_string(best_count) + "/" + std::to_string(n) + ")"};
    return rep;
  }
  const ClassTag cls = *best;
  for (int i = 0; i < n; ++i) {
    if (tags[i] != cls) {
      rep.samples[i].kept = false;
      rep.samples[i].discard_reason = "conic rank " + std::to_string(rep.samples[i].conic_rank) + " with " +
                                      to_string(rep.samples[i].dev_tag) + " developable directions";
      rep.warnings.push_back("sample " + point_str(pts[i]) + " discarded: " + rep.samples[i].discard_reason);
    }
  }

  // per-sample components
  auto names = component_names(cls);
  std::optional<std::vector<Signature>> reference;
  for (int i = 0; i < n; ++i) {
    auto& rec = rep.samples[i];
    if (!rec.kept) continue;
    auto& w = work[i];
    try {
      if (cls == ClassTag::Nondegenerate) {
        ComponentRecord c;
        c.name = names[0];
        c.locus = conic_locus(second_order_form_nondeg(w.lf, w.nc));
        rec.components.push_back(std::move(c));
        continue;
      }
      w.lines = line_family_lift(w.lf, w.nc, split_conic(w.q));
      if (cls == ClassTag::Alpha) order_alpha(w);
      if (w.lines.size() != names.size()) throw InconsistentBranch("unexpected number of focal lines");
      std::vector<ComponentRecord> comps;
      for (size_t k = 0; k < w.lines.size(); ++k) {
        ComponentRecord c;
        c.locus = second_order_on_line(w.lines[k]);
        c.grassmann_rank = grassmann_rank_at(w.lines[k]);
        comps.push_back(std::move(c));
      }
      if (cls == ClassTag::Beta) {
        std::vector<Signature> sig{signature(comps[0], w.lines[0]), signature(comps[1], w.lines[1])};
        if (!reference) {
          reference = sig;
        } else {
          int keep = (sig[0] == (*reference)[0]) + (sig[1] == (*reference)[1]);
          int swap = (sig[1] == (*reference)[0]) + (sig[0] == (*reference)[1]);
          if (swap > keep) {
            std::swap(comps[0], comps[1]);
            std::swap(w.lines[0], w.lines[1]);
          }
        }
      }
      for (size_t k = 0; k < comps.size(); ++k) comps[k].name = names[k];
      rec.components = std::move(comps);
    } catch (const Error& e) {
      if (e.kind() != "InconsistentBranch" && e.kind() != "RankDrop" && e.kind() != "ExtensionConflict") throw;
      rec.kept = false;
      rec.discard_reason = e.kind() + ": " + e.what();
      rec.components.clear();
      rep.warnings.push_back("sample " + point_str(pts[i]) + " discarded: " + rec.discard_reason);
    }
  }
  const int kept = rep.kept_samples();
  if (!meets_threshold(kept, n)) {
    rep.error = ErrorInfo{"AmbiguousVerdict", "only " + std::to_string(kept) + "/" + std::to_string(n) +
                                                  " samples survived branch tracking"};
    return rep;
  }
  rep.cls = cls;

  // surface probes
  std::vector<std::vector<BranchSample>> branch(names.size());
  std::vector<std::pair<LocalFrame, NormalClasses>> local;
  std::vector<Direction> dev_dirs;
  for (int i = 0; i < n; ++i) {
    if (!rep.samples[i].kept) continue;
    local.emplace_back(work[i].lf, work[i].nc);
    if (!work[i].dev.dirs.empty()) dev_dirs.push_back(work[i].dev.dirs[0]);
    for (size_t k = 0; k < work[i].lines.size(); ++k)
      branch[k].push_back({work[i].lf, work[i].nc, work[i].lines[k]});
  }
  if (cls != ClassTag::Nondegenerate) {
    for (size_t k = 0; k < names.size(); ++k) {
      BranchProbes bp;
      bp.component = names[k];
      bp.grassmann = grassmann_map_rank(branch[k]);
      bp.verdict = realization_verdict(branch[k], bp.grassmann);
      if (bp.verdict.kind == RealKind::NondevelopableRuled || bp.verdict.kind == RealKind::TangentDevelopable ||
          bp.verdict.kind == RealKind::Cone)
        bp.tangency = tangency_check(branch[k]);
      if (cls == ClassTag::Gamma && bp.grassmann.generic == 1) bp.pencil_linear = pencil_linearity_probe(f, branch[k]);
      if (!bp.verdict.note.empty()) rep.warnings.push_back(names[k] + " realization: " + bp.verdict.note);
      rep.probes.branches.push_back(std::move(bp));
    }
  }
  if (cls == ClassTag::Beta || cls == ClassTag::Gamma) rep.probes.sigma_prime = sigma_prime_probe(local);
  const auto& pb = rep.probes.branches;
  if (pb.size() == 2) {
    for (int k = 0; k < 2; ++k) {
      if (pb[k].verdict.kind == RealKind::IsPlane && pb[1 - k].verdict.kind == RealKind::NondevelopableRuled)
        rep.probes.plane_directrix = plane_directrix_probe(branch[1 - k], pb[k].verdict.span);
    }
    if (cls == ClassTag::Alpha && pb[1].verdict.kind == RealKind::IsPlane && dev_dirs.size() == branch[0].size())
      rep.probes.hyperplane_confinement = hyperplane_confinement_probe(branch[0], dev_dirs, pb[1].verdict.span);
  }

  // subclass
  auto kind = [&](size_t k) { return pb[k].verdict.kind; };
  switch (cls) {
    case ClassTag::Nondegenerate: {
      int whole = 0;
      for (const auto& r : rep.samples)
        if (r.kept && r.components[0].locus.kind == LocusKind::WholeComponent) ++whole;
      rep.sub = meets_threshold(whole, kept) ? SubClass::WholeConic : SubClass::FivePoints;
      break;
    }
    case ClassTag::Alpha:
      if (kind(0) == RealKind::NondevelopableRuled && pb[0].tangency == false) {
        rep.sub = SubClass::A3;
        if (opt.construction_sub && *opt.construction_sub != SubClass::A3)
          rep.warnings.push_back("construction label " + to_string(*opt.construction_sub) +
                                 " overridden by the probes (A3)");
      } else if (opt.construction_sub) {
        rep.sub = *opt.construction_sub;
      } else {
        rep.sub = SubClass::UnknownSub;
      }
      break;
    case ClassTag::Beta: {
      bool cones = kind(0) == RealKind::Cone && kind(1) == RealKind::Cone &&
                   proportional(pb[0].verdict.vertex, pb[1].verdict.vertex);
      bool tdev = kind(0) == RealKind::TangentDevelopable || kind(1) == RealKind::TangentDevelopable;
      if (cones) rep.sub = SubClass::B3;
      else if (tdev && rep.probes.sigma_prime && rep.probes.sigma_prime->kind == SigmaKind::Curve) rep.sub = SubClass::B2;
      else rep.sub = SubClass::UnknownSub;
      break;
    }
    case ClassTag::Gamma: {
      bool single = std::any_of(rep.samples.begin(), rep.samples.end(),
                                [](const SampleRecord& r) { return r.kept && r.dev_tag == DevTag::One; });
      if (single) {
        rep.warnings.push_back("rank-one conic with a single simple developable direction");
        rep.sub = SubClass::UnknownSub;
      } else if (kind(0) == RealKind::Cone) {
        rep.sub = SubClass::G3;
      } else if (kind(0) == RealKind::TangentDevelopable) {
        rep.sub = SubClass::G2;
      } else if (kind(0) == RealKind::NondevelopableRuled && pb[0].tangency == true) {
        rep.sub = SubClass::G1;
      } else {
        rep.sub = SubClass::UnknownSub;
      }
      break;
    }
    case ClassTag::Delta: rep.sub = SubClass::None; break;
  }

  // Segre case
  if (all_whole(rep.samples)) {
    std::optional<SegreCase> sc;
    if (cls == ClassTag::Nondegenerate) {
      sc = SegreCase::Case1Veronese;
    } else if (pb.size() == 2) {
      if (kind(0) == RealKind::Cone && kind(1) == RealKind::Cone &&
          proportional(pb[0].verdict.vertex, pb[1].verdict.vertex))
        sc = SegreCase::Case2aTwoCones;
      else if (rep.probes.plane_directrix == true)
        sc = SegreCase::Case2bPlaneDirectrix;
    } else if (pb.size() == 1) {
      switch (kind(0)) {
        case RealKind::IsLine: sc = SegreCase::Case3Line; break;
        case RealKind::NondevelopableRuled: sc = SegreCase::Case3NondevRuled; break;
        case RealKind::TangentDevelopable: sc = SegreCase::Case3TangentDev; break;
        case RealKind::Cone: sc = SegreCase::Case3Cone; break;
        default: break;
      }
    }
    if (sc) rep.segre = sc;
    else rep.warnings.push_back("SegreMismatch: every focal component is second-order focal but no case matches");
  }
  if (rep.symbolic) {
    for (const auto& r : rep.samples)
      if (r.kept && r.conic_rank != rep.symbolic->generic_conic_rank) {
        rep.warnings.push_back("generic conic rank " + std::to_string(rep.symbolic->generic_conic_rank) +
                               " differs from the sampled rank " + std::to_string(r.conic_rank));
        break;
      }
  }
  return rep;
}

}  // namespace focalis
