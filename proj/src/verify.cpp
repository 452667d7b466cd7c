#include "focalis/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace focalis {

namespace {

template <class T>
std::string majority(const std::vector<T>& xs) {
  std::map<T, int> c;
  for (const auto& x : xs) ++c[x];
  T best{};
  int n = -1;
  for (const auto& [k, v] : c)
    if (v > n) best = k, n = v;
  std::ostringstream os;
  os << best;
  return os.str();
}

Json checks_json(const std::vector<Check>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

Check expect(std::string name, bool ok, std::string detail = "") { return {std::move(name), ok, std::move(detail)}; }

std::string opt_str(const std::optional<SegreCase>& s) { return s ? to_string(*s) : "none"; }

const BranchProbes* branch(const AnalysisReport& r, RealKind k) {
  for (const auto& b : r.probes.branches)
    if (b.verdict.kind == k) return &b;
  return nullptr;
}

bool whole_everywhere(const AnalysisReport& r) {
  if (r.kept_samples() == 0) return false;
  for (const auto& s : r.samples) {
    if (!s.kept) continue;
    for (const auto& c : s.components)
      if (c.locus.kind != LocusKind::WholeComponent) return false;
  }
  return true;
}

SuiteResult segre_suite(std::uint64_t seed, int samples) {
  SuiteResult out;
  out.suite = "segre";
  Json reports = Json::object();
  for (const auto& it : gallery_items()) {
    auto r = classify(it.frame, it.options(samples, seed));
    r.input = "gallery:" + it.name;
    reports[it.name] = to_json(r);
    out.checks.push_back(expect(it.name + ": segre case", r.segre == it.expected_segre,
                                "got " + opt_str(r.segre) + ", expected " + opt_str(it.expected_segre)));
    if (!it.expected_segre) continue;
    out.checks.push_back(expect(it.name + ": every component second-order focal", whole_everywhere(r)));
    switch (*it.expected_segre) {
      case SegreCase::Case2aTwoCones: {
        bool ok = r.probes.branches.size() == 2;
        for (const auto& b : r.probes.branches)
          ok = ok && b.verdict.kind == RealKind::Cone && b.verdict.vertex == Vec<QExt>{QExt(0), QExt(0), QExt(0), QExt(0), QExt(1)};
        out.checks.push_back(expect(it.name + ": both branches cones with vertex O = e4", ok));
        break;
      }
      case SegreCase::Case2bPlaneDirectrix:
        out.checks.push_back(expect(it.name + ": IsPlane + NondevelopableRuled + directrix",
                                    branch(r, RealKind::IsPlane) && branch(r, RealKind::NondevelopableRuled) &&
                                        r.probes.plane_directrix == true));
        break;
      case SegreCase::Case3NondevRuled: {
        auto* b = branch(r, RealKind::NondevelopableRuled);
        out.checks.push_back(expect(it.name + ": tangency_check", b && b->tangency == true));
        break;
      }
      default: break;
    }
  }
  out.evidence = {{"suite", "segre"}, {"seed", seed}, {"samples", samples}, {"checks", checks_json(out.checks)},
                  {"reports", reports}};
  return out;
}

SuiteResult taxonomy_suite(std::uint64_t seed, int samples) {
  SuiteResult out;
  out.suite = "taxonomy";
  auto items = gallery_items();
  out.checks.push_back(expect("gallery has at least 10 items", items.size() >= 10, std::to_string(items.size())));
  Json reports = Json::object();
  for (const auto& it : items) {
    auto r = classify(it.frame, it.options(samples, seed));
    r.input = "gallery:" + it.name;
    reports[it.name] = {{"class", r.cls ? to_string(*r.cls) : "none"}, {"subclass", to_string(r.sub)},
                        {"segre", opt_str(r.segre)}, {"kept", r.kept_samples()}};
    std::string got = (r.cls ? to_string(*r.cls) : "none") + "{" + to_string(r.sub) + "}";
    std::string want = to_string(it.expected_class) + "{" + to_string(it.expected_sub) + "}";
    out.checks.push_back(expect(it.name + ": class", r.cls == it.expected_class && r.sub == it.expected_sub,
                                "got " + got + ", expected " + want));
    bool tags_ok = true;
    for (const auto& s : r.samples)
      if (s.kept) tags_ok = tags_ok && tag_of(s.conic_rank, s.dev_tag) == r.cls;
    out.checks.push_back(expect(it.name + ": kept samples match the class table", tags_ok));
  }
  for (auto [name, f] : {std::pair{"pencil_sweep", degenerate_pencil_sweep()},
                         std::pair{"constant_plane", degenerate_constant_plane()}}) {
    std::string kind = "none";
    try {
      ClassifyOptions o;
      o.samples = samples;
      o.seed = seed;
      classify(f, o);
    } catch (const Error& e) {
      kind = e.kind();
    }
    out.checks.push_back(expect(std::string(name) + ": rejected", kind == "DegenerateCongruence", kind));
  }
  out.evidence = {{"suite", "taxonomy"}, {"seed", seed}, {"samples", samples}, {"checks", checks_json(out.checks)},
                  {"reports", reports}};
  return out;
}

SuiteResult invariants_suite(std::uint64_t seed, int samples) {
  SuiteResult out;
  out.suite = "invariants";
  Json prints = Json::object();
  for (const auto& it : gallery_items()) {
    auto base = fingerprint(classify(it.frame, it.options(samples, seed)));
    Json p = {{"original", base.str()}};
    std::vector<std::pair<std::string, PlaneFrame>> variants = {
        {"PGL(5)", transform_ambient(it.frame, fixed_pgl5())},
        {"GL(3) rows", mix_rows(it.frame, fixed_gl3())},
        {"affine (u, v)", reparametrize(it.frame, fixed_affine())}};
    for (const auto& [label, g] : variants) {
      auto fp = fingerprint(classify(g, it.options(samples, seed)));
      p[label] = fp.str();
      out.checks.push_back(expect(it.name + ": invariant under " + label, fp == base,
                                  fp == base ? "" : base.str() + " vs " + fp.str()));
    }
    prints[it.name] = p;
    out.checks.push_back(focal_identity_check(it.name + ": focal-conic identity", it.frame, samples, seed));
    if (it.expected_class != ClassTag::Nondegenerate) {
      auto st = oracle_equivalence(it, 20, seed);
      out.checks.push_back(expect(it.name + ": second-order oracle agreement", st.total > 0 && st.agree == st.total,
                                  std::to_string(st.agree) + "/" + std::to_string(st.total)));
    }
  }
  out.evidence = {{"suite", "invariants"}, {"seed", seed}, {"samples", samples}, {"checks", checks_json(out.checks)},
                  {"fingerprints", prints}};
  return out;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int samples) {
  if (name == "segre") return segre_suite(seed, samples);
  if (name == "taxonomy") return taxonomy_suite(seed, samples);
  if (name == "invariants") return invariants_suite(seed, samples);
  throw UsageError("unknown suite '" + name + "' (expected segre, taxonomy or invariants)");
}

std::string suite_table(const SuiteResult& r) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
    passed += c.passed;
  }
  os << r.suite << ": " << passed << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

std::string Fingerprint::str() const {
  std::string s = cls + "{" + sub + "} segre=" + segre + " rank=" + std::to_string(conic_rank) + " dev=" + dev_tag +
                  " components=";
  for (size_t i = 0; i < component_kinds.size(); ++i) s += (i ? "," : "") + component_kinds[i];
  return s;
}

Fingerprint fingerprint(const AnalysisReport& r) {
  Fingerprint f;
  f.cls = r.cls ? to_string(*r.cls) : "none";
  f.sub = to_string(r.sub);
  f.segre = r.segre ? to_string(*r.segre) : "none";
  std::vector<int> ranks;
  std::vector<std::string> tags;
  std::map<std::string, std::vector<std::string>> kinds;
  for (const auto& s : r.samples) {
    if (!s.kept) continue;
    ranks.push_back(s.conic_rank);
    tags.push_back(to_string(s.dev_tag));
    for (const auto& c : s.components)
      kinds[c.name].push_back(c.locus.kind == LocusKind::WholeComponent ? "whole" : "finite");
  }
  f.conic_rank = ranks.empty() ? -1 : std::stoi(majority(ranks));
  f.dev_tag = tags.empty() ? "none" : majority(tags);
  for (const auto& [name, ks] : kinds) f.component_kinds.push_back(majority(ks));
  std::sort(f.component_kinds.begin(), f.component_kinds.end());
  return f;
}

Matrix<Rat> fixed_pgl5() {
  return Matrix<Rat>::from_rows({{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)},
                                 {Rat(0), Rat(1), Rat(2), Rat(0), Rat(0)},
                                 {Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)},
                                 {Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)},
                                 {Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}});
}

Matrix<Rat> fixed_gl3() {
  return Matrix<Rat>::from_rows({{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(2)}});
}

std::array<Rat, 6> fixed_affine() { return {Rat(2), Rat(1), Rat(1), Rat(-1), Rat(1), Rat(-2)}; }

Check focal_identity_check(const std::string& name, const PlaneFrame& f, int samples, std::uint64_t seed,
                           int per_sample) {
  std::mt19937_64 rng(seed ^ 0xf0ca1ULL);
  int tested = 0, failed = 0;
  for (const auto& p : sample_points(f, samples, seed)) {
    LocalFrame lf = localize(f, p.u, p.v);
    Matrix<Rat> q = focal_form(lf);
    for (int k = 0; k < per_sample; ++k) {
      Vec<Rat> x(3);
      for (auto& c : x) c = Rat(static_cast<long>(rng() % 21) - 10);
      Rat lhs(0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lhs += x[i] * q(i, j) * x[j];
      ++tested;
      if (lhs != focal_determinant(lf, x)) ++failed;
    }
  }
  return {name, tested > 0 && failed == 0, std::to_string(tested - failed) + "/" + std::to_string(tested)};
}

OracleStats oracle_equivalence(const GalleryItem& it, int per_line, std::uint64_t seed, int samples) {
  OracleStats st;
  std::mt19937_64 rng(seed ^ 0x0acc1eULL);
  auto draw = [&] { return QExt(static_cast<long>(rng() % 13) - 6); };
  for (const auto& p : focal_samples(it.frame, samples, seed)) {
    LocalFrame lf = localize(it.frame, p.u, p.v);
    Matrix<Rat> q = focal_form(lf);
    if (conic_rank(q) == 3) continue;
    NormalClasses nc = normal_classes(lf);
    std::vector<LineFamily> lines;
    try {
      lines = line_family_lift(lf, nc, split_conic(q));
    } catch (const InconsistentBranch&) {
      continue;
    }
    for (const auto& line : lines) {
      BForm<QExt> form;
      auto locus = second_order_on_line(line, &form);
      std::vector<std::pair<QExt, QExt>> params;  // point alpha y0 + beta y1
      for (int k = 0; k < per_line; ++k) {
        QExt a = draw(), b = draw();
        if (a.is_zero() && b.is_zero()) a = QExt(1);
        params.emplace_back(a, b);
      }
      for (const auto& r : locus.points)
        if (r.exact) params.emplace_back(r.y, r.x);
      for (const auto& [a, b] : params) {
        Vec<QExt> y(3);
        for (int c = 0; c < 3; ++c) y[c] = a * line.y0[c].val + b * line.y1[c].val;
        bool member = locus.kind == LocusKind::WholeComponent || form.eval(b, a).is_zero();
        bool crit = second_order_criterion(nc, line, y);
        ++st.total;
        st.members += member;
        st.agree += (member == crit);
      }
    }
  }
  return st;
}

}  // namespace focalis
