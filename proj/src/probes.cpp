#include "focalis/probes.hpp"

namespace focalis {

namespace {

Vec<QExt> val_of(const Vec<QJet>& v) {
  Vec<QExt> r;
  for (const auto& j : v) r.push_back(j.val);
  return r;
}

Vec<QExt> along(const Vec<QJet>& v, int a, int b) {
  Vec<QExt> r;
  for (const auto& j : v) r.push_back(QExt(a) * j.du + QExt(b) * j.dv);
  return r;
}

int stack_rank(const std::vector<Vec<QExt>>& rows) {
  if (rows.empty()) return 0;
  return rank(Matrix<QExt>::from_rows(rows));
}

Vec<QExt> frame_row(const LocalFrame& lf, int i) {
  Vec<QExt> r;
  for (int c = 0; c < 5; ++c) r.emplace_back(lf.A(i, c).val);
  return r;
}

/// Basis of the common points of the given lines (as 2-dim subspaces).
std::vector<Vec<QExt>> common_points(const std::vector<BranchSample>& samples) {
  std::vector<Vec<QExt>> ann;
  for (const auto& s : samples) {
    Matrix<QExt> m = Matrix<QExt>::from_rows({val_of(s.line.L0), val_of(s.line.L1)});
    for (auto& k : kernel_basis(m)) ann.push_back(k);
  }
  return kernel_basis(Matrix<QExt>::from_rows(ann));
}

}  // namespace

std::string to_string(RealKind k) {
  switch (k) {
    case RealKind::IsLine: return "IsLine";
    case RealKind::IsPlane: return "IsPlane";
    case RealKind::Cone: return "Cone";
    case RealKind::TangentDevelopable: return "TangentDevelopable";
    case RealKind::NondevelopableRuled: return "NondevelopableRuled";
    case RealKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(SigmaKind k) {
  switch (k) {
    case SigmaKind::Point: return "Point";
    case SigmaKind::Curve: return "Curve";
    case SigmaKind::None: return "None";
  }
  return "?";
}

Vec<QJet> plucker(const Vec<QJet>& l0, const Vec<QJet>& l1) {
  Vec<QJet> p;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) p.push_back(l0[i] * l1[j] - l0[j] * l1[i]);
  return p;
}

bool plucker_relations_hold(const Vec<QExt>& p) {
  auto idx = [](int i, int j) {
    int k = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b, ++k)
        if (a == i && b == j) return k;
    return -1;
  };
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k)
        for (int l = k + 1; l < 5; ++l) {
          QExt r = p[idx(i, j)] * p[idx(k, l)] - p[idx(i, k)] * p[idx(j, l)] + p[idx(i, l)] * p[idx(j, k)];
          if (!r.is_zero()) return false;
        }
  return true;
}

int grassmann_rank_at(const LineFamily& line) {
  auto p = plucker(line.L0, line.L1);
  return stack_rank({val_of(p), along(p, 1, 0), along(p, 0, 1)}) - 1;
}

GrassmannRank grassmann_map_rank(const std::vector<BranchSample>& samples) {
  GrassmannRank g;
  for (const auto& s : samples) {
    int r = grassmann_rank_at(s.line);
    g.per_sample.push_back(r);
    g.generic = std::max(g.generic, r);
  }
  return g;
}

std::pair<int, int> transverse_direction(const LineFamily& line) {
  auto p = plucker(line.L0, line.L1);
  if (stack_rank({val_of(p), along(p, 1, 0)}) == 1) return {0, 1};
  return {1, 0};
}

bool developable_at(const LineFamily& line) {
  auto [a, b] = transverse_direction(line);
  return stack_rank({val_of(line.L0), val_of(line.L1), along(line.L0, a, b), along(line.L1, a, b)}) <= 3;
}

RealizationVerdict realization_verdict(const std::vector<BranchSample>& samples, const GrassmannRank& gr) {
  RealizationVerdict v;
  v.samples = static_cast<int>(samples.size());
  v.family_dim = gr.generic;
  if (samples.empty()) {
    v.note = "no samples";
    return v;
  }
  try {
    if (gr.generic == 0) {
      auto p0 = val_of(plucker(samples[0].line.L0, samples[0].line.L1));
      for (const auto& s : samples) {
        if (!proportional(p0, val_of(plucker(s.line.L0, s.line.L1)))) {
          v.note = "lines differ although the Grassmann map is locally constant";
          return v;
        }
      }
      v.kind = RealKind::IsLine;
      v.swept_dim = 1;
      v.span = {normalize_first(val_of(samples[0].line.L0)), normalize_first(val_of(samples[0].line.L1))};
      return v;
    }
    if (gr.generic == 2) {
      std::vector<Vec<QExt>> rows;
      for (const auto& s : samples) {
        rows.push_back(val_of(s.line.L0));
        rows.push_back(val_of(s.line.L1));
      }
      Matrix<QExt> m = Matrix<QExt>::from_rows(rows);
      Matrix<QExt> e = m;
      auto piv = rref(e);
      v.swept_dim = static_cast<int>(piv.size()) - 1;
      if (piv.size() == 3) {
        v.kind = RealKind::IsPlane;
        for (int i = 0; i < 3; ++i) v.span.push_back(e.row(i));
      } else {
        v.note = "lines span a space of dimension " + std::to_string(piv.size() - 1);
      }
      return v;
    }
    v.swept_dim = 2;
    auto common = common_points(samples);
    if (!common.empty()) {
      v.kind = RealKind::Cone;
      v.vertex = normalize_first(common[0]);
      // exact incidence at every sample
      for (const auto& s : samples) {
        if (stack_rank({val_of(s.line.L0), val_of(s.line.L1), v.vertex}) != 2) {
          throw AmbiguousVerdict("cone vertex not incident to a sampled line");
        }
      }
      v.developable_samples = v.samples;
      return v;
    }
    for (const auto& s : samples)
      if (developable_at(s.line)) ++v.developable_samples;
    v.kind = (5 * v.developable_samples >= 4 * v.samples) ? RealKind::TangentDevelopable
                                                          : RealKind::NondevelopableRuled;
    if (v.kind == RealKind::NondevelopableRuled && v.developable_samples > 0) {
      v.note = std::to_string(v.developable_samples) + " samples looked developable";
    }
  } catch (const ExtensionConflict& e) {
    v.kind = RealKind::Unknown;
    v.note = std::string("lines over different quadratic fields: ") + e.what();
  }
  return v;
}

bool plane_directrix_probe(const std::vector<BranchSample>& ruled, const std::vector<Vec<QExt>>& plane) {
  if (plane.size() != 3 || ruled.empty()) return false;
  Matrix<QExt> pm = Matrix<QExt>::from_rows(plane);
  auto eta = kernel_basis(pm);  // two forms vanishing on the plane
  int curve_rank = 0;
  try {
    for (const auto& s : ruled) {
      auto l0 = val_of(s.line.L0), l1 = val_of(s.line.L1);
      if (stack_rank({l0, l1, plane[0], plane[1], plane[2]}) > 4) return false;
      // meeting point X = a L0 + b L1 with eta(X) = 0, as a jet
      QJet a(0), b(0);
      bool found = false;
      for (const auto& e : eta) {
        QJet e0(0), e1(0);
        for (int c = 0; c < 5; ++c) {
          e0 += QJet(e[c]) * s.line.L0[c];
          e1 += QJet(e[c]) * s.line.L1[c];
        }
        if (!e0.val.is_zero() || !e1.val.is_zero()) {
          a = e1;
          b = -e0;
          found = true;
          break;
        }
      }
      if (!found) return false;  // the whole line lies in the plane
      Vec<QJet> x(5);
      for (int c = 0; c < 5; ++c) x[c] = a * s.line.L0[c] + b * s.line.L1[c];
      curve_rank = std::max(curve_rank, stack_rank({val_of(x), along(x, 1, 0), along(x, 0, 1)}) - 1);
    }
  } catch (const ExtensionConflict&) {
    return false;
  }
  return curve_rank == 1;
}

Vec<QExt> normal_part(const LocalFrame& lf, const NormalClasses& nc, const Vec<QExt>& w) {
  Matrix<QExt> m(5, 5);
  for (int r = 0; r < 5; ++r) {
    for (int k = 0; k < 3; ++k) m(r, k) = QExt(lf.A(k, r).val);
    m(r, 3) = QExt(r == nc.basis.first ? 1 : 0);
    m(r, 4) = QExt(r == nc.basis.second ? 1 : 0);
  }
  auto c = solve(m, w);
  return {c[3], c[4]};
}

bool tangency_check(const std::vector<BranchSample>& samples) {
  if (samples.empty()) return false;
  try {
    for (const auto& s : samples) {
      std::vector<Vec<QExt>> cols;
      for (const auto* l : {&s.line.L0, &s.line.L1})
        for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}}) cols.push_back(normal_part(s.lf, s.nc, along(*l, a, b)));
      if (stack_rank(cols) > 1) return false;
    }
  } catch (const ExtensionConflict&) {
    return false;
  }
  return true;
}

SigmaPrime sigma_prime_probe(const std::vector<std::pair<LocalFrame, NormalClasses>>& samples) {
  SigmaPrime sp;
  sp.rank = 0;
  Vec<QExt> first;
  bool same_point = true;
  static const std::pair<int, int> candidates[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, 3}};
  for (const auto& [lf, nc] : samples) {
    bool done = false;
    for (auto [lam, mu] : candidates) {
      Vec<RatJet> r0(3), r1(3);
      for (int c = 0; c < 3; ++c) {
        r0[c] = RatJet(lam) * nc.Cu(0, c) + RatJet(mu) * nc.Cv(0, c);
        r1[c] = RatJet(lam) * nc.Cu(1, c) + RatJet(mu) * nc.Cv(1, c);
      }
      auto x = cross3(r0, r1);
      bool nonzero = false;
      for (const auto& j : x) nonzero = nonzero || !j.val.is_zero();
      if (!nonzero) continue;
      auto lifted = lift_point(lf, to_qjets(x));
      int r = stack_rank({val_of(lifted), along(lifted, 1, 0), along(lifted, 0, 1)}) - 1;
      sp.rank = std::max(sp.rank, r);
      auto pt = normalize_first(val_of(lifted));
      if (first.empty()) first = pt;
      else if (!proportional(first, pt)) same_point = false;
      done = true;
      break;
    }
    if (!done) {
      sp.rank = 2;
      sp.kind = SigmaKind::None;
      return sp;
    }
  }
  if (sp.rank == 0 && same_point) {
    sp.kind = SigmaKind::Point;
    sp.point = first;
  } else if (sp.rank <= 1) {
    sp.kind = SigmaKind::Curve;
    sp.rank = 1;
  } else {
    sp.kind = SigmaKind::None;
  }
  return sp;
}

bool pencil_linearity_probe(const PlaneFrame& f, const std::vector<BranchSample>& samples) {
  if (samples.empty()) return false;
  try {
    for (const auto& s : samples) {
      auto p = plucker(s.line.L0, s.line.L1);
      auto pv = val_of(p);
      int a = 0, b = 0;
      if (stack_rank({pv, along(p, 1, 0)}) == 1) a = 1;
      else if (stack_rank({pv, along(p, 0, 1)}) == 1) b = 1;
      else return false;  // fibres are not coordinate lines
      auto l0 = val_of(s.line.L0), l1 = val_of(s.line.L1);
      std::vector<Vec<QExt>> rows;
      for (int i = 0; i < 3; ++i) rows.push_back(frame_row(s.lf, i));
      int used = 0;
      for (int k = 1; k <= 6 && used < 3; ++k) {
        Rat u = s.lf.u + Rat(k * a), v = s.lf.v + Rat(k * b);
        if (!admissible(f, u, v)) continue;
        LocalFrame other = localize(f, u, v);
        std::vector<Vec<QExt>> plane;
        for (int i = 0; i < 3; ++i) plane.push_back(frame_row(other, i));
        auto with_line = plane;
        with_line.push_back(l0);
        with_line.push_back(l1);
        if (stack_rank(with_line) != 3) return false;  // generator not fixed along the fibre
        rows.insert(rows.end(), plane.begin(), plane.end());
        ++used;
      }
      if (used == 0) return false;
      if (stack_rank(rows) > 4) return false;
      auto [ta, tb] = transverse_direction(s.line);
      rows.push_back(along(s.line.L0, ta, tb));
      rows.push_back(along(s.line.L1, ta, tb));
      if (stack_rank(rows) > 4) return false;
    }
  } catch (const ExtensionConflict&) {
    return false;
  }
  return true;
}

bool hyperplane_confinement_probe(const std::vector<BranchSample>& r_samples, const std::vector<Direction>& dirs,
                                  const std::vector<Vec<QExt>>& plane) {
  if (r_samples.empty() || r_samples.size() != dirs.size() || plane.size() != 3) return false;
  try {
    for (size_t k = 0; k < r_samples.size(); ++k) {
      const auto& s = r_samples[k];
      std::vector<Vec<QExt>> rows = plane;
      rows.push_back(val_of(s.line.L0));
      rows.push_back(val_of(s.line.L1));
      for (int i = 0; i < 3; ++i) {
        rows.push_back(frame_row(s.lf, i));
        Vec<QExt> d;
        for (int c = 0; c < 5; ++c) d.push_back(dirs[k].lam * QExt(s.lf.A(i, c).du) + dirs[k].mu * QExt(s.lf.A(i, c).dv));
        rows.push_back(d);
      }
      if (stack_rank(rows) > 4) return false;
    }
  } catch (const ExtensionConflict&) {
    return false;
  }
  return true;
}

}  // namespace focalis
