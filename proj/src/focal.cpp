#include "focalis/focal.hpp"

namespace focalis {

namespace {

template <class F>
Matrix<F> vals(const Matrix<Jet<F>>& m) {
  return m.map([](const Jet<F>& j) { return j.val; });
}

QJet qjet(const RatJet& j) { return QJet(QExt(j.val), QExt(j.du), QExt(j.dv)); }

template <class F>
int rank_of_form(const Matrix<F>& q) {
  if (q.is_zero_matrix()) throw ZeroForm("focal form is zero");
  return rank(q);
}

using RPoly = UPoly<Rat>;
using JPoly = UPoly<RatJet>;
using QPoly = UPoly<QExt>;

RPoly val_part(const JPoly& p) {
  return p.map([](const RatJet& j) { return j.val; });
}
RPoly du_part(const JPoly& p) {
  return p.map([](const RatJet& j) { return j.du; });
}
RPoly dv_part(const JPoly& p) {
  return p.map([](const RatJet& j) { return j.dv; });
}

/// Lifted Veronese curve on a chart: rows of (a C_u + b C_v) with a, b the
/// chart polynomials in the chart variable.
std::vector<JPoly> lifted_curve(const LocalFrame& lf, const NormalClasses& nc, const JPoly& a, const JPoly& b) {
  std::vector<JPoly> r0(3), r1(3);
  for (int i = 0; i < 3; ++i) {
    r0[i] = a.scaled(nc.Cu(0, i)) + b.scaled(nc.Cv(0, i));
    r1[i] = a.scaled(nc.Cu(1, i)) + b.scaled(nc.Cv(1, i));
  }
  auto x = cross3(r0, r1);
  std::vector<JPoly> p(5);
  for (int c = 0; c < 5; ++c)
    for (int i = 0; i < 3; ++i) p[c] += x[i].scaled(lf.A(i, c));
  return p;
}

RPoly chart_gcd(const std::vector<JPoly>& p) {
  Matrix<RPoly> m(5, 4);
  for (int r = 0; r < 5; ++r) {
    RPoly v = val_part(p[r]);
    m(r, 0) = v;
    m(r, 1) = v.derivative();
    m(r, 2) = du_part(p[r]);
    m(r, 3) = dv_part(p[r]);
  }
  RPoly g;
  for (const auto& mi : minors_k(m, 4)) g = g.zero() ? monic(mi) : gcd(g, mi);
  return g;
}

QPoly line_chart_gcd(const Vec<QJet>& a, const Vec<QJet>& b) {
  // P = a + x b, tangent column b
  Matrix<QPoly> m(5, 4);
  for (int r = 0; r < 5; ++r) {
    m(r, 0) = QPoly(std::vector<QExt>{a[r].val, b[r].val});
    m(r, 1) = QPoly(b[r].val);
    m(r, 2) = QPoly(std::vector<QExt>{a[r].du, b[r].du});
    m(r, 3) = QPoly(std::vector<QExt>{a[r].dv, b[r].dv});
  }
  QPoly g;
  for (const auto& mi : minors_k(m, 4)) g = g.zero() ? monic(mi) : gcd(g, mi);
  return g;
}

Vec<QExt> vals_q(const Vec<QJet>& v) {
  Vec<QExt> r;
  for (const auto& j : v) r.push_back(j.val);
  return r;
}

/// Rescales l2 so that q == (l1 l2^T + l2 l1^T) / 2.
void match_scale(const Matrix<QExt>& q, const Vec<QExt>& l1, Vec<QExt>& l2) {
  auto sym = [&](int i, int j) { return (l1[i] * l2[j] + l1[j] * l2[i]) / QExt(2); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QExt s = sym(i, j);
      if (s.is_zero()) continue;
      QExt k = q(i, j) / s;
      for (auto& x : l2) x *= k;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (!(sym(a, b) == q(a, b))) throw InconsistentBranch("line pair does not reproduce the conic");
      return;
    }
  throw InconsistentBranch("degenerate line pair");
}

std::vector<Vec<QJet>> spanning_pair(const Vec<QJet>& ell) {
  int p = -1;
  for (int i = 0; i < 3; ++i)
    if (!ell[i].val.is_zero()) {
      p = i;
      break;
    }
  if (p < 0) throw InconsistentBranch("zero line");
  std::vector<Vec<QJet>> out;
  for (int f = 0; f < 3; ++f) {
    if (f == p) continue;
    Vec<QJet> y(3, QJet(0));
    y[f] = QJet(1);
    y[p] = -(ell[f] / ell[p]);
    out.push_back(y);
  }
  return out;
}

SecondOrderLocus locus_from_form(const BForm<QExt>& f, const std::string& x, const std::string& y) {
  SecondOrderLocus loc;
  if (f.is_zero()) {
    loc.kind = LocusKind::WholeComponent;
    loc.form = "0";
    return loc;
  }
  loc.kind = LocusKind::FinitePoints;
  loc.form_degree = f.degree();
  loc.form = f.str(x, y);
  auto rr = bform_roots(f);
  loc.squarefree_degree = rr.squarefree_degree;
  loc.points = rr.roots;
  return loc;
}

}  // namespace

Matrix<Rat> NormalClasses::cu() const { return vals(Cu); }
Matrix<Rat> NormalClasses::cv() const { return vals(Cv); }
Matrix<Rat> NormalClasses::bu() const { return vals(Bu); }
Matrix<Rat> NormalClasses::bv() const { return vals(Bv); }

Matrix<QExt> to_qext(const Matrix<Rat>& m) {
  return m.map([](const Rat& r) { return QExt(r); });
}
Vec<QExt> to_qext(const Vec<Rat>& v) {
  Vec<QExt> r;
  for (const auto& x : v) r.emplace_back(x);
  return r;
}
Vec<QJet> to_qjets(const Vec<RatJet>& v) {
  Vec<QJet> r;
  for (const auto& x : v) r.push_back(qjet(x));
  return r;
}

Matrix<Rat> focal_form(const LocalFrame& lf) {
  Matrix<Rat> h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Matrix<Rat> m(5, 5);
      for (int c = 0; c < 5; ++c) {
        for (int r = 0; r < 3; ++r) m(r, c) = lf.A(r, c).val;
        m(3, c) = lf.Au(i, c).val;
        m(4, c) = lf.Av(j, c).val;
      }
      h(i, j) = det(m);
    }
  Matrix<Rat> q(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q(i, j) = (h(i, j) + h(j, i)) / Rat(2);
  return q;
}

Matrix<Poly> focal_form_symbolic(const PlaneFrame& f) {
  if (!f.is_polynomial()) throw Error("ModeError", "symbolic focal form needs a polynomial frame");
  auto num = [](const RFunc& r) { return r.num(); };
  auto a = f.A().map(num), au = f.Au().map(num), av = f.Av().map(num);
  Matrix<Poly> h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Matrix<Poly> m(5, 5);
      for (int c = 0; c < 5; ++c) {
        for (int r = 0; r < 3; ++r) m(r, c) = a(r, c);
        m(3, c) = au(i, c);
        m(4, c) = av(j, c);
      }
      h(i, j) = det(m);
    }
  Matrix<Poly> q(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q(i, j) = (h(i, j) + h(j, i)).scaled(Rat(1, 2));
  return q;
}

Rat focal_determinant(const LocalFrame& lf, const Vec<Rat>& x) {
  Matrix<Rat> m(5, 5);
  for (int c = 0; c < 5; ++c) {
    for (int r = 0; r < 3; ++r) m(r, c) = lf.A(r, c).val;
    Rat su(0), sv(0);
    for (int i = 0; i < 3; ++i) {
      su += x[i] * lf.Au(i, c).val;
      sv += x[i] * lf.Av(i, c).val;
    }
    m(3, c) = su;
    m(4, c) = sv;
  }
  return det(m);
}

int conic_rank(const Matrix<Rat>& q) { return rank_of_form(q); }
int conic_rank(const Matrix<QExt>& q) { return rank_of_form(q); }

NormalClasses normal_classes(const LocalFrame& lf) {
  NormalClasses nc;
  nc.basis = complement_basis(lf.values());
  Matrix<RatJet> m(5, 5);
  for (int r = 0; r < 5; ++r) {
    for (int k = 0; k < 3; ++k) m(r, k) = lf.A(k, r);
    m(r, 3) = RatJet(r == nc.basis.first ? 1 : 0);
    m(r, 4) = RatJet(r == nc.basis.second ? 1 : 0);
  }
  nc.Cu = Matrix<RatJet>(2, 3);
  nc.Cv = Matrix<RatJet>(2, 3);
  nc.Bu = Matrix<RatJet>(3, 3);
  nc.Bv = Matrix<RatJet>(3, 3);
  for (int k = 0; k < 3; ++k) {
    auto cu = solve(m, lf.Au.row(k));
    auto cv = solve(m, lf.Av.row(k));
    for (int r = 0; r < 3; ++r) {
      nc.Bu(r, k) = cu[r];
      nc.Bv(r, k) = cv[r];
    }
    for (int r = 0; r < 2; ++r) {
      nc.Cu(r, k) = cu[3 + r];
      nc.Cv(r, k) = cv[3 + r];
    }
  }
  return nc;
}

Matrix<RatJet> normalized_conic(const NormalClasses& nc) {
  Matrix<RatJet> q(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RatJet a = nc.Cu(0, i) * nc.Cv(1, j) - nc.Cu(1, i) * nc.Cv(0, j);
      RatJet b = nc.Cu(0, j) * nc.Cv(1, i) - nc.Cu(1, j) * nc.Cv(0, i);
      q(i, j) = (a + b) * RatJet(Rat(1, 2));
    }
  return q;
}

std::string to_string(DevTag t) {
  switch (t) {
    case DevTag::NoneDev: return "NoneDev";
    case DevTag::One: return "One";
    case DevTag::TwoDistinct: return "TwoDistinct";
    case DevTag::OneDouble: return "OneDouble";
    case DevTag::Infinite: return "Infinite";
  }
  return "?";
}

DevDirections developable_form(const NormalClasses& nc) {
  Matrix<Rat> cu = nc.cu(), cv = nc.cv();
  // rows of t C_u + C_v on the chart mu = 1
  std::vector<std::vector<RPoly>> m(2, std::vector<RPoly>(3));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = RPoly(std::vector<Rat>{cv(r, c), cu(r, c)});
  std::vector<BForm<Rat>> minors;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    RPoly d = m[0][a] * m[1][b] - m[0][b] * m[1][a];
    minors.push_back(d.zero() ? BForm<Rat>() : BForm<Rat>(2, d));
  }
  DevDirections out;
  out.form = bform_gcd(minors);
  if (out.form.is_zero()) {
    out.tag = DevTag::Infinite;
    return out;
  }
  int deg = out.form.degree();
  if (deg == 0) {
    out.tag = DevTag::NoneDev;
    return out;
  }
  auto rr = bform_roots(out.form);
  for (const auto& r : rr.roots) out.dirs.push_back({r.x, r.y});
  if (deg == 1) out.tag = DevTag::One;
  else out.tag = rr.squarefree_degree == 2 ? DevTag::TwoDistinct : DevTag::OneDouble;
  return out;
}

Vec<QExt> veronese_point(const NormalClasses& nc, const QExt& lam, const QExt& mu) {
  auto cu = to_qext(nc.cu()), cv = to_qext(nc.cv());
  Vec<QExt> r0(3), r1(3);
  for (int c = 0; c < 3; ++c) {
    r0[c] = lam * cu(0, c) + mu * cv(0, c);
    r1[c] = lam * cu(1, c) + mu * cv(1, c);
  }
  auto x = cross3(r0, r1);
  if (is_zero_vec(x)) throw RankDrop("direction is developable: its focal locus is a line");
  return x;
}

Vec<QExt> singular_focal_point(const NormalClasses& nc, const QExt& lam, const QExt& mu) {
  return veronese_point(nc, lam, mu);
}

BForm<Rat> second_order_form_nondeg(const LocalFrame& lf, const NormalClasses& nc) {
  auto q = normalized_conic(nc);
  if (conic_rank(vals(q)) != 3) throw NotNondegenerate("focal conic is not a nondegenerate conic");
  JPoly t = JPoly::x(), one(RatJet(1));
  RPoly gt = chart_gcd(lifted_curve(lf, nc, t, one));
  if (gt.zero()) return BForm<Rat>();
  RPoly gs = chart_gcd(lifted_curve(lf, nc, one, t));
  int inf = gs.zero() ? 0 : gs.valuation();
  return BForm<Rat>(gt.degree() + inf, gt);
}

ConicSplit split_conic(const Matrix<Rat>& q0) {
  int r = conic_rank(q0);
  ConicSplit out;
  Matrix<QExt> q = to_qext(q0);
  if (r == 3) return out;
  if (r == 1) {
    out.kind = SplitKind::DoubleLine;
    for (int i = 0; i < 3; ++i)
      if (!is_zero_vec(q.row(i))) {
        out.l1 = q.row(i);
        break;
      }
    return out;
  }
  out.kind = SplitKind::TwoLines;
  int i = -1;
  for (int k = 0; k < 3; ++k)
    if (!q0(k, k).is_zero()) {
      i = k;
      break;
    }
  if (i < 0) {
    // q = 2(q01 x0 x1 + q02 x0 x2 + q12 x1 x2) with one coefficient zero
    auto e = [](int k) {
      Vec<QExt> v(3, QExt(0));
      v[k] = QExt(1);
      return v;
    };
    if (q0(1, 2).is_zero()) {
      out.l1 = e(0);
      out.l2 = {QExt(0), q(0, 1), q(0, 2)};
    } else if (q0(0, 2).is_zero()) {
      out.l1 = e(1);
      out.l2 = {q(0, 1), QExt(0), q(1, 2)};
    } else {
      out.l1 = e(2);
      out.l2 = {q(0, 2), q(1, 2), QExt(0)};
    }
    return out;
  }
  int j = (i + 1) % 3, k = (i + 2) % 3;
  if (j > k) std::swap(j, k);
  // q_ii * q = (q_ii x_i + b)^2 - D(x_j, x_k)
  Rat a = q0(i, i);
  Rat dj = q0(i, j) * q0(i, j) - a * q0(j, j);
  Rat djk = q0(i, j) * q0(i, k) - a * q0(j, k);
  Rat dk = q0(i, k) * q0(i, k) - a * q0(k, k);
  // D = dj x_j^2 + 2 djk x_j x_k + dk x_k^2 has rank one
  Rat kappa;
  Vec<Rat> m(3, Rat(0));
  if (!dj.is_zero()) {
    kappa = dj;
    m[j] = Rat(1);
    m[k] = djk / dj;
  } else {
    kappa = dk;
    m[k] = Rat(1);
  }
  QExt root = QExt::sqrt(kappa);
  Vec<QExt> base = q.row(i);
  out.l1 = base;
  out.l2 = base;
  for (int c : {j, k}) {
    out.l1[c] -= root * QExt(m[c]);
    out.l2[c] += root * QExt(m[c]);
  }
  return out;
}

Vec<QJet> lift_point(const LocalFrame& lf, const Vec<QJet>& y) {
  Vec<QJet> p(5, QJet(0));
  for (int c = 0; c < 5; ++c)
    for (int i = 0; i < 3; ++i) p[c] += y[i] * qjet(lf.A(i, c));
  return p;
}

std::vector<LineFamily> line_family_lift(const LocalFrame& lf, const NormalClasses& nc, const ConicSplit& split) {
  Matrix<RatJet> qj = normalized_conic(nc);
  Matrix<QExt> qv = to_qext(vals(qj));
  std::vector<Vec<QJet>> ells;
  if (split.kind == SplitKind::Nondegenerate) throw NotNondegenerate("conic does not split");
  if (split.kind == SplitKind::DoubleLine) {
    int p = -1;
    for (int i = 0; i < 3; ++i)
      if (!is_zero_vec(qv.row(i))) {
        p = i;
        break;
      }
    if (p < 0) throw ZeroForm("focal conic vanishes");
    Vec<QJet> ell;
    for (int c = 0; c < 3; ++c) ell.push_back(qjet(qj(p, c)));
    ells.push_back(ell);
  } else {
    Vec<QExt> l1 = split.l1, l2 = split.l2;
    match_scale(qv, l1, l2);
    // (l1 b^T + b l1^T + a l2^T + l2 a^T)/2 = dQ for unknowns (a, b)
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) idx.push_back({i, j});
    Matrix<QExt> sys(6, 6);
    for (int e = 0; e < 6; ++e) {
      auto [i, j] = idx[e];
      QExt half(Rat(1, 2));
      sys(e, i) += half * l2[j];
      sys(e, j) += half * l2[i];
      sys(e, 3 + j) += half * l1[i];
      sys(e, 3 + i) += half * l1[j];
    }
    Vec<QExt> bu(6), bv(6);
    for (int e = 0; e < 6; ++e) {
      bu[e] = QExt(qj(idx[e].first, idx[e].second).du);
      bv[e] = QExt(qj(idx[e].first, idx[e].second).dv);
    }
    auto su = solve_consistent(sys, bu), sv = solve_consistent(sys, bv);
    if (!su || !sv) throw InconsistentBranch("line pair cannot follow the conic to first order");
    Vec<QJet> e1, e2;
    for (int c = 0; c < 3; ++c) {
      e1.push_back(QJet(l1[c], (*su)[c], (*sv)[c]));
      e2.push_back(QJet(l2[c], (*su)[3 + c], (*sv)[3 + c]));
    }
    ells.push_back(e1);
    ells.push_back(e2);
  }
  std::vector<LineFamily> out;
  for (auto& ell : ells) {
    LineFamily lfam;
    lfam.ell = ell;
    auto ys = spanning_pair(ell);
    lfam.y0 = ys[0];
    lfam.y1 = ys[1];
    lfam.L0 = lift_point(lf, lfam.y0);
    lfam.L1 = lift_point(lf, lfam.y1);
    out.push_back(std::move(lfam));
  }
  return out;
}

SecondOrderLocus conic_locus(const BForm<Rat>& f) {
  if (f.is_zero()) return locus_from_form(BForm<QExt>(), "lam", "mu");
  return locus_from_form(BForm<QExt>(f.degree(), f.affine().map([](const Rat& r) { return QExt(r); })), "lam",
                         "mu");
}

SecondOrderLocus second_order_on_line(const LineFamily& line, BForm<QExt>* form_out) {
  QPoly gs = line_chart_gcd(line.L0, line.L1);
  BForm<QExt> f;
  if (!gs.zero()) {
    QPoly gt = line_chart_gcd(line.L1, line.L0);
    int inf = gt.zero() ? 0 : gt.valuation();
    f = BForm<QExt>(gs.degree() + inf, gs);
  }
  if (form_out) *form_out = f;
  return locus_from_form(f, "s", "t");
}

bool fundamental_point_test(const NormalClasses& nc, const Vec<QExt>& x) {
  auto cu = to_qext(nc.cu()), cv = to_qext(nc.cv());
  return is_zero_vec(cu.apply(x)) && is_zero_vec(cv.apply(x));
}

bool second_order_criterion(const NormalClasses& nc, const LineFamily& line, const Vec<QExt>& y) {
  auto cu = to_qext(nc.cu()), cv = to_qext(nc.cv());
  Vec<QExt> nu = cu.apply(y), nv = cv.apply(y);
  if (is_zero_vec(nu) && is_zero_vec(nv)) return true;
  Matrix<QExt> m(2, 2);
  for (int r = 0; r < 2; ++r) {
    m(r, 0) = nu[r];
    m(r, 1) = nv[r];
  }
  auto ker = kernel_basis(m);
  if (ker.empty()) return false;
  const QExt& a = ker[0][0];
  const QExt& b = ker[0][1];
  Matrix<QExt> bw = to_qext(nc.bu()).scaled(a) + to_qext(nc.bv()).scaled(b);
  Vec<QExt> ell = vals_q(line.ell), dell(3);
  for (int c = 0; c < 3; ++c) dell[c] = a * line.ell[c].du + b * line.ell[c].dv;
  QExt psi = dot(ell, bw.apply(y)) - dot(dell, y);
  return psi.is_zero();
}

}  // namespace focalis
