#include <doctest.h>

#include <random>

#include "focalis/gallery.hpp"

using namespace focalis;

namespace {

Matrix<Rat> ints(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rat>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return Matrix<Rat>::from_rows(r);
}

QExt quad(const Matrix<QExt>& q, const Vec<QExt>& x) {
  QExt s(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += x[i] * q(i, j) * x[j];
  return s;
}

Vec<QExt> vals(const Vec<QJet>& v) {
  Vec<QExt> r;
  for (const auto& j : v) r.push_back(j.val);
  return r;
}

struct Local {
  LocalFrame lf;
  Matrix<Rat> q;
  NormalClasses nc;
};

std::vector<Local> locals(const PlaneFrame& f, int n, std::uint64_t seed = 0) {
  std::vector<Local> out;
  for (const auto& p : focal_samples(f, n, seed)) {
    Local l{localize(f, p.u, p.v), {}, {}};
    l.q = focal_form(l.lf);
    l.nc = normal_classes(l.lf);
    out.push_back(std::move(l));
  }
  return out;
}

/// Sum of squares of coordinates after scaling the first nonzero to 1.
Rat dist2(Vec<Rat> a, Vec<Rat> b) {
  a = normalize_first(a);
  b = normalize_first(b);
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

Vec<Rat> rational(const Vec<QExt>& v) {
  Vec<Rat> r;
  for (const auto& x : v) r.push_back(x.rational());
  return r;
}

}  // namespace

TEST_CASE("delta focal form is x2^2") {
  auto f = gallery_delta().frame;
  for (const auto& l : locals(f, 5)) CHECK(l.q == ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  auto qs = focal_form_symbolic(f);
  CHECK(qs(2, 2) == Poly(Rat(1)));
  CHECK(qs(0, 0).zero());
  CHECK(conic_rank(ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})) == 1);
}

TEST_CASE("conic rank examples") {
  CHECK(conic_rank(Matrix<Rat>::identity(3)) == 3);
  CHECK(conic_rank(ints({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}})) == 1);
  CHECK_THROWS_AS(conic_rank(Matrix<Rat>(3, 3)), ZeroForm);
  auto v = gallery_veronese_projection().frame;
  CHECK(conic_rank(focal_form(localize(v, Rat(1), Rat(2)))) == 3);
}

TEST_CASE("polarization identity") {
  std::mt19937_64 rng(4);
  for (const auto& it : gallery_items()) {
    for (const auto& l : locals(it.frame, 8)) {
      for (int k = 0; k < 10; ++k) {
        Vec<Rat> x(3);
        for (auto& c : x) c = Rat(static_cast<long>(rng() % 15) - 7);
        Rat lhs(0);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) lhs += x[i] * l.q(i, j) * x[j];
        CHECK(lhs == focal_determinant(l.lf, x));
      }
    }
  }
}

TEST_CASE("symbolic focal form agrees with samples") {
  for (const auto& it : gallery_items()) {
    auto qs = focal_form_symbolic(it.frame);
    for (const auto& l : locals(it.frame, 4)) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(eval_poly(qs(i, j), l.lf.u, l.lf.v) == l.q(i, j));
    }
  }
}

TEST_CASE("normal classes of the delta frame") {
  auto lf = localize(gallery_delta().frame, Rat(3), Rat(5));
  auto nc = normal_classes(lf);
  CHECK(nc.basis == std::pair{3, 4});
  CHECK(nc.cu() == ints({{0, 0, 1}, {0, 0, 0}}));
  CHECK(nc.cv() == ints({{0, 0, 0}, {0, 0, 1}}));
  auto c = normal_classes(localize(degenerate_constant_plane(), Rat(1), Rat(1)));
  CHECK(c.cu().is_zero_matrix());
  CHECK(c.cv().is_zero_matrix());
}

TEST_CASE("normalized conic is proportional to Q") {
  for (const auto& it : gallery_items()) {
    for (const auto& l : locals(it.frame, 5)) {
      auto qt = normalized_conic(l.nc);
      Matrix<Rat> v(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v(i, j) = qt(i, j).val;
      Vec<Rat> a, b;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.push_back(v(i, j)), b.push_back(l.q(i, j));
      CHECK(proportional(a, b));
      CHECK_FALSE(is_zero_vec(a));
    }
  }
}

TEST_CASE("developable directions") {
  auto tag = [](const GalleryItem& it) { return developable_form(locals(it.frame, 1)[0].nc).tag; };
  CHECK(tag(gallery_veronese_projection()) == DevTag::NoneDev);
  CHECK(tag(gallery_delta()) == DevTag::Infinite);
  CHECK(tag(gallery_two_cones()) == DevTag::TwoDistinct);
  CHECK(tag(gallery_plane_directrix()) == DevTag::One);
  CHECK(tag(gallery_gamma1_tangent_planes()) == DevTag::OneDouble);
  auto ls = locals(gallery_two_cones().frame, 6);
  for (const auto& l : ls) {
    auto d = developable_form(l.nc);
    REQUIRE(d.dirs.size() == 2);
    for (const auto& dir : d.dirs) CHECK_THROWS_AS(veronese_point(l.nc, dir.lam, dir.mu), RankDrop);
  }
}

TEST_CASE("veronese point") {
  NormalClasses nc;
  nc.Cu = Matrix<RatJet>::from_rows({{RatJet(1), RatJet(0), RatJet(0)}, {RatJet(0), RatJet(1), RatJet(0)}});
  nc.Cv = Matrix<RatJet>(2, 3);
  auto x = veronese_point(nc, QExt(1), QExt(0));
  CHECK(proportional(x, Vec<QExt>{QExt(0), QExt(0), QExt(1)}));

  std::mt19937_64 rng(8);
  for (const auto& it : {gallery_generic5(), gallery_veronese_projection()}) {
    for (const auto& l : locals(it.frame, 5)) {
      auto q = to_qext(l.q);
      auto x0 = veronese_point(l.nc, QExt(1), QExt(0));
      Vec<QExt> k(3);
      auto cu = to_qext(l.nc.cu());
      for (int r = 0; r < 2; ++r) {
        QExt s(0);
        for (int c = 0; c < 3; ++c) s += cu(r, c) * x0[c];
        CHECK(s.is_zero());
      }
      for (int t = 0; t < 10; ++t) {
        QExt lam(static_cast<long>(rng() % 11) - 5), mu(static_cast<long>(rng() % 11) - 5);
        if (lam.is_zero() && mu.is_zero()) continue;
        CHECK(quad(q, veronese_point(l.nc, lam, mu)).is_zero());
      }
    }
  }
}

TEST_CASE("second-order form on the nondegenerate conic") {
  for (const auto& l : locals(gallery_veronese_projection().frame, 25)) {
    CHECK(second_order_form_nondeg(l.lf, l.nc).is_zero());
  }
  int five = 0, n = 0;
  for (const auto& l : locals(gallery_generic5().frame, 25)) {
    auto form = second_order_form_nondeg(l.lf, l.nc);
    auto loc = conic_locus(form);
    CHECK(loc.kind == LocusKind::FinitePoints);
    CHECK(form.degree() <= 5);
    ++n;
    five += loc.squarefree_degree == 5;
    auto rr = bform_roots(form);
    BForm<QExt> fq(form.degree(), form.affine().map([](const Rat& c) { return QExt(c); }));
    for (const auto& r : rr.roots)
      if (r.exact) CHECK(fq.eval(r.x, r.y).is_zero());
  }
  CHECK(5 * five >= 4 * n);
  for (const auto& l : locals(gallery_delta().frame, 1))
    CHECK_THROWS_AS(second_order_form_nondeg(l.lf, l.nc), NotNondegenerate);
}

TEST_CASE("split conic") {
  auto s1 = split_conic(ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK(s1.kind == SplitKind::TwoLines);
  Vec<QExt> e0{QExt(1), QExt(0), QExt(0)}, e1{QExt(0), QExt(1), QExt(0)};
  CHECK(((proportional(s1.l1, e0) && proportional(s1.l2, e1)) || (proportional(s1.l1, e1) && proportional(s1.l2, e0))));
  auto s2 = split_conic(ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  CHECK(s2.kind == SplitKind::DoubleLine);
  CHECK(proportional(s2.l1, Vec<QExt>{QExt(0), QExt(0), QExt(1)}));
  auto s3 = split_conic(ints({{1, 0, 0}, {0, -2, 0}, {0, 0, 0}}));
  CHECK(s3.kind == SplitKind::TwoLines);
  QExt r2 = QExt::sqrt(Rat(2));
  Vec<QExt> p{QExt(1), r2, QExt(0)}, m{QExt(1), -r2, QExt(0)};
  CHECK(((proportional(s3.l1, p) && proportional(s3.l2, m)) || (proportional(s3.l1, m) && proportional(s3.l2, p))));
  CHECK(split_conic(Matrix<Rat>::identity(3)).kind == SplitKind::Nondegenerate);

  // oracle: sym(l1 l2^T) is proportional to Q on random rank-2 forms
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    Vec<Rat> a(3), b(3);
    for (auto& x : a) x = Rat(static_cast<long>(rng() % 7) - 3);
    for (auto& x : b) x = Rat(static_cast<long>(rng() % 7) - 3);
    Matrix<Rat> q(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) q(i, j) = (a[i] * b[j] + a[j] * b[i]) / Rat(2);
    if (q.is_zero_matrix()) continue;
    auto s = split_conic(q);
    Vec<QExt> want, got;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        want.push_back(QExt(q(i, j)));
        const auto& l2 = s.kind == SplitKind::DoubleLine ? s.l1 : s.l2;
        got.push_back(s.l1[i] * l2[j] + s.l1[j] * l2[i]);
      }
    CHECK(proportional(want, got));
  }
}

TEST_CASE("line lifts") {
  auto f = gallery_delta().frame;
  for (const auto& l : locals(f, 3)) {
    auto lines = line_family_lift(l.lf, l.nc, split_conic(l.q));
    REQUIRE(lines.size() == 1);
    Vec<QExt> e0{QExt(1), QExt(0), QExt(0), QExt(0), QExt(0)}, e1{QExt(0), QExt(1), QExt(0), QExt(0), QExt(0)};
    CHECK(proportional(vals(lines[0].L0), e0));
    CHECK(proportional(vals(lines[0].L1), e1));
    for (const auto* side : {&lines[0].L0, &lines[0].L1})
      for (const auto& j : *side) CHECK((j.du.is_zero() && j.dv.is_zero()));
  }
  // two cones: each generator depends on one parameter only
  for (const auto& l : locals(gallery_two_cones().frame, 5)) {
    auto lines = line_family_lift(l.lf, l.nc, split_conic(l.q));
    REQUIRE(lines.size() == 2);
    std::vector<std::pair<int, int>> dirs;
    for (const auto& line : lines) dirs.push_back(transverse_direction(line));
    CHECK(dirs[0] != dirs[1]);
  }
}

TEST_CASE("branch continuity under a small step") {
  const Rat eps(1, 1000);
  for (const auto& it : {gallery_two_cones(), gallery_plane_directrix()}) {
    for (const auto& l : locals(it.frame, 6)) {
      auto lines = line_family_lift(l.lf, l.nc, split_conic(l.q));
      REQUIRE(lines.size() == 2);
      auto moved = localize(it.frame, l.lf.u + eps, l.lf.v);
      auto q2 = focal_form(moved);
      if (conic_rank(q2) != 2) continue;
      auto s = split_conic(q2);
      for (const auto& line : lines) {
        Vec<Rat> pred;
        for (const auto& j : line.ell) pred.push_back((j.val + QExt(eps) * j.du).rational());
        Rat d1 = dist2(pred, rational(s.l1)), d2 = dist2(pred, rational(s.l2));
        Rat dmin = d1 < d2 ? d1 : d2, dmax = d1 < d2 ? d2 : d1;
        CHECK(dmin < dmax);
        CHECK(dmin < Rat(1, 10000));
      }
    }
  }
}

TEST_CASE("second order on lines") {
  for (const auto& it : {gallery_delta(), gallery_two_cones()}) {
    for (const auto& l : locals(it.frame, 5)) {
      for (const auto& line : line_family_lift(l.lf, l.nc, split_conic(l.q)))
        CHECK(second_order_on_line(line).kind == LocusKind::WholeComponent);
    }
  }
  for (const auto& it : {gallery_plane_directrix(), gallery_alpha1_osculating()}) {
    for (const auto& p : focal_samples(it.frame, 10, 0)) {
      auto lf = localize(it.frame, p.u, p.v);
      auto nc = normal_classes(lf);
      auto dev = developable_form(nc);
      if (dev.tag != DevTag::One) continue;
      auto lines = line_family_lift(lf, nc, split_conic(focal_form(lf)));
      for (const auto& line : lines) {
        auto loc = second_order_on_line(line);
        CHECK((loc.kind == LocusKind::WholeComponent || loc.total_multiplicity() <= 2));
      }
    }
  }
}

TEST_CASE("second-order criterion and fundamental points") {
  for (const auto& l : locals(gallery_delta().frame, 3)) {
    auto line = line_family_lift(l.lf, l.nc, split_conic(l.q))[0];
    for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, -3}}) {
      Vec<QExt> y{QExt(a), QExt(b), QExt(0)};
      CHECK(second_order_criterion(l.nc, line, y));
      CHECK(fundamental_point_test(l.nc, y));
    }
  }
  // beta: P = r ∩ r' is second-order focal, and it is the singular focal point
  for (const auto& it : {gallery_two_cones(), gallery_beta2_tangent_dev()}) {
    for (const auto& l : locals(it.frame, 5)) {
      auto split = split_conic(l.q);
      auto lines = line_family_lift(l.lf, l.nc, split);
      auto p = cross3(split.l1, split.l2);
      for (const auto& line : lines) CHECK(second_order_criterion(l.nc, line, p));
      auto dev = developable_form(l.nc);
      auto x1 = singular_focal_point(l.nc, QExt(1), QExt(7));
      auto x2 = singular_focal_point(l.nc, QExt(2), QExt(-5));
      CHECK(dot(split.l1, x1).is_zero());
      CHECK(dot(split.l2, x1).is_zero());
      CHECK(proportional(x1, x2));
    }
  }
  for (const auto& l : locals(gallery_gamma1_tangent_planes().frame, 5)) {
    auto split = split_conic(l.q);
    auto x = singular_focal_point(l.nc, QExt(3), QExt(1));
    CHECK(dot(split.l1, x).is_zero());
  }
  for (const auto& l : locals(gallery_two_cones().frame, 3))
    CHECK(fundamental_point_test(l.nc, Vec<QExt>{QExt(1), QExt(0), QExt(0)}));
  for (const auto& l : locals(gallery_veronese_projection().frame, 3))
    CHECK_FALSE(fundamental_point_test(l.nc, veronese_point(l.nc, QExt(1), QExt(2))));
}
