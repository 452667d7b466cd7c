#include <doctest.h>

#include <algorithm>
#include <random>

#include "focalis/verify.hpp"

using namespace focalis;

namespace {

Vec<QExt> e(int k) {
  Vec<QExt> v(5, QExt(0));
  v[k] = QExt(1);
  return v;
}

Vec<QExt> vals(const Vec<QJet>& v) {
  Vec<QExt> r;
  for (const auto& j : v) r.push_back(j.val);
  return r;
}

/// Focal lines per sample, in split order; samples with a nondegenerate
/// conic are skipped.
std::vector<std::vector<BranchSample>> branches(const PlaneFrame& f, int n, std::uint64_t seed = 0) {
  std::vector<std::vector<BranchSample>> out;
  for (const auto& p : focal_samples(f, n, seed)) {
    LocalFrame lf = localize(f, p.u, p.v);
    NormalClasses nc = normal_classes(lf);
    auto split = split_conic(focal_form(lf));
    if (split.kind == SplitKind::Nondegenerate) continue;
    auto lines = line_family_lift(lf, nc, split);
    if (out.size() < lines.size()) out.resize(lines.size());
    for (size_t k = 0; k < lines.size(); ++k) out[k].push_back({lf, nc, lines[k]});
  }
  return out;
}

std::vector<std::pair<LocalFrame, NormalClasses>> local(const PlaneFrame& f, int n) {
  std::vector<std::pair<LocalFrame, NormalClasses>> out;
  for (const auto& p : focal_samples(f, n, 0)) {
    LocalFrame lf = localize(f, p.u, p.v);
    out.emplace_back(lf, normal_classes(lf));
  }
  return out;
}

Vec<QExt> image(const Matrix<Rat>& g, const Vec<QExt>& x) {
  Vec<QExt> r(5, QExt(0));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r[i] += QExt(g(i, j)) * x[j];
  return r;
}

PlaneFrame rescaled(const PlaneFrame& f) {
  Matrix<RFunc> a = f.A();
  RFunc s = RFunc::var("u") * RFunc::var("u") + RFunc(Rat(1));
  RFunc t = RFunc::var("v") + RFunc(Rat(7));
  for (int c = 0; c < 5; ++c) {
    a(0, c) = a(0, c) * s;
    a(2, c) = a(2, c) * t;
  }
  return PlaneFrame(a);
}

}  // namespace

TEST_CASE("pluecker coordinates") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Vec<QJet> a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      a[i] = QJet(QExt(static_cast<long>(rng() % 7) - 3));
      b[i] = QJet(QExt(static_cast<long>(rng() % 7) - 3));
    }
    auto p = vals(plucker(a, b));
    REQUIRE(p.size() == 10);
    int k = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j, ++k) CHECK(p[k] == a[i].val * b[j].val - a[j].val * b[i].val);
    CHECK(plucker_relations_hold(p));
  }
  // a generic 2-vector is not decomposable
  Vec<QExt> q(10, QExt(0));
  q[0] = QExt(1);   // p01
  q[9] = QExt(1);   // p34
  CHECK_FALSE(plucker_relations_hold(q));
}

TEST_CASE("pluecker relations hold on every focal line") {
  for (const auto& it : gallery_items()) {
    for (const auto& br : branches(it.frame, 8))
      for (const auto& s : br) CHECK(plucker_relations_hold(vals(plucker(s.line.L0, s.line.L1))));
  }
}

TEST_CASE("grassmann map ranks") {
  auto d = branches(gallery_delta().frame, 10);
  REQUIRE(d.size() == 1);
  CHECK(grassmann_map_rank(d[0]).generic == 0);
  auto c = branches(gallery_two_cones().frame, 10);
  REQUIRE(c.size() == 2);
  for (const auto& br : c) CHECK(grassmann_map_rank(br).generic == 1);
  auto g = branches(gallery_gamma1_tangent_planes().frame, 10);
  REQUIRE(g.size() == 1);
  auto gr = grassmann_map_rank(g[0]);
  CHECK(gr.generic == 1);
  CHECK(gr.per_sample.size() == g[0].size());

  auto r = classify(gallery_plane_directrix().frame);
  REQUIRE(r.probes.branches.size() == 2);
  CHECK(r.probes.branches[0].component == "r");
  CHECK(r.probes.branches[0].grassmann.generic == 1);
  CHECK(r.probes.branches[1].component == "r'");
  CHECK(r.probes.branches[1].grassmann.generic == 2);
}

TEST_CASE("grassmann rank is invariant under frame rescaling") {
  for (const auto& it : {gallery_delta(), gallery_two_cones(), gallery_gamma1_tangent_planes(),
                         gallery_gamma3_cone_pencils(), gallery_beta2_tangent_dev()}) {
    auto a = branches(it.frame, 8), b = branches(rescaled(it.frame), 8);
    REQUIRE(a.size() == b.size());
    std::vector<int> ra, rb;
    for (size_t k = 0; k < a.size(); ++k) {
      ra.push_back(grassmann_map_rank(a[k]).generic);
      rb.push_back(grassmann_map_rank(b[k]).generic);
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    CHECK(ra == rb);
  }
}

TEST_CASE("realization verdicts") {
  auto d = branches(gallery_delta().frame, 6);
  auto vd = realization_verdict(d[0], grassmann_map_rank(d[0]));
  CHECK(vd.kind == RealKind::IsLine);
  REQUIRE(vd.span.size() == 2);

  for (const auto& br : branches(gallery_two_cones().frame, 10)) {
    auto v = realization_verdict(br, grassmann_map_rank(br));
    CHECK(v.kind == RealKind::Cone);
    CHECK(proportional(v.vertex, e(4)));
    CHECK(tangency_check(br));
  }

  auto g = branches(gallery_gamma1_tangent_planes().frame, 10);
  auto vg = realization_verdict(g[0], grassmann_map_rank(g[0]));
  CHECK(vg.kind == RealKind::NondevelopableRuled);
  CHECK(vg.developable_samples == 0);
  CHECK(tangency_check(g[0]));

  auto g2 = branches(gallery_gamma2_tangent_dev_pencils().frame, 10);
  CHECK(realization_verdict(g2[0], grassmann_map_rank(g2[0])).kind == RealKind::TangentDevelopable);
  auto g3 = branches(gallery_gamma3_cone_pencils().frame, 10);
  auto v3 = realization_verdict(g3[0], grassmann_map_rank(g3[0]));
  CHECK(v3.kind == RealKind::Cone);
  CHECK(proportional(v3.vertex, e(4)));
}

TEST_CASE("plane directrix") {
  auto r = classify(gallery_plane_directrix().frame);
  REQUIRE(r.probes.branches.size() == 2);
  const auto& plane = r.probes.branches[1].verdict;
  CHECK(plane.kind == RealKind::IsPlane);
  REQUIRE(plane.span.size() == 3);
  CHECK(r.probes.plane_directrix == true);

  auto g = branches(gallery_gamma1_tangent_planes().frame, 10)[0];
  // the curve L0(v) lies in span(e0, e1, e2)
  CHECK(plane_directrix_probe(g, {e(0), e(1), e(2)}));
  Vec<QExt> a = e(0), b = e(1), c = e(2);
  a[3] = QExt(1);
  b[4] = QExt(2);
  c[3] = QExt(-1);
  c[4] = QExt(1);
  CHECK_FALSE(plane_directrix_probe(g, {a, b, c}));
}

TEST_CASE("sigma prime") {
  auto c = sigma_prime_probe(local(gallery_two_cones().frame, 10));
  CHECK(c.kind == SigmaKind::Point);
  CHECK(proportional(c.point, e(4)));
  auto b = sigma_prime_probe(local(gallery_beta2_tangent_dev().frame, 10));
  CHECK(b.kind == SigmaKind::Curve);
  CHECK(b.rank == 1);
}

TEST_CASE("projective transformations move the cone vertex") {
  Matrix<Rat> g = fixed_pgl5();
  auto t = transform_ambient(gallery_two_cones().frame, g);
  auto br = branches(t, 10);
  REQUIRE(br.size() == 2);
  for (const auto& b : br) {
    auto v = realization_verdict(b, grassmann_map_rank(b));
    CHECK(v.kind == RealKind::Cone);
    CHECK(proportional(v.vertex, image(g, e(4))));
  }
  auto s = sigma_prime_probe(local(t, 10));
  CHECK(s.kind == SigmaKind::Point);
  CHECK(proportional(s.point, image(g, e(4))));
}

TEST_CASE("normal part") {
  for (const auto& [lf, nc] : local(gallery_veronese_projection().frame, 4)) {
    // plane points have no normal part
    for (int r = 0; r < 3; ++r) {
      Vec<QExt> w;
      for (int c = 0; c < 5; ++c) w.push_back(QExt(lf.A(r, c).val));
      auto n = normal_part(lf, nc, w);
      CHECK(is_zero_vec(n));
    }
    Vec<QExt> w = e(nc.basis.first);
    CHECK_FALSE(is_zero_vec(normal_part(lf, nc, w)));
  }
}

TEST_CASE("pencil linearity and hyperplane confinement") {
  auto g = gallery_gamma1_tangent_planes().frame;
  CHECK(pencil_linearity_probe(g, branches(g, 10)[0]));
  auto r = classify(gallery_plane_directrix().frame);
  CHECK(r.probes.hyperplane_confinement == true);
}
