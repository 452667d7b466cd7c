#include <doctest.h>

#include <set>

#include "focalis/verify.hpp"

using namespace focalis;

namespace {

PlaneFrame rows(const std::string& r0, const std::string& r1, const std::string& r2) {
  return parse_congruence("PLANECONGRUENCE v1\n" + r0 + "\n" + r1 + "\n" + r2 + "\n");
}

AnalysisReport run(const GalleryItem& it, int samples = 25, std::uint64_t seed = 0) {
  return classify(it.frame, it.options(samples, seed));
}

}  // namespace

TEST_CASE("class tag table") {
  CHECK(tag_of(3, DevTag::NoneDev) == ClassTag::Nondegenerate);
  CHECK(tag_of(2, DevTag::One) == ClassTag::Alpha);
  CHECK(tag_of(2, DevTag::TwoDistinct) == ClassTag::Beta);
  CHECK(tag_of(1, DevTag::OneDouble) == ClassTag::Gamma);
  CHECK(tag_of(1, DevTag::Infinite) == ClassTag::Delta);
  CHECK_FALSE(tag_of(3, DevTag::One).has_value());
  CHECK_FALSE(tag_of(2, DevTag::NoneDev).has_value());
  CHECK_FALSE(tag_of(2, DevTag::OneDouble).has_value());
  CHECK_FALSE(tag_of(1, DevTag::TwoDistinct).has_value());
}

TEST_CASE("enum strings round trip") {
  for (auto c : {ClassTag::Nondegenerate, ClassTag::Alpha, ClassTag::Beta, ClassTag::Gamma, ClassTag::Delta})
    CHECK(parse_class(to_string(c)) == c);
  for (int s = 0; s <= static_cast<int>(SubClass::UnknownSub); ++s)
    CHECK(parse_subclass(to_string(static_cast<SubClass>(s))) == static_cast<SubClass>(s));
  for (int s = 0; s <= static_cast<int>(SegreCase::Case3Cone); ++s)
    CHECK(parse_segre(to_string(static_cast<SegreCase>(s))) == static_cast<SegreCase>(s));
  CHECK(to_string(ClassTag::Nondegenerate) == "NondegenerateConic");
}

TEST_CASE("gallery") {
  auto items = gallery_items();
  CHECK(items.size() >= 10);
  std::set<std::string> names;
  for (const auto& it : items) names.insert(it.name);
  CHECK(names.size() == items.size());
  CHECK(gallery_item("two_cones").frame == gallery_two_cones().frame);
  CHECK_THROWS_AS(gallery_item("no_such_item"), UnknownGalleryItem);
  std::set<ClassTag> classes;
  for (const auto& it : items) classes.insert(it.expected_class);
  CHECK(classes.size() == 5);
}

TEST_CASE("every gallery item classifies as expected") {
  for (const auto& it : gallery_items()) {
    CAPTURE(it.name);
    auto r = run(it);
    CHECK_FALSE(r.error.has_value());
    REQUIRE(r.cls.has_value());
    CHECK(*r.cls == it.expected_class);
    CHECK(r.sub == it.expected_sub);
    CHECK(r.segre == it.expected_segre);
    CHECK(5 * r.kept_samples() >= 4 * static_cast<int>(r.samples.size()));
  }
}

TEST_CASE("components and second-order loci") {
  auto v = run(gallery_veronese_projection());
  for (const auto& s : v.samples) {
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].name == "conic");
    CHECK(s.components[0].locus.kind == LocusKind::WholeComponent);
  }
  auto g = run(gallery_generic5());
  int five = 0;
  for (const auto& s : g.samples)
    if (s.kept) five += s.components[0].locus.squarefree_degree == 5;
  CHECK(5 * five >= 4 * g.kept_samples());
  auto a = run(gallery_plane_directrix());
  for (const auto& s : a.samples) {
    if (!s.kept) continue;
    REQUIRE(s.components.size() == 2);
    CHECK(s.components[0].name == "r");
    CHECK(s.components[1].name == "r'");
  }
  auto b = run(gallery_beta2_tangent_dev());
  bool finite = false;
  for (const auto& s : b.samples)
    for (const auto& c : s.components) finite |= c.locus.kind == LocusKind::FinitePoints;
  CHECK(finite);
  CHECK_FALSE(b.segre.has_value());
}

TEST_CASE("reports are deterministic") {
  for (const auto& it : {gallery_two_cones(), gallery_generic5(), gallery_alpha1_osculating()}) {
    CHECK(to_json(run(it, 12, 5)).dump() == to_json(run(it, 12, 5)).dump());
  }
  auto a = run(gallery_generic5(), 12, 1), b = run(gallery_generic5(), 12, 2);
  CHECK_FALSE(a.samples[0].point == b.samples[0].point);
  CHECK(a.cls == b.cls);
}

TEST_CASE("classification is invariant") {
  for (const auto& it : gallery_items()) {
    CAPTURE(it.name);
    auto base = fingerprint(run(it, 12));
    auto opt = it.options(12, 0);
    CHECK(fingerprint(classify(transform_ambient(it.frame, fixed_pgl5()), opt)) == base);
    CHECK(fingerprint(classify(mix_rows(it.frame, fixed_gl3()), opt)) == base);
    CHECK(fingerprint(classify(reparametrize(it.frame, fixed_affine()), opt)) == base);
    CHECK(fingerprint(run(it, 12, 99)) == base);
  }
}

TEST_CASE("symbolic mode") {
  for (const auto& it : {gallery_delta(), gallery_two_cones(), gallery_gamma1_tangent_planes()}) {
    auto opt = it.options(10, 0);
    opt.mode = Mode::Symbolic;
    auto r = classify(it.frame, opt);
    REQUIRE(r.symbolic.has_value());
    CHECK(r.cls == it.expected_class);
    CHECK(r.symbolic->generic_conic_rank == r.samples[0].conic_rank);
  }
  ClassifyOptions opt;
  opt.mode = Mode::Symbolic;
  PlaneFrame high = rows("1, 0, 0, 0, u^5", "0, 1, 0, v, 0", "0, 0, 1, u, v");
  CHECK(high.total_degree() > kSymbolicMaxDegree);
  CHECK_THROWS_AS(classify(high, opt), UsageError);
  opt.mode = Mode::Sampled;
  CHECK_NOTHROW(classify(high, opt));
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(classify(degenerate_pencil_sweep()), DegenerateCongruence);
  CHECK_THROWS_AS(classify(degenerate_constant_plane()), DegenerateCongruence);
  Matrix<RFunc> a = gallery_delta().frame.A();
  for (int c = 0; c < 5; ++c) a(1, c) = a(0, c) * RFunc::var("u");
  CHECK_THROWS_AS(classify(PlaneFrame(a)), DegenerateFrame);
}

TEST_CASE("report json") {
  auto r = run(gallery_two_cones(), 10);
  Json j = to_json(r);
  CHECK(j["class"] == "Beta");
  CHECK(j["subclass"] == "B3");
  CHECK(j["segre"] == "Case2aTwoCones");
  CHECK(j["samples"].size() == 10);
  CHECK(j["error"].is_null());
  CHECK(j["probes"]["sigma_prime"]["kind"] == "Point");
  CHECK(j.contains("subclass_rules"));
  Json e = error_report("x.cong", Mode::Sampled, 0, "DegenerateCongruence", "constant plane");
  CHECK(e["error"]["kind"] == "DegenerateCongruence");
  CHECK(e["class"].is_null());
  CHECK_FALSE(to_text(r).empty());
}
