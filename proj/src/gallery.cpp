#include "focalis/gallery.hpp"

namespace focalis {

namespace {

PlaneFrame frame(const std::string& r0, const std::string& r1, const std::string& r2) {
  return parse_congruence("PLANECONGRUENCE v1\n" + r0 + "\n" + r1 + "\n" + r2 + "\n");
}

}  // namespace

ClassifyOptions GalleryItem::options(int samples, std::uint64_t seed) const {
  ClassifyOptions o;
  o.samples = samples;
  o.seed = seed;
  o.construction_sub = construction_sub;
  return o;
}

GalleryItem gallery_delta() {
  return {"delta",
          frame("1, 0, 0, 0, 0", "0, 1, 0, 0, 0", "0, 0, 1, u, v"),
          ClassTag::Delta,
          SubClass::None,
          SegreCase::Case3Line,
          std::nullopt,
          "planes through the fixed line spanned by e0, e1"};
}

GalleryItem gallery_veronese_projection() {
  return {"veronese_projection",
          frame("1, 0, u, 0, 0", "0, 0, 0, 1, v", "1, 1, u + v, 1, u + v"),
          ClassTag::Nondegenerate,
          SubClass::WholeConic,
          SegreCase::Case1Veronese,
          std::nullopt,
          "planes of the conics of the Veronese surface, projected to P4"};
}

GalleryItem gallery_two_cones() {
  return {"two_cones",
          frame("0, 0, 0, 0, 1", "1, u, u^2, 0, 0", "0, 1, v, v^2, 0"),
          ClassTag::Beta,
          SubClass::B3,
          SegreCase::Case2aTwoCones,
          std::nullopt,
          "planes through O = e4 and one generator of each of two cones with vertex O"};
}

GalleryItem gallery_plane_directrix() {
  return {"plane_directrix",
          frame("1, u, u^2, 0, 0", "0, 0, 1, u, u^2", "0, 1, v, 0, 0"),
          ClassTag::Alpha,
          SubClass::A3,
          SegreCase::Case2bPlaneDirectrix,
          std::nullopt,
          "ruled surface joining C(u) in the plane x3 = x4 = 0 to D(u); planes through a generator and a line of "
          "that plane through C(u)"};
}

GalleryItem gallery_gamma1_tangent_planes() {
  return {"gamma1_tangent_planes",
          frame("1, v, v^2, 0, 0", "0, 0, 0, 1, v", "0, 1, 2*v, 0, u"),
          ClassTag::Gamma,
          SubClass::G1,
          SegreCase::Case3NondevRuled,
          std::nullopt,
          "tangent planes of the ruled surface L0(v) + t L1(v) at the point of parameter u"};
}

GalleryItem gallery_gamma3_cone_pencils() {
  return {"gamma3_cone_pencils",
          frame("0, 0, 0, 0, 1", "1, u, u^2, u^3, 0", "0, 1, 2*u, 3*u^2 + v, 0"),
          ClassTag::Gamma,
          SubClass::G3,
          SegreCase::Case3Cone,
          std::nullopt,
          "pencils of planes through the generators of the cone over a twisted cubic"};
}

GalleryItem gallery_gamma2_tangent_dev_pencils() {
  return {"gamma2_tangent_dev_pencils",
          frame("1, u, u^2, u^3, 0", "0, 1, 2*u, 3*u^2, 0", "0, 0, 1, 3*u, v"),
          ClassTag::Gamma,
          SubClass::G2,
          SegreCase::Case3TangentDev,
          std::nullopt,
          "pencils of planes through the tangent lines of a twisted cubic, containing its osculating plane"};
}

GalleryItem gallery_beta2_tangent_dev() {
  return {"beta2_tangent_dev",
          frame("1, u, u^2, u^3, 0", "0, 1, 2*u, 3*u^2, 0", "0, 0, 1, 3*u + v^2, v"),
          ClassTag::Beta,
          SubClass::B2,
          std::nullopt,
          std::nullopt,
          "planes through the tangent lines of a twisted cubic, one focal line filling the tangent developable"};
}

GalleryItem gallery_alpha1_osculating() {
  return {"alpha1_osculating",
          frame("1, u, u^2, u^3 + u*v, v", "0, 1, 2*u, 3*u^2 + v, 0", "0, 0, 1, 3*u, 0"),
          ClassTag::Alpha,
          SubClass::A1,
          std::nullopt,
          SubClass::A1,
          "osculating planes of the curves v = const on a surface whose sections x4 = v x0 form a pencil"};
}

GalleryItem gallery_generic5() {
  // tools/derive_generic5.py --seed 0
  return {"generic5",
          frame("-2*u^2 - u*v, -2*v, 2*u^2 - 2*u*v - 2, -u*v + 2*u, 2*u^2 + 2*v^2 + v - 1",
                "0, 2*u*v - 2*v - 2, u*v + 1, -u*v - v, 0",
                "-u^2 + 2*v, 2*u*v + 2*v^2 - 2*v, -v^2 - 2*v - 2, -u*v - 2, 2*u^2 + v^2 + 2*u - 1"),
          ClassTag::Nondegenerate,
          SubClass::FivePoints,
          std::nullopt,
          std::nullopt,
          "random degree-2 frame with a squarefree quintic second-order form"};
}

std::vector<GalleryItem> gallery_items() {
  return {gallery_delta(),
          gallery_veronese_projection(),
          gallery_two_cones(),
          gallery_plane_directrix(),
          gallery_gamma1_tangent_planes(),
          gallery_gamma3_cone_pencils(),
          gallery_gamma2_tangent_dev_pencils(),
          gallery_beta2_tangent_dev(),
          gallery_alpha1_osculating(),
          gallery_generic5()};
}

GalleryItem gallery_item(const std::string& name) {
  for (auto& it : gallery_items())
    if (it.name == name) return it;
  throw UnknownGalleryItem("no gallery item named '" + name + "'");
}

PlaneFrame degenerate_pencil_sweep() { return frame("1, 0, 0, 0, 0", "0, 1, 0, 0, 0", "0, 0, 1, u, 0"); }

PlaneFrame degenerate_constant_plane() { return frame("1, 0, 0, 0, 0", "0, 1, 0, 0, 0", "0, 0, 1, 0, 0"); }

}  // namespace focalis
