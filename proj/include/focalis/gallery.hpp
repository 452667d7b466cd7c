#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focalis/classify.hpp"

namespace focalis {

struct GalleryItem {
  std::string name;
  PlaneFrame frame;
  ClassTag expected_class;
  SubClass expected_sub = SubClass::None;
  std::optional<SegreCase> expected_segre;
  /// A1 / A2 labels exist only by construction.
  std::optional<SubClass> construction_sub;
  std::string notes;

  ClassifyOptions options(int samples = 25, std::uint64_t seed = 0) const;
};

GalleryItem gallery_delta();
GalleryItem gallery_veronese_projection();
GalleryItem gallery_two_cones();
GalleryItem gallery_plane_directrix();
GalleryItem gallery_gamma1_tangent_planes();
GalleryItem gallery_gamma3_cone_pencils();
GalleryItem gallery_gamma2_tangent_dev_pencils();
GalleryItem gallery_beta2_tangent_dev();
GalleryItem gallery_alpha1_osculating();
GalleryItem gallery_generic5();

/// All items in a fixed order.
std::vector<GalleryItem> gallery_items();
/// Throws UnknownGalleryItem.
GalleryItem gallery_item(const std::string& name);

/// Frames that must be rejected as degenerate congruences.
PlaneFrame degenerate_pencil_sweep();
PlaneFrame degenerate_constant_plane();

}  // namespace focalis
