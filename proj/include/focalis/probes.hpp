#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focalis/focal.hpp"

namespace focalis {

/// A focal line of one sample together with the sample's local data.
struct BranchSample {
  LocalFrame lf;
  NormalClasses nc;
  LineFamily line;
};

/// The 10 Plücker coordinates p_ij = L0_i L1_j - L0_j L1_i, i < j.
Vec<QJet> plucker(const Vec<QJet>& l0, const Vec<QJet>& l1);
/// All Grassmann-Plücker relations vanish.
bool plucker_relations_hold(const Vec<QExt>& p);

/// rank[p, p_u, p_v] - 1 at one sample.
int grassmann_rank_at(const LineFamily& line);

struct GrassmannRank {
  int generic = 0;  // maximum over samples
  std::vector<int> per_sample;
};

GrassmannRank grassmann_map_rank(const std::vector<BranchSample>& samples);

enum class RealKind { IsLine, IsPlane, Cone, TangentDevelopable, NondevelopableRuled, Unknown };
std::string to_string(RealKind k);

struct RealizationVerdict {
  RealKind kind = RealKind::Unknown;
  int family_dim = 0;           // dimension of the line family
  int swept_dim = 0;            // dimension of the swept set
  Vec<QExt> vertex;             // Cone
  std::vector<Vec<QExt>> span;  // IsLine: 2 points, IsPlane: 3 points
  int developable_samples = 0;
  int samples = 0;
  std::string note;
};

RealizationVerdict realization_verdict(const std::vector<BranchSample>& samples, const GrassmannRank& gr);

/// Every sampled generator meets the plane spanned by `plane`, and the
/// meeting point traces a curve.
bool plane_directrix_probe(const std::vector<BranchSample>& ruled, const std::vector<Vec<QExt>>& plane);

/// At each sample the congruence plane contains the tangent plane of the
/// swept surface at some point of the focal line.
bool tangency_check(const std::vector<BranchSample>& samples);

enum class SigmaKind { Point, Curve, None };
std::string to_string(SigmaKind k);

struct SigmaPrime {
  SigmaKind kind = SigmaKind::None;
  int rank = 2;
  Vec<QExt> point;  // Point
};

/// Locus of P(sigma), the focal point shared by all non-developable
/// directions (cases beta and gamma).
SigmaPrime sigma_prime_probe(const std::vector<std::pair<LocalFrame, NormalClasses>>& samples);

/// Planes through a fixed generator, followed along the parameter-space
/// line of the generator's fibre, span at most a hyperplane that contains
/// the tangent plane along the generator. Heuristic: needs straight fibres.
bool pencil_linearity_probe(const PlaneFrame& f, const std::vector<BranchSample>& samples);

/// The developable direction moves the plane inside span(pi, r) to first
/// order. `dirs` gives the developable direction per sample.
bool hyperplane_confinement_probe(const std::vector<BranchSample>& r_samples, const std::vector<Direction>& dirs,
                                  const std::vector<Vec<QExt>>& plane);

/// Normal coordinates of an ambient vector in the sample's complement basis.
Vec<QExt> normal_part(const LocalFrame& lf, const NormalClasses& nc, const Vec<QExt>& w);

/// Transverse direction (a, b) for a rank-one line family at a sample.
std::pair<int, int> transverse_direction(const LineFamily& line);
bool developable_at(const LineFamily& line);

}  // namespace focalis
