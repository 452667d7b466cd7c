#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "focalis/probes.hpp"

namespace focalis {

enum class ClassTag { Nondegenerate, Alpha, Beta, Gamma, Delta };
enum class SubClass { None, FivePoints, WholeConic, A1, A2, A3, B2, B3, G1, G2, G3, UnknownSub };
enum class SegreCase {
  Case1Veronese,
  Case2aTwoCones,
  Case2bPlaneDirectrix,
  Case3Line,
  Case3NondevRuled,
  Case3TangentDev,
  Case3Cone
};
enum class Mode { Sampled, Symbolic };

std::string to_string(ClassTag c);
std::string to_string(SubClass s);
std::string to_string(SegreCase s);
std::string to_string(Mode m);
ClassTag parse_class(const std::string& s);
SubClass parse_subclass(const std::string& s);
SegreCase parse_segre(const std::string& s);

/// Class tag implied by (conic rank, developable tag); nullopt if the pair
/// matches no class.
std::optional<ClassTag> tag_of(int conic_rank, DevTag dev);

struct ComponentRecord {
  std::string name;  // "conic", "r", "r'", "r1", "r2"
  SecondOrderLocus locus;
  int grassmann_rank = -1;  // lines only
};

struct SampleRecord {
  SamplePoint point;
  int conic_rank = 0;
  int dev_form_degree = -1;
  DevTag dev_tag = DevTag::NoneDev;
  std::vector<ComponentRecord> components;
  bool kept = true;
  std::string discard_reason;
};

struct BranchProbes {
  std::string component;
  GrassmannRank grassmann;
  RealizationVerdict verdict;
  std::optional<bool> tangency;
  std::optional<bool> pencil_linear;
};

struct ProbeReport {
  std::vector<BranchProbes> branches;
  std::optional<SigmaPrime> sigma_prime;
  std::optional<bool> plane_directrix;
  std::optional<bool> hyperplane_confinement;
};

struct SymbolicInfo {
  Matrix<Poly> focal_form;
  int generic_conic_rank = 0;
};

struct ClassifyOptions {
  int samples = 25;
  std::uint64_t seed = 0;
  Mode mode = Mode::Sampled;
  /// A1 / A2 label supplied by a gallery construction.
  std::optional<SubClass> construction_sub;
};

struct ErrorInfo {
  std::string kind;
  std::string message;
};

struct AnalysisReport {
  std::string input;
  std::string frame_text;
  Mode mode = Mode::Sampled;
  std::uint64_t seed = 0;
  std::vector<SampleRecord> samples;
  std::optional<ClassTag> cls;
  SubClass sub = SubClass::None;
  std::optional<SegreCase> segre;
  ProbeReport probes;
  std::optional<SymbolicInfo> symbolic;
  std::vector<std::string> warnings;
  std::optional<ErrorInfo> error;

  int kept_samples() const;
};

/// Runs the pipeline. Throws DegenerateFrame / DegenerateCongruence for
/// invalid frames and UsageError for unsupported options; an aggregation
/// failure is reported in `error` (kind AmbiguousVerdict) with the
/// per-sample evidence kept.
AnalysisReport classify(const PlaneFrame& f, const ClassifyOptions& opt = {});

/// The samples used by classify: nonvanishing focal form.
std::vector<SamplePoint> focal_samples(const PlaneFrame& f, int n, std::uint64_t seed);

/// Largest total degree accepted in symbolic mode.
inline constexpr int kSymbolicMaxDegree = 4;

}  // namespace focalis
