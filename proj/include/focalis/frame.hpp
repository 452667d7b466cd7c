#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "focalis/jet.hpp"
#include "focalis/linalg.hpp"
#include "focalis/rfunc.hpp"

namespace focalis {

using RatJet = Jet<Rat>;

/// A plane congruence: the planes spanned by the rows A0, A1, A2 of a
/// 3x5 matrix of rational functions in (u, v).
class PlaneFrame {
 public:
  PlaneFrame() = default;
  explicit PlaneFrame(Matrix<RFunc> a);

  const Matrix<RFunc>& A() const { return a_; }
  const Matrix<RFunc>& Au() const { return au_; }
  const Matrix<RFunc>& Av() const { return av_; }
  const Matrix<RFunc>& Auu() const { return auu_; }
  const Matrix<RFunc>& Auv() const { return auv_; }
  const Matrix<RFunc>& Avv() const { return avv_; }

  bool is_polynomial() const;
  /// Maximum total degree of the entries (polynomial frames only).
  int total_degree() const;
  /// Does some denominator vanish at (u, v)?
  bool singular_at(const Rat& u, const Rat& v) const;

  friend bool operator==(const PlaneFrame& a, const PlaneFrame& b) { return a.a_ == b.a_; }

 private:
  Matrix<RFunc> a_, au_, av_, auu_, auv_, avv_;
};

/// The frame and its first derivatives at a parameter point, as jets.
struct LocalFrame {
  Rat u, v;
  Matrix<RatJet> A;   // (A, A_u, A_v)
  Matrix<RatJet> Au;  // (A_u, A_uu, A_uv)
  Matrix<RatJet> Av;  // (A_v, A_uv, A_vv)

  Matrix<Rat> values() const;
};

LocalFrame localize(const PlaneFrame& f, const Rat& u, const Rat& v);

struct SamplePoint {
  Rat u;
  Rat v;
  bool admissible = false;
  friend bool operator==(const SamplePoint& a, const SamplePoint& b) { return a.u == b.u && a.v == b.v; }
};

/// Parses PLANECONGRUENCE v1 text. Throws SyntaxError with line/column,
/// or DegenerateFrame if the rows are generically dependent.
PlaneFrame parse_congruence(const std::string& text);
/// Serializes to PLANECONGRUENCE v1; parse(print(f)) == f.
std::string print_congruence(const PlaneFrame& f, const std::string& comment = "");

/// Generic rank of the 3x5 frame, computed exactly.
int generic_rank(const PlaneFrame& f);

struct FrameDiagnostics {
  bool rank_ok = false;
  bool focal_ok = false;
  std::optional<SamplePoint> rank_witness;
  std::optional<SamplePoint> focal_witness;
  std::string message;
};

/// Generic rank 3 and nonvanishing focal form; throws DegenerateFrame or
/// DegenerateCongruence on failure, otherwise returns witnesses.
FrameDiagnostics validate_frame(const PlaneFrame& f);

/// Frame rank 3 and no vanishing denominator at (u, v).
bool admissible(const PlaneFrame& f, const Rat& u, const Rat& v);

using Admissibility = std::function<bool(const LocalFrame&)>;

/// n distinct admissible integer points drawn from [-9, 9]^2, deterministic in
/// seed; `extra` may add further conditions. At most 100 draws per slot.
std::vector<SamplePoint> sample_points(const PlaneFrame& f, int n, std::uint64_t seed,
                                       const Admissibility& extra = {});

/// First pair (i, j) in decreasing lexicographic order, starting from
/// (3, 4), with det[A0; A1; A2; e_i; e_j] != 0.
std::pair<int, int> complement_basis(const Matrix<Rat>& a);
std::pair<int, int> complement_basis(const PlaneFrame& f, const SamplePoint& p);

// Transformations used by the invariance checks.
PlaneFrame transform_ambient(const PlaneFrame& f, const Matrix<Rat>& g);  // columns x -> g x
PlaneFrame mix_rows(const PlaneFrame& f, const Matrix<Rat>& g);           // rows A -> g A
/// Substitutes u -> a u + b v + e, v -> c u + d v + f.
PlaneFrame reparametrize(const PlaneFrame& f, const std::array<Rat, 6>& abcdef);

}  // namespace focalis
