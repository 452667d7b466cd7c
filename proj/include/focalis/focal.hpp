#pragma once

#include <string>
#include <vector>

#include "focalis/bform.hpp"
#include "focalis/frame.hpp"

namespace focalis {

using QJet = Jet<QExt>;

/// Normal-space classes of the frame derivatives in a fixed complement
/// basis, together with their in-plane parts, all as jets in (u, v).
struct NormalClasses {
  std::pair<int, int> basis;
  Matrix<RatJet> Cu, Cv;  // 2x3: column i is the class of dA_i/du (dv)
  Matrix<RatJet> Bu, Bv;  // 3x3: in-plane coordinates of dA_i/du (dv)

  Matrix<Rat> cu() const;
  Matrix<Rat> cv() const;
  Matrix<Rat> bu() const;
  Matrix<Rat> bv() const;
};

/// Focal conic Q with q(x) = det[A0, A1, A2, sum x_i dA_i/du, sum x_i dA_i/dv].
Matrix<Rat> focal_form(const LocalFrame& lf);
/// The same over Q[u, v] for polynomial frames.
Matrix<Poly> focal_form_symbolic(const PlaneFrame& f);
/// q(x) from the assembled 5x5 determinant.
Rat focal_determinant(const LocalFrame& lf, const Vec<Rat>& x);

/// Matrix rank of Q; ZeroForm if Q = 0.
int conic_rank(const Matrix<Rat>& q);
int conic_rank(const Matrix<QExt>& q);

NormalClasses normal_classes(const LocalFrame& lf);

/// Jets of the conic det[C_u x, C_v x], proportional to Q at every point.
Matrix<RatJet> normalized_conic(const NormalClasses& nc);

enum class DevTag { NoneDev, One, TwoDistinct, OneDouble, Infinite };
std::string to_string(DevTag t);

struct Direction {
  QExt lam;
  QExt mu;
};

struct DevDirections {
  DevTag tag = DevTag::NoneDev;
  BForm<Rat> form;
  std::vector<Direction> dirs;
  int form_degree() const { return form.is_zero() ? -1 : form.degree(); }
};

/// gcd of the 2x2 minors of lam C_u + mu C_v.
DevDirections developable_form(const NormalClasses& nc);

/// Kernel of lam C_u + mu C_v; RankDrop if the direction is developable.
Vec<QExt> veronese_point(const NormalClasses& nc, const QExt& lam, const QExt& mu);

/// gcd of the 4x4 minors of [P, dP/dt, dP/du, dP/dv] along the Veronese
/// parametrization, both charts merged. NotNondegenerate unless rank 3.
BForm<Rat> second_order_form_nondeg(const LocalFrame& lf, const NormalClasses& nc);

enum class SplitKind { Nondegenerate, TwoLines, DoubleLine };

struct ConicSplit {
  SplitKind kind = SplitKind::Nondegenerate;
  Vec<QExt> l1;
  Vec<QExt> l2;
};

ConicSplit split_conic(const Matrix<Rat>& q);

/// One focal line followed to first order.
struct LineFamily {
  Vec<QJet> ell;     // line coefficients
  Vec<QJet> y0, y1;  // spanning plane points
  Vec<QJet> L0, L1;  // their lifts to C^5
};

/// Lifts the lines of the split conic with exact first derivatives; the
/// order of the result matches (l1, l2) of the split.
std::vector<LineFamily> line_family_lift(const LocalFrame& lf, const NormalClasses& nc, const ConicSplit& split);

/// Lift of a plane point with jets.
Vec<QJet> lift_point(const LocalFrame& lf, const Vec<QJet>& y);
Vec<QJet> to_qjets(const Vec<RatJet>& v);

enum class LocusKind { FinitePoints, WholeComponent };

struct SecondOrderLocus {
  LocusKind kind = LocusKind::FinitePoints;
  int form_degree = 0;           // stated degree of the gcd form
  int squarefree_degree = 0;     // distinct points
  std::vector<FormRoot> points;  // parameter roots with multiplicity
  std::string form;              // printed gcd
  int total_multiplicity() const { return kind == LocusKind::WholeComponent ? -1 : form_degree; }
};

/// Locus on the nondegenerate conic from its second-order form.
SecondOrderLocus conic_locus(const BForm<Rat>& f);

/// Second-order locus on the line spanned by L0 + s L1.
SecondOrderLocus second_order_on_line(const LineFamily& line, BForm<QExt>* form_out = nullptr);

/// Independent criterion for a point y of the line (plane coordinates).
bool second_order_criterion(const NormalClasses& nc, const LineFamily& line, const Vec<QExt>& y);

/// C_u x = 0 and C_v x = 0.
bool fundamental_point_test(const NormalClasses& nc, const Vec<QExt>& x);

/// The focal point of a non-developable direction (RankDrop otherwise).
Vec<QExt> singular_focal_point(const NormalClasses& nc, const QExt& lam, const QExt& mu);

Matrix<QExt> to_qext(const Matrix<Rat>& m);
Vec<QExt> to_qext(const Vec<Rat>& v);

}  // namespace focalis
