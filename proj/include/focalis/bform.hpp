#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "focalis/qext.hpp"
#include "focalis/rat.hpp"
#include "focalis/upoly.hpp"

namespace focalis {

/// Homogeneous binary form F(x, y) = sum c_i x^(n-i) y^i. Stored as the
/// stated degree n together with the affine polynomial f(x) = F(x, 1);
/// the multiplicity of the root (1:0) is n - deg f.
template <class F>
class BForm {
 public:
  BForm() : zero_(true) {}
  BForm(int degree, UPoly<F> affine) : n_(degree), f_(std::move(affine)), zero_(f_.zero()) {
    if (!zero_ && f_.degree() > n_) throw Error("BFormError", "affine degree exceeds stated degree");
    if (zero_) n_ = 0;
  }
  static BForm identically_zero() { return BForm(); }
  /// From coefficients c_0..c_n (c_i multiplies x^(n-i) y^i).
  static BForm from_coeffs(const std::vector<F>& c) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<F> a(c.size(), F(0));
    for (int k = 0; k <= n; ++k) a[k] = c[n - k];
    return BForm(n, UPoly<F>(std::move(a)));
  }

  bool is_zero() const { return zero_; }
  int degree() const { return n_; }
  const UPoly<F>& affine() const { return f_; }
  int infinity_multiplicity() const { return zero_ ? 0 : n_ - f_.degree(); }
  std::vector<F> coeffs() const {
    std::vector<F> c(n_ + 1, F(0));
    for (int k = 0; k <= n_; ++k) c[n_ - k] = f_.coeff(k);
    return c;
  }
  F eval(const F& x, const F& y) const {
    F acc(0);
    auto c = coeffs();
    for (int i = 0; i <= n_; ++i) {
      F t = c[i];
      for (int k = 0; k < n_ - i; ++k) t = t * x;
      for (int k = 0; k < i; ++k) t = t * y;
      acc = acc + t;
    }
    return acc;
  }

  /// Number of distinct roots in P^1 over C.
  int squarefree_degree() const {
    if (zero_) return -1;
    int d = squarefree_part(f_).degree();
    return d + (infinity_multiplicity() > 0 ? 1 : 0);
  }

  BForm monic_form() const {
    if (zero_) return *this;
    return BForm(n_, monic(f_));
  }

  std::string str(const std::string& x = "lam", const std::string& y = "mu") const {
    if (zero_) return "0";
    std::string s;
    auto c = coeffs();
    for (int i = 0; i <= n_; ++i) {
      if (focalis::is_zero(c[i])) continue;
      std::string mono;
      int ex = n_ - i, ey = i;
      if (ex > 0) mono += x + (ex > 1 ? "^" + std::to_string(ex) : "");
      if (ey > 0) mono += (mono.empty() ? "" : "*") + y + (ey > 1 ? "^" + std::to_string(ey) : "");
      std::string cs = "(" + c[i].str() + ")";
      if (!s.empty()) s += " + ";
      s += mono.empty() ? cs : cs + "*" + mono;
    }
    return s;
  }

  friend bool operator==(const BForm& a, const BForm& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.n_ == b.n_ && a.f_ == b.f_;
  }

 private:
  int n_ = 0;
  UPoly<F> f_;
  bool zero_ = false;
};

template <class F>
BForm<F> bform_mul(const BForm<F>& a, const BForm<F>& b) {
  if (a.is_zero() || b.is_zero()) return BForm<F>();
  return BForm<F>(a.degree() + b.degree(), a.affine() * b.affine());
}

/// gcd of several binary forms, monic on the affine chart. All-zero input
/// returns the identically-zero form.
template <class F>
BForm<F> bform_gcd(const std::vector<BForm<F>>& forms) {
  UPoly<F> g;
  int inf = -1;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    g = any ? gcd(g, f.affine()) : monic(f.affine());
    inf = any ? std::min(inf, f.infinity_multiplicity()) : f.infinity_multiplicity();
    any = true;
  }
  if (!any) return BForm<F>();
  return BForm<F>(g.degree() + inf, g);
}

/// Does `d` divide `f` as binary forms?
template <class F>
bool bform_divides(const BForm<F>& d, const BForm<F>& f) {
  if (f.is_zero()) return true;
  if (d.is_zero()) return false;
  if (d.infinity_multiplicity() > f.infinity_multiplicity()) return false;
  if (d.degree() > f.degree()) return false;
  return divmod(f.affine(), d.affine()).second.zero();
}

/// A root (x:y) of a binary form.
struct FormRoot {
  bool exact = true;
  QExt x;  // exact point (x:y), y in {0, 1}
  QExt y;
  std::complex<double> approx;  // affine value x/y, display only
  int multiplicity = 1;
  std::string str() const;
};

struct RootReport {
  int squarefree_degree = 0;
  std::vector<FormRoot> roots;
  /// Factors of degree >= 3 whose roots are only approximated.
  std::vector<std::string> numeric_factors;
};

RootReport bform_roots(const BForm<Rat>& f);
RootReport bform_roots(const BForm<QExt>& f);

/// Complex roots of a squarefree polynomial with double-precision
/// coefficients, refined; used only for display and as a guide for exact
/// factor reconstruction.
std::vector<std::complex<long double>> numeric_roots(const std::vector<std::complex<long double>>& coeffs);

}  // namespace focalis
