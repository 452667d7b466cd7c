#pragma once

#include <complex>
#include <optional>
#include <string>

#include "focalis/rat.hpp"

namespace focalis {

/// Element a + b*sqrt(d) of Q or of a quadratic extension Q(sqrt d).
///
/// A value with b == 0 is rational and carries d == 0. Two irrational
/// values combine only if their radicands define the same field
/// (d1*d2 a perfect square); anything else raises ExtensionConflict.
class QExt {
 public:
  QExt() = default;
  QExt(int v) : a_(v) {}           // NOLINT
  QExt(long v) : a_(v) {}          // NOLINT
  QExt(Rat a) : a_(std::move(a)) {}  // NOLINT
  QExt(Rat a, Rat b, mpz_class d);

  /// sqrt(r) in Q when r is a square, otherwise in Q(sqrt k) with k the
  /// square-reduced radicand.
  static QExt sqrt(const Rat& r);
  /// Square root inside the current field, if one exists there.
  std::optional<QExt> try_sqrt() const;

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const mpz_class& d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Rat rational() const;  // throws unless is_rational()

  QExt conj() const;
  Rat norm() const;  // a^2 - d b^2
  QExt inverse() const;

  QExt operator-() const;
  QExt& operator+=(const QExt& o);
  QExt& operator-=(const QExt& o);
  QExt& operator*=(const QExt& o);
  QExt& operator/=(const QExt& o) { return *this *= o.inverse(); }

  friend QExt operator+(QExt x, const QExt& y) { return x += y; }
  friend QExt operator-(QExt x, const QExt& y) { return x -= y; }
  friend QExt operator*(QExt x, const QExt& y) { return x *= y; }
  friend QExt operator/(QExt x, const QExt& y) { return x /= y; }
  friend bool operator==(const QExt& x, const QExt& y);

  std::complex<long double> to_complex() const;
  /// "a", or "a+b*sqrt(d)" with a, b exact rationals.
  std::string str() const;

 private:
  void normalize();
  void reduce();
  /// Rewrites `o` (and, if needed, *this) over a common radicand.
  void align(QExt& o);

  Rat a_;
  Rat b_;
  mpz_class d_ = 0;
};

inline bool is_zero(const QExt& x) { return x.is_zero(); }
inline QExt zero_like(const QExt&) { return QExt(0); }
inline QExt one_like(const QExt&) { return QExt(1); }
inline bool invertible(const QExt& x) { return !x.is_zero(); }
inline QExt exact_div(const QExt& a, const QExt& b) { return a / b; }

}  // namespace focalis
