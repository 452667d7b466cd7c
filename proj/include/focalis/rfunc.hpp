#pragma once

#include <string>

#include "focalis/mpoly.hpp"
#include "focalis/rat.hpp"

namespace focalis {

using Poly = MPoly<Rat>;

/// Rational function num/den over Q, reduced, den with leading coefficient 1.
class RFunc {
 public:
  RFunc() : num_(), den_(Rat(1)) {}
  RFunc(int c) : RFunc(Poly(Rat(c))) {}  // NOLINT
  RFunc(Rat c) : RFunc(Poly(std::move(c))) {}  // NOLINT
  RFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}  // NOLINT
  RFunc(Poly num, Poly den);

  static RFunc var(const std::string& name) { return RFunc(Poly::var(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RFunc operator-() const;
  friend RFunc operator+(const RFunc& a, const RFunc& b);
  friend RFunc operator-(const RFunc& a, const RFunc& b);
  friend RFunc operator*(const RFunc& a, const RFunc& b);
  friend RFunc operator/(const RFunc& a, const RFunc& b);
  RFunc& operator+=(const RFunc& o) { return *this = *this + o; }
  RFunc& operator-=(const RFunc& o) { return *this = *this - o; }
  RFunc& operator*=(const RFunc& o) { return *this = *this * o; }
  friend bool operator==(const RFunc& a, const RFunc& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).zero();
  }

  RFunc differentiate(const std::string& name) const;
  RFunc substitute(const std::string& name, const RFunc& q) const;

  /// Value at a point; throws DivisionByZero when the denominator vanishes.
  Rat eval(const Rat& u, const Rat& v) const;
  bool den_vanishes(const Rat& u, const Rat& v) const;

  std::string str() const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RFunc& f) { return f.zero(); }
inline RFunc exact_div(const RFunc& a, const RFunc& b) { return a / b; }
inline bool invertible(const RFunc& f) { return !f.zero(); }

Rat eval_poly(const Poly& p, const Rat& u, const Rat& v);

}  // namespace focalis
