#pragma once

#include <string>

#include "focalis/errors.hpp"

namespace focalis {

/// First-order jet f + f_u du + f_v dv in the parameters (u, v).
template <class F>
struct Jet {
  F val;
  F du;
  F dv;

  Jet() : val(0), du(0), dv(0) {}
  Jet(int c) : val(c), du(0), dv(0) {}  // NOLINT
  Jet(F c) : val(std::move(c)), du(0), dv(0) {}  // NOLINT
  Jet(F v, F u1, F v1) : val(std::move(v)), du(std::move(u1)), dv(std::move(v1)) {}

  /// Directional derivative along (a, b).
  F along(const F& a, const F& b) const { return a * du + b * dv; }

  Jet operator-() const { return {-val, -du, -dv}; }
  friend Jet operator+(const Jet& a, const Jet& b) { return {a.val + b.val, a.du + b.du, a.dv + b.dv}; }
  friend Jet operator-(const Jet& a, const Jet& b) { return {a.val - b.val, a.du - b.du, a.dv - b.dv}; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return {a.val * b.val, a.du * b.val + a.val * b.du, a.dv * b.val + a.val * b.dv};
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (is_zero(b.val)) throw DivisionByZero("jet division by a vanishing value");
    F inv = F(1) / b.val;
    F q = a.val * inv;
    return {q, (a.du - q * b.du) * inv, (a.dv - q * b.dv) * inv};
  }
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.val == b.val && a.du == b.du && a.dv == b.dv;
  }

  std::string str() const { return "[" + val.str() + "; " + du.str() + ", " + dv.str() + "]"; }
};

template <class F>
bool is_zero(const Jet<F>& j) {
  return is_zero(j.val) && is_zero(j.du) && is_zero(j.dv);
}
template <class F>
bool invertible(const Jet<F>& j) {
  return !is_zero(j.val);
}
template <class F>
Jet<F> exact_div(const Jet<F>& a, const Jet<F>& b) {
  return a / b;
}

}  // namespace focalis
