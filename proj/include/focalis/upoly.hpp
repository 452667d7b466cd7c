#pragma once

#include <string>
#include <utility>
#include <vector>

#include "focalis/errors.hpp"

namespace focalis {

/// Dense univariate polynomial; c[i] is the coefficient of x^i.
/// The coefficient type needs R(0), R(1), + - * and is_zero(R).
template <class R>
class UPoly {
 public:
  UPoly() = default;
  UPoly(R a) {  // NOLINT
    if (!is_zero(a)) c_.push_back(std::move(a));
  }
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(R a, int k) {
    if (is_zero(a)) return {};
    std::vector<R> v(k + 1, R(0));
    v[k] = std::move(a);
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : R(0); }
  const R& lead() const { return c_.back(); }

  /// Order of vanishing at 0; -1 for the zero polynomial.
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  template <class S>
  S eval(const S& x) const {
    S acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + S(c_[i]);
    return acc;
  }

  UPoly derivative() const {
    std::vector<R> v;
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(R(static_cast<long>(i)) * c_[i]);
    return UPoly(std::move(v));
  }

  template <class Fn>
  auto map(Fn fn) const -> UPoly<decltype(fn(std::declval<R>()))> {
    using S = decltype(fn(std::declval<R>()));
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(fn(a));
    return UPoly<S>(std::move(v));
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const R& s) const {
    std::vector<R> v = c_;
    for (auto& a : v) a = a * s;
    return UPoly(std::move(v));
  }
  UPoly shifted(int k) const {
    if (zero()) return {};
    std::vector<R> v(k, R(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).zero(); }

  std::string str(const std::string& var = "x") const {
    if (zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_str(c_[i]) + ")";
      if (i >= 1) s += "*" + var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  template <class T>
  static std::string to_str(const T& t) {
    return t.str();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const UPoly<R>& p) {
  return p.zero();
}
template <class R>
UPoly<R> zero_like(const UPoly<R>&) {
  return {};
}
template <class R>
UPoly<R> one_like(const UPoly<R>&) {
  return UPoly<R>(R(1));
}

/// Division with remainder over a field.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<F> q(std::max(0, a.degree() - b.degree() + 1), F(0));
  UPoly<F> r = a;
  F inv = F(1) / b.lead();
  while (!r.zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    F t = r.lead() * inv;
    q[k] = t;
    r -= b.scaled(t).shifted(k);
  }
  return {UPoly<F>(std::move(q)), r};
}

/// Division from the top by exact leading-coefficient division; works over
/// integral domains with an exact_div for R. Throws InexactDivision when b
/// does not divide a.
template <class R>
UPoly<R> exact_div(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.zero()) throw DivisionByZero("polynomial division by zero");
  if (a.zero()) return {};
  if (a.degree() < b.degree()) throw InexactDivision("polynomial degree too small");
  std::vector<R> q(a.degree() - b.degree() + 1, R(0));
  UPoly<R> r = a;
  while (!r.zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    R t = exact_div(r.lead(), b.lead());
    q[k] = t;
    r -= b.scaled(t).shifted(k);
  }
  if (!r.zero()) throw InexactDivision("polynomial does not divide");
  return UPoly<R>(std::move(q));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
UPoly<R> prem(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.zero()) throw DivisionByZero("pseudo-remainder by zero");
  UPoly<R> r = a;
  int db = b.degree();
  int e = a.degree() - db + 1;
  if (e <= 0) return r;
  const R& lb = b.lead();
  while (!r.zero() && r.degree() >= db) {
    int k = r.degree() - db;
    R lr = r.lead();
    r = r.scaled(lb) - b.scaled(lr).shifted(k);
    --e;
  }
  R f(1);
  for (int i = 0; i < e; ++i) f = f * lb;
  return r.scaled(f);
}

template <class F>
UPoly<F> monic(const UPoly<F>& p) {
  if (p.zero()) return p;
  return p.scaled(F(1) / p.lead());
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Yun's squarefree decomposition: returns monic f_1, f_2, ... with
/// p = lc * prod f_i^i (characteristic 0).
template <class F>
std::vector<UPoly<F>> squarefree_decomposition(const UPoly<F>& p) {
  std::vector<UPoly<F>> out;
  if (p.degree() <= 0) return out;
  UPoly<F> dp = p.derivative();
  UPoly<F> a = gcd(p, dp);
  UPoly<F> b = divmod(p, a).first;
  UPoly<F> c = divmod(dp, a).first;
  UPoly<F> d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly<F> g = gcd(b, d);
    out.push_back(monic(g));
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  if (p.degree() <= 0) return UPoly<F>(F(1));
  return monic(divmod(p, gcd(p, p.derivative())).first);
}

}  // namespace focalis
