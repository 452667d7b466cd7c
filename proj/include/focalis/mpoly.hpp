#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "focalis/errors.hpp"
#include "focalis/upoly.hpp"

namespace focalis {

using Exponent = std::vector<int>;

/// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

int variable_rank(const std::string& name);
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Sparse multivariate polynomial over a field F in named variables.
/// Zero coefficients are never stored. Variables are kept in the fixed
/// order u, v, s, lam, mu (then anything else alphabetically).
template <class F>
class MPoly {
 public:
  using Terms = std::map<Exponent, F, GrlexLess>;

  MPoly() = default;
  MPoly(int c) : MPoly(F(c)) {}  // NOLINT
  MPoly(F c) {                   // NOLINT
    if (!is_zero(c)) terms_.emplace(Exponent{}, std::move(c));
  }
  MPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)), terms_() {
    for (auto& [e, c] : terms)
      if (!is_zero(c)) terms_.emplace(e, c);
  }

  static MPoly var(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponent{1}, F(1));
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }
  F constant_value() const {
    for (auto& [e, c] : terms_) {
      bool z = true;
      for (int k : e) z = z && k == 0;
      if (z) return c;
    }
    return F(0);
  }

  int total_degree() const {
    if (zero()) return -1;
    int d = 0;
    for (int k : terms_.rbegin()->first) d += k;
    return d;
  }
  int degree_in(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) return zero() ? -1 : 0;
    int d = zero() ? -1 : 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }
  const F& lead_coeff() const { return terms_.rbegin()->second; }
  const Exponent& lead_exp() const { return terms_.rbegin()->first; }

  /// Same polynomial over a larger ordered variable list.
  MPoly with_vars(const std::vector<std::string>& nv) const {
    if (nv == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(nv.begin(), nv.end(), vars_[i]);
      if (it == nv.end()) throw Error("VariableError", "variable " + vars_[i] + " dropped");
      pos[i] = static_cast<int>(it - nv.begin());
    }
    MPoly r;
    r.vars_ = nv;
    for (auto& [e, c] : terms_) {
      Exponent ne(nv.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  /// Drops variables that do not occur.
  MPoly compact() const {
    std::vector<std::string> nv;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i) {
      bool used = false;
      for (auto& [e, c] : terms_) used = used || e[i] > 0;
      if (used) {
        nv.push_back(vars_[i]);
        keep.push_back(i);
      }
    }
    if (nv.size() == vars_.size()) return *this;
    MPoly r;
    r.vars_ = nv;
    for (auto& [e, c] : terms_) {
      Exponent ne;
      for (size_t i : keep) ne.push_back(e[i]);
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = add(*this, o, false); }
  MPoly& operator-=(const MPoly& o) { return *this = add(*this, o, true); }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return add(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return add(a, b, true); }
  friend MPoly operator*(const MPoly& a0, const MPoly& b0) {
    if (a0.zero() || b0.zero()) return {};
    auto nv = merge_variables(a0.vars_, b0.vars_);
    MPoly a = a0.with_vars(nv), b = b0.with_vars(nv);
    MPoly r;
    r.vars_ = nv;
    for (auto& [ea, ca] : a.terms_) {
      for (auto& [eb, cb] : b.terms_) {
        Exponent e(nv.size());
        for (size_t i = 0; i < nv.size(); ++i) e[i] = ea[i] + eb[i];
        F prod = ca * cb;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          r.terms_.emplace(std::move(e), std::move(prod));
        } else {
          it->second = it->second + prod;
          if (is_zero(it->second)) r.terms_.erase(it);
        }
      }
    }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const F& s) const {
    if (is_zero(s)) return {};
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = c * s;
    return r;
  }
  MPoly pow(int k) const {
    MPoly r(F(1)), b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).zero(); }

  MPoly differentiate(const std::string& name) const {
    int i = index_of(name);
    MPoly r;
    r.vars_ = vars_;
    if (i < 0) return r;
    for (auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent ne = e;
      ne[i] -= 1;
      r.terms_.emplace(std::move(ne), c * F(e[i]));
    }
    return r;
  }

  /// Evaluates with values given per variable name; missing names throw.
  template <class S, class Lookup>
  S eval(Lookup&& value_of) const {
    std::vector<S> vals;
    for (auto& n : vars_) vals.push_back(value_of(n));
    S acc(0);
    for (auto& [e, c] : terms_) {
      S t(c);
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t = t * vals[i];
      acc = acc + t;
    }
    return acc;
  }

  /// Substitutes `name` by the polynomial `q`.
  MPoly substitute(const std::string& name, const MPoly& q) const {
    int i = index_of(name);
    if (i < 0) return *this;
    MPoly r;
    for (auto& [e, c] : terms_) {
      Exponent rest = e;
      int k = rest[i];
      rest[i] = 0;
      MPoly mono(vars_, Terms{{rest, c}});
      r += mono * q.pow(k);
    }
    return r;
  }

  /// Coefficients as a polynomial in `name` (coefficients free of it).
  UPoly<MPoly> as_univariate(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) return UPoly<MPoly>(*this);
    std::vector<MPoly> cs(degree_in(name) + 1);
    for (auto& [e, c] : terms_) {
      Exponent rest = e;
      int k = rest[i];
      rest[i] = 0;
      MPoly& slot = cs[k];
      if (slot.vars_.empty()) slot.vars_ = vars_;
      slot.terms_.emplace(std::move(rest), c);
    }
    for (auto& p : cs) p = p.compact();
    return UPoly<MPoly>(std::move(cs));
  }
  static MPoly from_univariate(const UPoly<MPoly>& p, const std::string& name) {
    MPoly r;
    MPoly x = var(name);
    MPoly xk(F(1));
    for (int k = 0; k <= p.degree(); ++k) {
      r += p.coeff(k) * xk;
      xk = xk * x;
    }
    return r;
  }

  /// Human-readable form in grlex order, highest term first, e.g.
  /// "u^2 - 3/2*v".
  std::string str() const {
    if (zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      F mag = c;
      bool neg = sign_of(c) < 0;
      if (neg) mag = -mag;
      std::string cs = coeff_str(mag);
      std::string body;
      if (mono.empty()) body = cs;
      else if (cs == "1") body = mono;
      else body = cs + "*" + mono;
      if (first) s += neg ? "-" + body : body;
      else s += neg ? " - " + body : " + " + body;
      first = false;
    }
    return s;
  }

 private:
  int index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }
  static MPoly add(const MPoly& a0, const MPoly& b0, bool sub) {
    auto nv = merge_variables(a0.vars_, b0.vars_);
    MPoly r = a0.with_vars(nv);
    MPoly b = b0.with_vars(nv);
    for (auto& [e, c] : b.terms_) {
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, sub ? F(-c) : c);
      } else {
        it->second = sub ? it->second - c : it->second + c;
        if (is_zero(it->second)) r.terms_.erase(it);
      }
    }
    return r;
  }
  static int sign_of(const F& c) {
    if constexpr (requires { c.sign(); }) return c.sign();
    else return 1;
  }
  static std::string coeff_str(const F& c) {
    std::string s = c.str();
    if constexpr (!requires { c.sign(); }) s = "(" + s + ")";
    return s;
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

template <class F>
bool is_zero(const MPoly<F>& p) {
  return p.zero();
}

template <class F>
MPoly<F> make_monic(const MPoly<F>& p) {
  if (p.zero()) return p;
  return p.scaled(F(1) / p.lead_coeff());
}

/// Multivariate division; throws InexactDivision on a nonzero remainder.
template <class F>
MPoly<F> exact_div(const MPoly<F>& a0, const MPoly<F>& b0) {
  if (b0.zero()) throw DivisionByZero("multivariate division by zero");
  if (a0.zero()) return {};
  if (b0.is_constant()) return a0.scaled(F(1) / b0.constant_value());
  auto nv = merge_variables(a0.vars(), b0.vars());
  MPoly<F> r = a0.with_vars(nv), b = b0.with_vars(nv);
  MPoly<F> q;
  const Exponent& lb = b.lead_exp();
  F inv = F(1) / b.lead_coeff();
  while (!r.zero()) {
    const Exponent& lr = r.lead_exp();
    Exponent e(nv.size());
    for (size_t i = 0; i < nv.size(); ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) throw InexactDivision("polynomial does not divide exactly");
    }
    MPoly<F> t(nv, typename MPoly<F>::Terms{{e, r.lead_coeff() * inv}});
    q += t;
    r -= t * b;
  }
  return q;
}

template <class F>
MPoly<F> poly_gcd(const MPoly<F>& p, const MPoly<F>& q);

namespace detail {

template <class F>
MPoly<F> content_of(const UPoly<MPoly<F>>& p) {
  MPoly<F> g;
  for (const auto& c : p.coeffs()) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.zero()) break;
  }
  return g;
}

template <class F>
UPoly<MPoly<F>> primitive(const UPoly<MPoly<F>>& p) {
  if (p.zero()) return p;
  MPoly<F> c = content_of(p);
  return p.map([&](const MPoly<F>& a) { return exact_div(a, c); });
}

}  // namespace detail

/// Greatest common divisor, normalized to leading coefficient 1 (grlex).
/// Recursive content / primitive-part pseudo-remainder sequence.
template <class F>
MPoly<F> poly_gcd(const MPoly<F>& p, const MPoly<F>& q) {
  if (p.zero()) return make_monic(q);
  if (q.zero()) return make_monic(p);
  if (p.is_constant() || q.is_constant()) return MPoly<F>(F(1));
  auto nv = merge_variables(p.vars(), q.vars());
  std::string x;
  for (auto& n : nv) {
    if (p.degree_in(n) > 0 || q.degree_in(n) > 0) {
      x = n;
      break;
    }
  }
  if (p.degree_in(x) == 0) return poly_gcd(p, detail::content_of(q.as_univariate(x)));
  if (q.degree_in(x) == 0) return poly_gcd(detail::content_of(p.as_univariate(x)), q);
  auto up = p.as_univariate(x), uq = q.as_univariate(x);
  MPoly<F> cg = poly_gcd(detail::content_of(up), detail::content_of(uq));
  auto a = detail::primitive(up), b = detail::primitive(uq);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.zero() && b.degree() > 0) {
    auto r = prem(a, b);
    a = std::move(b);
    b = detail::primitive(r);
  }
  MPoly<F> g;
  if (b.zero()) g = MPoly<F>::from_univariate(a, x);
  else g = MPoly<F>(F(1));  // b a nonzero constant: coprime parts
  return make_monic(g * cg).compact();
}

}  // namespace focalis
