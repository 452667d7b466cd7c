#include "focalis/rfunc.hpp"

namespace focalis {

Rat eval_poly(const Poly& p, const Rat& u, const Rat& v) {
  return p.eval<Rat>([&](const std::string& n) -> Rat {
    if (n == "u") return u;
    if (n == "v") return v;
    throw Error("VariableError", "cannot evaluate variable " + n);
  });
}

RFunc::RFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.zero()) throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void RFunc::reduce() {
  if (num_.zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rat lc = den_.lead_coeff();
  if (!lc.is_one()) {
    num_ = num_.scaled(lc.inverse());
    den_ = den_.scaled(lc.inverse());
  }
}

RFunc RFunc::operator-() const {
  RFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RFunc operator+(const RFunc& a, const RFunc& b) {
  if (a.den_ == b.den_) return RFunc(a.num_ + b.num_, a.den_);
  return RFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RFunc operator-(const RFunc& a, const RFunc& b) { return a + (-b); }

RFunc operator*(const RFunc& a, const RFunc& b) {
  if (a.zero() || b.zero()) return {};
  return RFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RFunc operator/(const RFunc& a, const RFunc& b) {
  if (b.zero()) throw DivisionByZero("rational function division by zero");
  return RFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RFunc RFunc::differentiate(const std::string& name) const {
  if (is_polynomial()) return RFunc(num_.differentiate(name).scaled(den_.constant_value().inverse()));
  return RFunc(num_.differentiate(name) * den_ - num_ * den_.differentiate(name), den_ * den_);
}

RFunc RFunc::substitute(const std::string& name, const RFunc& q) const {
  // Homogenize by the larger degree so that only polynomial substitution is needed.
  auto sub = [&](const Poly& p) {
    int d = p.degree_in(name);
    RFunc acc;
    auto coeffs = p.as_univariate(name);
    RFunc qk(1);
    for (int k = 0; k <= d; ++k) {
      acc += RFunc(coeffs.coeff(k)) * qk;
      qk *= q;
    }
    return acc;
  };
  return sub(num_) / sub(den_);
}

Rat RFunc::eval(const Rat& u, const Rat& v) const {
  Rat d = eval_poly(den_, u, v);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes at sample point");
  return eval_poly(num_, u, v) / d;
}

bool RFunc::den_vanishes(const Rat& u, const Rat& v) const {
  if (den_.is_constant()) return false;
  return eval_poly(den_, u, v).is_zero();
}

std::string RFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace focalis
