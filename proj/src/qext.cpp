#include "focalis/qext.hpp"

#include <cmath>

#include "focalis/errors.hpp"

namespace focalis {

QExt::QExt(Rat a, Rat b, mpz_class d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  reduce();
}

void QExt::normalize() {
  if (b_.is_zero()) d_ = 0;
}

void QExt::reduce() {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ == 0) throw ExtensionConflict("irrational part with zero radicand");
  mpz_class root;
  mpz_class k = square_reduce(d_, &root);
  b_ *= Rat(root, 1);
  d_ = k;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

QExt QExt::sqrt(const Rat& r) {
  if (r.is_zero()) return QExt(0);
  // sqrt(n/m) = sqrt(n*m)/m
  mpz_class nm = r.num() * r.den();
  mpz_class root;
  mpz_class k = square_reduce(nm, &root);
  Rat coeff(root, r.den());
  if (k == 1) return QExt(coeff);
  return QExt(Rat(0), coeff, k);
}

std::optional<QExt> QExt::try_sqrt() const {
  if (is_rational()) {
    QExt s = sqrt(a_);
    return s;
  }
  // (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 = (a +- sqrt(N)) / 2, N = norm.
  Rat n = norm();
  if (n.sign() < 0) return std::nullopt;
  QExt sn = sqrt(n);
  if (!sn.is_rational()) return std::nullopt;
  for (int sg : {1, -1}) {
    Rat x2 = (a_ + Rat(sg) * sn.rational()) / Rat(2);
    if (x2.is_zero()) continue;
    QExt x = sqrt(x2);
    if (!x.is_rational()) continue;
    Rat y = b_ / (Rat(2) * x.rational());
    QExt cand(x.rational(), y, d_);
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

Rat QExt::rational() const {
  if (!is_rational()) throw ExtensionConflict("value " + str() + " is not rational");
  return a_;
}

QExt QExt::conj() const {
  QExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rat QExt::norm() const {
  if (is_rational()) return a_ * a_;
  return a_ * a_ - Rat(d_, 1) * b_ * b_;
}

QExt QExt::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt d)");
  if (is_rational()) return QExt(a_.inverse());
  Rat n = norm();
  QExt c = conj();
  c.a_ /= n;
  c.b_ /= n;
  c.normalize();
  return c;
}

void QExt::align(QExt& o) {
  if (o.is_rational() || is_rational() || o.d_ == d_) {
    if (is_rational() && !o.is_rational()) d_ = o.d_;
    if (o.is_rational() && !is_rational()) o.d_ = d_;
    return;
  }
  mpz_class prod = d_ * o.d_;
  if (!is_perfect_square(prod)) {
    throw ExtensionConflict("cannot combine sqrt(" + d_.get_str() + ") with sqrt(" +
                            o.d_.get_str() + ")");
  }
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), prod.get_mpz_t());
  // sqrt(d2) = r/d1 * sqrt(d1)
  o.b_ *= Rat(r, d_);
  o.d_ = d_;
}

QExt QExt::operator-() const {
  QExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QExt& QExt::operator+=(const QExt& o0) {
  QExt o = o0;
  align(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QExt& QExt::operator-=(const QExt& o0) {
  QExt o = o0;
  align(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QExt& QExt::operator*=(const QExt& o0) {
  if (o0.is_rational()) {
    a_ *= o0.a_;
    b_ *= o0.a_;
    normalize();
    return *this;
  }
  QExt o = o0;
  align(o);
  Rat na = a_ * o.a_ + Rat(d_, 1) * b_ * o.b_;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  normalize();
  return *this;
}

bool operator==(const QExt& x, const QExt& y) { return (x - y).is_zero(); }

std::complex<long double> QExt::to_complex() const {
  long double a = static_cast<long double>(a_.to_double());
  if (is_rational()) return {a, 0.0L};
  long double b = static_cast<long double>(b_.to_double());
  long double dd = static_cast<long double>(d_.get_d());
  if (dd >= 0) return {a + b * std::sqrt(dd), 0.0L};
  return {a, b * std::sqrt(-dd)};
}

std::string QExt::str() const {
  if (is_rational()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str();
  Rat b = b_;
  if (b.sign() < 0) {
    s += "-";
    b = -b;
  } else if (!s.empty()) {
    s += "+";
  }
  if (!b.is_one()) s += b.str() + "*";
  s += "sqrt(" + d_.get_str() + ")";
  return s;
}

}  // namespace focalis
