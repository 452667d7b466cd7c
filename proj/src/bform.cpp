#include "focalis/bform.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdio>

namespace focalis {

namespace {

constexpr unsigned kPolishBits = 256;

using cld = std::complex<long double>;

struct MpfComplex {
  mpf_class re{0, kPolishBits};
  mpf_class im{0, kPolishBits};
};

MpfComplex mul(const MpfComplex& a, const MpfComplex& b) {
  MpfComplex r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

MpfComplex add(const MpfComplex& a, const MpfComplex& b) {
  MpfComplex r;
  r.re = a.re + b.re;
  r.im = a.im + b.im;
  return r;
}

MpfComplex divide(const MpfComplex& a, const MpfComplex& b) {
  MpfComplex r;
  mpf_class den(b.re * b.re + b.im * b.im, kPolishBits);
  if (den == 0) return a;
  r.re = (a.re * b.re + a.im * b.im) / den;
  r.im = (a.im * b.re - a.re * b.im) / den;
  return r;
}

/// Newton refinement in high precision for a polynomial with rational
/// coefficients (ascending order).
MpfComplex polish(const std::vector<Rat>& c, cld z0) {
  std::vector<mpf_class> cf;
  for (const auto& a : c) cf.emplace_back(a.value(), kPolishBits);
  MpfComplex z;
  z.re = mpf_class(static_cast<double>(z0.real()), kPolishBits);
  z.im = mpf_class(static_cast<double>(z0.imag()), kPolishBits);
  int n = static_cast<int>(c.size()) - 1;
  for (int it = 0; it < 60; ++it) {
    MpfComplex p, dp;
    for (int i = n; i >= 0; --i) {
      dp = add(mul(dp, z), p);
      p = mul(p, z);
      p.re += cf[i];
    }
    MpfComplex step = divide(p, dp);
    z.re -= step.re;
    z.im -= step.im;
    mpf_class mag = abs(step.re) + abs(step.im);
    mpf_class scale = abs(z.re) + abs(z.im) + 1;
    if (mag < scale * mpf_class(1e-70, kPolishBits)) break;
  }
  return z;
}

mpz_class round_mpf(const mpf_class& x) {
  mpf_class h(x + (x < 0 ? -0.5 : 0.5), kPolishBits);
  mpz_class r(h);  // truncation toward zero
  return r;
}

/// Integer primitive multiple of p.
UPoly<Rat> integer_primitive(const UPoly<Rat>& p) {
  mpz_class l = 1;
  for (const auto& a : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
  mpz_class g = 0;
  for (const auto& a : p.coeffs()) {
    mpz_class n = a.num() * (l / a.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rat s(l, g);
  if ((p.lead() * s).sign() < 0) s = -s;
  return p.scaled(s);
}

std::vector<cld> numeric_roots_rat(const UPoly<Rat>& p) {
  std::vector<cld> c;
  for (const auto& a : p.coeffs()) c.emplace_back(static_cast<long double>(a.to_double()), 0.0L);
  return numeric_roots(c);
}

FormRoot affine_root(QExt x, int mult) {
  FormRoot r;
  r.exact = true;
  r.approx = std::complex<double>(x.to_complex());
  r.x = std::move(x);
  r.y = QExt(1);
  r.multiplicity = mult;
  return r;
}

FormRoot numeric_root(std::complex<double> z, int mult) {
  FormRoot r;
  r.exact = false;
  r.approx = z;
  r.multiplicity = mult;
  return r;
}

std::string poly_str(const UPoly<Rat>& p) { return p.str("x"); }

void roots_of_squarefree(UPoly<Rat> h, int mult, RootReport& out) {
  while (h.degree() >= 1) {
    h = integer_primitive(h);
    if (h.degree() == 1) {
      out.roots.push_back(affine_root(QExt(-h.coeff(0) / h.coeff(1)), mult));
      return;
    }
    if (h.degree() == 2) {
      Rat a = h.coeff(2), b = h.coeff(1), c = h.coeff(0);
      QExt sq = QExt::sqrt(b * b - Rat(4) * a * c);
      QExt den(Rat(2) * a);
      out.roots.push_back(affine_root((QExt(-b) + sq) / den, mult));
      out.roots.push_back(affine_root((QExt(-b) - sq) / den, mult));
      return;
    }
    auto approx = numeric_roots_rat(h);
    std::vector<MpfComplex> fine;
    for (auto z : approx) fine.push_back(polish(h.coeffs(), z));
    mpz_class lc = h.lead().num();
    bool split = false;
    for (const auto& z : fine) {
      mpf_class scaled(z.re * mpf_class(lc, kPolishBits), kPolishBits);
      Rat cand(round_mpf(scaled), lc);
      if (h.eval(cand).is_zero()) {
        out.roots.push_back(affine_root(QExt(cand), mult));
        h = divmod(h, UPoly<Rat>(std::vector<Rat>{-cand, Rat(1)})).first;
        split = true;
        break;
      }
    }
    if (split) continue;
    for (size_t i = 0; i < fine.size() && !split; ++i) {
      for (size_t j = i + 1; j < fine.size() && !split; ++j) {
        MpfComplex s = add(fine[i], fine[j]);
        MpfComplex pr = mul(fine[i], fine[j]);
        mpf_class ls(s.re * mpf_class(lc, kPolishBits), kPolishBits);
        mpf_class lp(pr.re * mpf_class(lc, kPolishBits), kPolishBits);
        Rat rs(round_mpf(ls), lc), rp(round_mpf(lp), lc);
        UPoly<Rat> q(std::vector<Rat>{rp, -rs, Rat(1)});
        auto [quo, rem] = divmod(h, q);
        if (rem.zero()) {
          roots_of_squarefree(q, mult, out);
          h = quo;
          split = true;
        }
      }
    }
    if (split) continue;
    out.numeric_factors.push_back(poly_str(h));
    for (const auto& z : fine)
      out.roots.push_back(numeric_root({z.re.get_d(), z.im.get_d()}, mult));
    return;
  }
}

void roots_of_squarefree(UPoly<QExt> h, int mult, RootReport& out) {
  if (h.degree() == 1) {
    out.roots.push_back(affine_root(-h.coeff(0) / h.coeff(1), mult));
    return;
  }
  if (h.degree() == 2) {
    QExt a = h.coeff(2), b = h.coeff(1), c = h.coeff(0);
    auto sq = (b * b - QExt(4) * a * c).try_sqrt();
    if (sq) {
      out.roots.push_back(affine_root((-b + *sq) / (QExt(2) * a), mult));
      out.roots.push_back(affine_root((-b - *sq) / (QExt(2) * a), mult));
      return;
    }
  }
  std::vector<cld> c;
  std::string fs;
  for (const auto& a : h.coeffs()) c.push_back(a.to_complex());
  out.numeric_factors.push_back(h.str("x"));
  for (auto z : numeric_roots(c)) out.roots.push_back(numeric_root(std::complex<double>(z), mult));
}

template <class F>
RootReport roots_generic(const BForm<F>& f) {
  if (f.is_zero()) throw IdenticallyZero("roots of the identically zero form");
  RootReport out;
  out.squarefree_degree = f.squarefree_degree();
  if (int m = f.infinity_multiplicity(); m > 0) {
    FormRoot r;
    r.x = QExt(1);
    r.y = QExt(0);
    r.approx = {INFINITY, 0.0};
    r.multiplicity = m;
    out.roots.push_back(r);
  }
  auto parts = squarefree_decomposition(f.affine());
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    roots_of_squarefree(parts[i], static_cast<int>(i) + 1, out);
  }
  return out;
}

}  // namespace

std::vector<cld> numeric_roots(const std::vector<cld>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<cld> z;
  if (n < 1) return z;
  std::vector<cld> a(coeffs.size());
  for (int i = 0; i <= n; ++i) a[i] = coeffs[i] / coeffs[n];
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
  bound += 1;
  for (int k = 0; k < n; ++k) {
    long double ang = 2.0L * M_PIl * k / n + 0.4L;
    z.emplace_back(0.5L * bound * std::cos(ang), 0.5L * bound * std::sin(ang));
  }
  auto eval = [&](cld x, cld& d) {
    cld p = 0;
    d = 0;
    for (int i = n; i >= 0; --i) {
      d = d * x + p;
      p = p * x + a[i];
    }
    return p;
  };
  for (int it = 0; it < 800; ++it) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      cld d;
      cld p = eval(z[k], d);
      if (p == cld(0)) continue;
      cld ratio = p / d;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

RootReport bform_roots(const BForm<Rat>& f) { return roots_generic(f); }
RootReport bform_roots(const BForm<QExt>& f) { return roots_generic(f); }

std::string FormRoot::str() const {
  if (exact) return "(" + x.str() + ":" + y.str() + ")";
  char buf[96];
  std::snprintf(buf, sizeof buf, "(~%.12g%+.12gi:1)", approx.real(), approx.imag());
  return buf;
}

}  // namespace focalis
