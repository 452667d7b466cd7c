#include <random>

#include "doctest.h"
#include "focalis/bform.hpp"
#include "focalis/mpoly.hpp"
#include "focalis/qext.hpp"
#include "focalis/rfunc.hpp"

using namespace focalis;

namespace {

Poly U() { return Poly::var("u"); }
Poly V() { return Poly::var("v"); }
Poly L() { return Poly::var("lam"); }
Poly M() { return Poly::var("mu"); }

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  Poly p;
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_deg);
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    int a = deg(rng), b = deg(rng);
    if (a + b > max_deg) b = max_deg - a;
    p += U().pow(a) * V().pow(b) * Poly(Rat(coef(rng)));
  }
  return p;
}

UPoly<Rat> up(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UPoly<Rat>(v);
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  Rat a = Rat::parse("6/4");
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  CHECK((Rat(1) / Rat(-3)).den() == 3);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
  CHECK(Rat::parse("-3/2") < Rat(0));
}

TEST_CASE("quadratic extension arithmetic") {
  QExt r2 = QExt::sqrt(Rat(2));
  CHECK(!r2.is_rational());
  CHECK(r2 * r2 == QExt(2));
  CHECK(r2.d() == 2);
  QExt r8 = QExt::sqrt(Rat(8));
  CHECK(r8 == QExt(Rat(2)) * r2);
  QExt x = QExt(Rat(1)) + r2;
  CHECK(x * x.inverse() == QExt(1));
  CHECK(x.norm() == Rat(-1));
  CHECK(QExt::sqrt(Rat(9, 4)).is_rational());
  CHECK(QExt::sqrt(Rat(9, 4)).rational() == Rat(3, 2));
  CHECK_THROWS_AS(r2 + QExt::sqrt(Rat(3)), ExtensionConflict);
  CHECK(r2.str() == "sqrt(2)");
  CHECK((QExt(Rat(1)) - r2 * QExt(Rat(3, 2))).str() == "1-3/2*sqrt(2)");
  auto s = (QExt(Rat(3)) + QExt(Rat(2)) * r2).try_sqrt();  // (1 + sqrt2)^2
  REQUIRE(s);
  CHECK(*s * *s == QExt(Rat(3)) + QExt(Rat(2)) * r2);
}

TEST_CASE("poly_gcd examples") {
  Poly x = L();
  CHECK(poly_gcd(x * x, x) == x);
  Poly p = U() * Poly(Rat(3)) + V();
  CHECK(poly_gcd(p, Poly()) == make_monic(p));
  Poly a = L() * L() - M() * M();
  Poly b = L() * L() - Poly(Rat(2)) * L() * M() + M() * M();
  Poly g = poly_gcd(a, b);
  // division oracle: g divides both, and a/g, b/g share no factor with g's root
  CHECK_NOTHROW(exact_div(a, g));
  CHECK_NOTHROW(exact_div(b, g));
  CHECK(g == L() - M());
}

TEST_CASE("poly_gcd of products contains the common factor (100 random triples)") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    Poly p = random_poly(rng, 2), q = random_poly(rng, 2), g = random_poly(rng, 2);
    if (p.zero() || q.zero() || g.zero()) continue;
    Poly h = poly_gcd(p * g, q * g);
    CHECK_NOTHROW(exact_div(h, g));
    CHECK_NOTHROW(exact_div(p * g, h));
    CHECK_NOTHROW(exact_div(q * g, h));
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("differentiate: examples, linearity and Leibniz") {
  CHECK((U() * U() * V()).differentiate("u") == Poly(Rat(2)) * U() * V());
  CHECK(Poly(Rat(5)).differentiate("v").zero());
  Poly s = (U() + V()) * (U() + V());
  CHECK(s.differentiate("u") == Poly(Rat(2)) * (U() + V()));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Poly p = random_poly(rng, 3), q = random_poly(rng, 3);
    for (const char* x : {"u", "v"}) {
      CHECK((p + q).differentiate(x) == p.differentiate(x) + q.differentiate(x));
      CHECK((p * q).differentiate(x) == p.differentiate(x) * q + p * q.differentiate(x));
    }
  }
}

TEST_CASE("polynomial printing is grlex, highest first") {
  Poly p = U() * U() - Poly(Rat(3, 2)) * V();
  CHECK(p.str() == "u^2 - 3/2*v");
  CHECK((Poly(Rat(-1)) + U() * V()).str() == "u*v - 1");
}

TEST_CASE("rational functions reduce and differentiate") {
  RFunc f(U() * U() - V() * V(), U() - V());
  CHECK(f.is_polynomial());
  CHECK(f == RFunc(U() + V()));
  RFunc g(Poly(Rat(1)), U());
  CHECK(g.differentiate("u") == RFunc(Poly(Rat(-1)), U() * U()));
  CHECK(g.eval(Rat(2), Rat(0)) == Rat(1, 2));
  CHECK_THROWS_AS(g.eval(Rat(0), Rat(1)), DivisionByZero);
  RFunc h(Poly(Rat(2)) * U(), Poly(Rat(4)) * V());
  CHECK(h.den() == V());
}

TEST_CASE("bform_gcd examples") {
  // lam*mu and lam^2
  auto lm = BForm<Rat>::from_coeffs({0, 1, 0});
  auto l2 = BForm<Rat>::from_coeffs({1, 0, 0});
  auto g = bform_gcd<Rat>({lm, l2});
  CHECK(g.degree() == 1);
  CHECK(g == BForm<Rat>::from_coeffs({1, 0}));
  CHECK(bform_gcd<Rat>({BForm<Rat>(), BForm<Rat>(), BForm<Rat>()}).is_zero());
  auto a = BForm<Rat>::from_coeffs({1, 0, -1});      // lam^2 - mu^2
  auto b = BForm<Rat>::from_coeffs({1, 0, -1, 0});   // lam^3 - lam mu^2
  auto h = bform_gcd<Rat>({a, b});
  CHECK(h == a);
  CHECK(bform_divides(h, a));
  CHECK(bform_divides(h, b));
  // infinity root merged: mu*lam and mu^2 share mu
  auto m1 = BForm<Rat>::from_coeffs({0, 1, 0});
  auto m2 = BForm<Rat>::from_coeffs({0, 0, 1});
  auto hm = bform_gcd<Rat>({m1, m2});
  CHECK(hm.degree() == 1);
  CHECK(hm.infinity_multiplicity() == 1);
}

TEST_CASE("bform_gcd divides every input (random)") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::vector<BForm<Rat>> fs;
    std::vector<Rat> common;
    int n = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i <= n; ++i) common.push_back(Rat(static_cast<long>(rng() % 7) - 3));
    auto c = BForm<Rat>::from_coeffs(common);
    for (int k = 0; k < 3; ++k) {
      std::vector<Rat> co;
      for (int i = 0; i <= 2; ++i) co.push_back(Rat(static_cast<long>(rng() % 9) - 4));
      fs.push_back(bform_mul(c, BForm<Rat>::from_coeffs(co)));
    }
    auto g = bform_gcd(fs);
    for (auto& f : fs) CHECK(bform_divides(g, f));
    if (!c.is_zero()) CHECK(bform_divides(c, g));
  }
}

TEST_CASE("bform_roots: split linear factors") {
  // lam*mu*(lam - mu)
  auto f = BForm<Rat>::from_coeffs({0, 1, -1, 0});
  auto r = bform_roots(f);
  CHECK(r.squarefree_degree == 3);
  REQUIRE(r.roots.size() == 3);
  for (auto& root : r.roots) {
    REQUIRE(root.exact);
    auto c = f.coeffs();
    // substitute (x:y) exactly
    QExt acc(0);
    for (int i = 0; i <= f.degree(); ++i) {
      QExt t(c[i]);
      for (int k = 0; k < f.degree() - i; ++k) t *= root.x;
      for (int k = 0; k < i; ++k) t *= root.y;
      acc += t;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("bform_roots: irrational quadratic") {
  auto f = BForm<Rat>::from_coeffs({1, 0, -2});  // lam^2 - 2 mu^2
  auto r = bform_roots(f);
  REQUIRE(r.roots.size() == 2);
  for (auto& root : r.roots) {
    CHECK(root.exact);
    CHECK(root.x.d() == 2);
    CHECK((root.x * root.x - QExt(2)).is_zero());
  }
  CHECK_THROWS_AS(bform_roots(BForm<Rat>()), IdenticallyZero);
}

TEST_CASE("bform_roots: rational and quadratic factors hidden in a sextic") {
  // (3x - 2)(x^2 - 3)(x^3 - x - 1) times mu^0, plus a double root at 5
  UPoly<Rat> p = up({-2, 3}) * up({-3, 0, 1}) * up({-1, -1, 0, 1}) * up({-5, 1}) * up({-5, 1});
  BForm<Rat> f(p.degree() + 1, p);  // one root at infinity
  auto r = bform_roots(f);
  CHECK(r.squarefree_degree == 8);
  int exact = 0, approx = 0;
  for (auto& root : r.roots) {
    if (root.exact) {
      ++exact;
      if (root.y.is_zero()) continue;
      QExt val(0);
      for (int k = p.degree(); k >= 0; --k) val = val * root.x + QExt(p.coeff(k));
      CHECK(val.is_zero());
      if (root.x == QExt(5)) CHECK(root.multiplicity == 2);
    } else {
      ++approx;
      std::complex<long double> z(root.approx.real(), root.approx.imag()), acc = 0;
      UPoly<Rat> cub = up({-1, -1, 0, 1});
      for (int k = 3; k >= 0; --k) acc = acc * z + (long double)cub.coeff(k).to_double();
      CHECK(std::abs(acc) / (1 + std::abs(z) * std::abs(z) * std::abs(z)) < 1e-9);
    }
  }
  CHECK(exact == 5);
  CHECK(approx == 3);
  CHECK(r.numeric_factors.size() == 1);
}

TEST_CASE("upoly squarefree decomposition") {
  UPoly<Rat> p = up({-1, 1}) * up({-1, 1}) * up({2, 1});
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == up({2, 1}));
  CHECK(parts[1] == up({-1, 1}));
  CHECK(squarefree_part(p).degree() == 2);
}
