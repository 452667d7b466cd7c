#include <doctest.h>

#include <random>

#include "focalis/focal.hpp"
#include "focalis/gallery.hpp"

using namespace focalis;

namespace {

PlaneFrame rows(const std::string& r0, const std::string& r1, const std::string& r2) {
  return parse_congruence("PLANECONGRUENCE v1\n" + r0 + "\n" + r1 + "\n" + r2 + "\n");
}

Matrix<Rat> completion(const Matrix<Rat>& a, std::pair<int, int> ij) {
  Matrix<Rat> m(5, 5);
  for (int c = 0; c < 5; ++c)
    for (int r = 0; r < 3; ++r) m(r, c) = a(r, c);
  m(3, ij.first) = Rat(1);
  m(4, ij.second) = Rat(1);
  return m;
}

}  // namespace

TEST_CASE("parse the delta frame") {
  PlaneFrame f = rows("1,0,0,0,0", "0,1,0,0,0", "0,0,1,u,v");
  CHECK(f == gallery_delta().frame);
  CHECK(f.A()(2, 3) == RFunc::var("u"));
  CHECK(f.is_polynomial());
  CHECK(f.total_degree() == 1);
}

TEST_CASE("entry grammar") {
  PlaneFrame f = rows("u^2 - 3/2*v, 0, 0, 0, 1", "0, 1, 0, 0, 0", "0, 0, 1, 0, 0");
  Poly p = f.A()(0, 0).num();
  Poly want = Poly::var("u") * Poly::var("u") - Poly::var("v").scaled(Rat(3, 2));
  CHECK(p == want);
  CHECK(p.str() == "u^2 - 3/2*v");
  PlaneFrame g = rows("-(u + 1)^2, 2/3, 0, 0, 0", "0, 1, 0, 0, 0", "0, 0, 1, 0, u*v");
  CHECK(eval_poly(g.A()(0, 0).num(), Rat(2), Rat(0)) == Rat(-9));
  CHECK(g.A()(0, 1) == RFunc(Rat(2, 3)));
  CHECK_THROWS_AS(rows("1/(u - v), 0, 0, 0, 1", "0, 1, 0, 0, 0", "0, 0, 1, 0, 0"), SyntaxError);
}

TEST_CASE("comments and blank lines") {
  PlaneFrame f = parse_congruence("# leading comment\nPLANECONGRUENCE v1\n\n# a\n1,0,0,0,0\n0,1,0,0,0  # tail\n0,0,1,u,v\n");
  CHECK(f == gallery_delta().frame);
}

TEST_CASE("syntax errors carry positions") {
  auto fails_at = [](const std::string& text, int line) {
    try {
      parse_congruence(text);
    } catch (const SyntaxError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() >= 1);
      return true;
    }
    return false;
  };
  CHECK(fails_at("PLANECONGRUENCE v2\n1,0,0,0,0\n0,1,0,0,0\n0,0,1,0,0\n", 1));
  CHECK(fails_at("PLANECONGRUENCE v1\n1,0,0,0\n0,1,0,0,0\n0,0,1,0,0\n", 2));
  CHECK(fails_at("PLANECONGRUENCE v1\n1,0,0,0,0\n0,1,0,0,0\n0,0,1,w,0\n", 4));
  CHECK(fails_at("PLANECONGRUENCE v1\n1,0,0,0,0\n0,1,0,0,0\n0,0,1,(u+,0\n", 4));
  CHECK(fails_at("PLANECONGRUENCE v1\n1,0,0,0,0\n0,1,0,0,0\n", 4));  // end of input
}

TEST_CASE("dependent rows") {
  CHECK_THROWS_AS(rows("1,0,0,0,0", "2,0,0,0,0", "0,0,1,u,v"), DegenerateFrame);
  CHECK_THROWS_AS(rows("1,u,0,0,0", "u,u^2,0,0,0", "0,0,1,u,v"), DegenerateFrame);
}

TEST_CASE("print and parse round trip") {
  for (const auto& it : gallery_items()) {
    auto text = print_congruence(it.frame, it.name);
    CHECK(parse_congruence(text) == it.frame);
    CHECK(print_congruence(parse_congruence(text), it.name) == text);
  }
}

TEST_CASE("validate") {
  for (const auto& it : gallery_items()) CHECK_NOTHROW(validate_frame(it.frame));
  CHECK_THROWS_AS(validate_frame(degenerate_constant_plane()), DegenerateCongruence);
  CHECK_THROWS_AS(validate_frame(degenerate_pencil_sweep()), DegenerateCongruence);
  // the pencil sweep's focal form also vanishes over Q(u, v)
  auto q = focal_form_symbolic(degenerate_pencil_sweep());
  CHECK(q.is_zero_matrix());
}

TEST_CASE("sampling") {
  PlaneFrame d = gallery_delta().frame;
  auto a = sample_points(d, 5, 42), b = sample_points(d, 5, 42);
  CHECK(a.size() == 5);
  CHECK(a == b);
  for (const auto& p : a) CHECK(admissible(d, p.u, p.v));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(a[i] == a[j]);

  Matrix<RFunc> am = gallery_delta().frame.A();
  am(0, 4) = RFunc(Poly(Rat(1)), Poly::var("u") - Poly::var("v"));
  PlaneFrame r(am);
  CHECK(r.singular_at(Rat(2), Rat(2)));
  auto pts = sample_points(r, 25, 7);
  CHECK(pts.size() == 25);
  for (const auto& p : pts) CHECK(p.u != p.v);
  CHECK(pts == sample_points(r, 25, 7));
  CHECK_FALSE(pts == sample_points(r, 25, 8));
}

TEST_CASE("complement basis") {
  PlaneFrame d = gallery_delta().frame;
  for (const auto& p : sample_points(d, 5, 1)) {
    auto ij = complement_basis(d, p);
    CHECK(ij == std::pair{3, 4});
    CHECK(det(completion(localize(d, p.u, p.v).values(), ij)) != Rat(0));
  }
  PlaneFrame e = rows("1,0,0,0,0", "0,1,0,0,0", "0,0,0,0,1");
  CHECK(complement_basis(e.A().map([](const RFunc& x) { return x.eval(Rat(0), Rat(0)); })) == std::pair{2, 3});
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    Matrix<Rat> a(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = Rat(static_cast<long>(rng() % 3) - 1);
    if (rank(a) < 3) continue;
    CHECK(det(completion(a, complement_basis(a))) != Rat(0));
  }
}

TEST_CASE("frame transformations") {
  PlaneFrame d = gallery_delta().frame;
  Matrix<Rat> g = Matrix<Rat>::identity(5);
  g(0, 4) = Rat(2);
  auto t = transform_ambient(d, g);
  // columns x -> g x: the third row (0,0,1,u,v) is unchanged, e0 stays e0
  CHECK(t.A()(0, 0) == RFunc(Rat(1)));
  CHECK(t.A()(2, 0) == RFunc(Rat(2)) * RFunc::var("v"));
  auto r = reparametrize(d, {Rat(0), Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)});  // swap u and v
  CHECK(r.A()(2, 3) == RFunc::var("v"));
  CHECK(r.A()(2, 4) == RFunc::var("u"));
  Matrix<Rat> s = Matrix<Rat>::identity(3);
  s(0, 1) = Rat(1);
  auto m = mix_rows(d, s);
  CHECK(m.A()(0, 1) == RFunc(Rat(1)));
}
