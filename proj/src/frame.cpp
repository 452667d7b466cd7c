#include "focalis/frame.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

namespace focalis {

namespace {

/// Multiplies every row by the product of its distinct denominators. Row
/// scaling by a nonzero function keeps ranks and the vanishing of minors.
Matrix<Poly> clear_denominators(const Matrix<RFunc>& m) {
  Matrix<Poly> out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<Poly> dens;
    for (int c = 0; c < m.cols(); ++c) {
      const Poly& d = m(r, c).den();
      if (!d.is_constant() && std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    }
    Poly scale(Rat(1));
    for (const auto& d : dens) scale = scale * d;
    for (int c = 0; c < m.cols(); ++c) out(r, c) = exact_div(m(r, c).num() * scale, m(r, c).den());
  }
  return out;
}

Matrix<RFunc> diff(const Matrix<RFunc>& m, const char* var) {
  return m.map([&](const RFunc& e) { return e.differentiate(var); });
}

Matrix<Rat> eval_at(const Matrix<RFunc>& m, const Rat& u, const Rat& v) {
  return m.map([&](const RFunc& e) { return e.eval(u, v); });
}

Matrix<RatJet> jets(const Matrix<Rat>& val, const Matrix<Rat>& du, const Matrix<Rat>& dv) {
  Matrix<RatJet> out(val.rows(), val.cols());
  for (int i = 0; i < val.rows(); ++i)
    for (int j = 0; j < val.cols(); ++j) out(i, j) = RatJet(val(i, j), du(i, j), dv(i, j));
  return out;
}

// ---- PLANECONGRUENCE v1 parser -------------------------------------------

class LineParser {
 public:
  LineParser(const std::string& text, int line) : s_(text), line_(line) {}

  std::vector<Poly> row() {
    std::vector<Poly> out;
    out.push_back(expr(true));
    while (peek() == ',') {
      ++pos_;
      out.push_back(expr(true));
    }
    skip();
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, static_cast<int>(pos_) + 1, msg); }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  // expr := ['-'] term (('+'|'-') term)*
  Poly expr(bool allow_leading_minus) {
    bool neg = false;
    if (allow_leading_minus && peek() == '-') {
      ++pos_;
      neg = true;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (peek() == '^') {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a natural exponent after '^'");
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 3) fail("exponent too large");
      b = b.pow(std::stoi(digits));
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == 'u' || c == 'v') {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
        fail("unknown identifier");
      }
      return Poly::var(std::string(1, c));
    }
    if (c == '(') {
      ++pos_;
      Poly e = expr(true);
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Poly rational() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    size_t save = pos_;
    if (peek() == '/') {
      size_t slash = pos_;
      ++pos_;
      skip();
      size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) {
        pos_ = slash + 1;
        fail("expected a positive integer denominator");
      }
      std::string den = s_.substr(ds, pos_ - ds);
      mpz_class d(den);
      if (d == 0) {
        pos_ = ds;
        fail("zero denominator");
      }
      return Poly(Rat(mpz_class(num), d));
    }
    pos_ = save;
    return Poly(Rat(mpz_class(num), mpz_class(1)));
  }

  std::string s_;
  int line_;
  size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  auto k = line.find('#');
  return k == std::string::npos ? line : line.substr(0, k);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

Rat focal_det_at(const LocalFrame& lf, const std::vector<Rat>& x) {
  Matrix<Rat> m(5, 5);
  for (int j = 0; j < 5; ++j) {
    for (int r = 0; r < 3; ++r) m(r, j) = lf.A(r, j).val;
    Rat su(0), sv(0);
    for (int i = 0; i < 3; ++i) {
      su += x[i] * lf.Au(i, j).val;
      sv += x[i] * lf.Av(i, j).val;
    }
    m(3, j) = su;
    m(4, j) = sv;
  }
  return det(m);
}

}  // namespace

PlaneFrame::PlaneFrame(Matrix<RFunc> a) : a_(std::move(a)) {
  if (a_.rows() != 3 || a_.cols() != 5) throw Error("ShapeError", "a plane frame is a 3x5 matrix");
  au_ = diff(a_, "u");
  av_ = diff(a_, "v");
  auu_ = diff(au_, "u");
  auv_ = diff(au_, "v");
  avv_ = diff(av_, "v");
}

bool PlaneFrame::is_polynomial() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j)
      if (!a_(i, j).is_polynomial()) return false;
  return true;
}

int PlaneFrame::total_degree() const {
  int d = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) d = std::max(d, a_(i, j).num().total_degree() - a_(i, j).den().total_degree());
  return d;
}

bool PlaneFrame::singular_at(const Rat& u, const Rat& v) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j)
      if (a_(i, j).den_vanishes(u, v)) return true;
  return false;
}

Matrix<Rat> LocalFrame::values() const {
  return A.map([](const RatJet& j) { return j.val; });
}

LocalFrame localize(const PlaneFrame& f, const Rat& u, const Rat& v) {
  LocalFrame lf;
  lf.u = u;
  lf.v = v;
  auto a = eval_at(f.A(), u, v), au = eval_at(f.Au(), u, v), av = eval_at(f.Av(), u, v);
  auto auu = eval_at(f.Auu(), u, v), auv = eval_at(f.Auv(), u, v), avv = eval_at(f.Avv(), u, v);
  lf.A = jets(a, au, av);
  lf.Au = jets(au, auu, auv);
  lf.Av = jets(av, auv, avv);
  return lf;
}

PlaneFrame parse_congruence(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header = false;
  std::vector<std::vector<Poly>> rows;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    if (!header) {
      std::istringstream hs(line);
      std::string magic, version, rest;
      hs >> magic >> version;
      if (magic != "PLANECONGRUENCE") {
        size_t col = line.find_first_not_of(" \t") + 1;
        throw SyntaxError(lineno, static_cast<int>(col), "expected header 'PLANECONGRUENCE v1'");
      }
      if (version != "v1" || (hs >> rest)) {
        throw SyntaxError(lineno, static_cast<int>(line.find(magic) + magic.size() + 2),
                          "unsupported version, expected 'v1'");
      }
      header = true;
      continue;
    }
    if (rows.size() == 3) throw SyntaxError(lineno, 1, "more than three frame rows");
    LineParser p(line, lineno);
    auto r = p.row();
    if (r.size() != 5) {
      throw SyntaxError(lineno, 1, "expected 5 comma-separated entries, found " + std::to_string(r.size()));
    }
    rows.push_back(std::move(r));
  }
  if (!header) throw SyntaxError(std::max(lineno, 1), 1, "missing header 'PLANECONGRUENCE v1'");
  if (rows.size() != 3) {
    throw SyntaxError(lineno + 1, 1, "expected three frame rows, found " + std::to_string(rows.size()));
  }
  Matrix<RFunc> a(3, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = RFunc(rows[i][j].with_vars(merge_variables(rows[i][j].vars(), {"u", "v"})));
  PlaneFrame f(a);
  if (generic_rank(f) < 3) throw DegenerateFrame("frame rows are linearly dependent at the generic point");
  return f;
}

std::string print_congruence(const PlaneFrame& f, const std::string& comment) {
  std::string s = "PLANECONGRUENCE v1\n";
  if (!comment.empty()) s += "# " + comment + "\n";
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (!f.A()(i, j).is_polynomial()) throw Error("FormatError", "only polynomial frames can be written");
      if (j) s += ", ";
      s += f.A()(i, j).num().compact().str();
    }
    s += "\n";
  }
  return s;
}

int generic_rank(const PlaneFrame& f) { return rank_fraction_free(clear_denominators(f.A())); }

bool admissible(const PlaneFrame& f, const Rat& u, const Rat& v) {
  if (f.singular_at(u, v)) return false;
  return rank(eval_at(f.A(), u, v)) == 3;
}

FrameDiagnostics validate_frame(const PlaneFrame& f) {
  FrameDiagnostics d;
  if (generic_rank(f) < 3) throw DegenerateFrame("frame has generic rank below 3");
  d.rank_ok = true;
  std::mt19937_64 rng(0x5eedULL);
  auto draw = [&] { return Rat(static_cast<long>(rng() % 19) - 9); };
  for (int tries = 0; tries < 200 && !(d.rank_witness && d.focal_witness); ++tries) {
    Rat u = draw(), v = draw();
    if (!admissible(f, u, v)) continue;
    if (!d.rank_witness) d.rank_witness = SamplePoint{u, v, true};
    LocalFrame lf = localize(f, u, v);
    std::vector<Rat> x{draw(), draw(), draw()};
    if (!focal_det_at(lf, x).is_zero()) d.focal_witness = SamplePoint{u, v, true};
  }
  if (!d.focal_witness) {
    // every numeric probe vanished: confirm over Q(u, v)
    bool all_zero = true;
    for (int i = 0; i < 3 && all_zero; ++i) {
      for (int j = 0; j < 3 && all_zero; ++j) {
        Matrix<RFunc> m(5, 5);
        for (int c = 0; c < 5; ++c) {
          for (int r = 0; r < 3; ++r) m(r, c) = f.A()(r, c);
          m(3, c) = f.Au()(i, c);
          m(4, c) = f.Av()(j, c);
        }
        if (!det(clear_denominators(m)).zero()) all_zero = false;
      }
    }
    if (all_zero) throw DegenerateCongruence("focal form vanishes identically: every point is focal");
    d.message = "focal form is nonzero symbolically but vanished at all probes";
  }
  d.focal_ok = true;
  if (d.message.empty()) d.message = "generic rank 3, focal form not identically zero";
  return d;
}

std::vector<SamplePoint> sample_points(const PlaneFrame& f, int n, std::uint64_t seed, const Admissibility& extra) {
  std::mt19937_64 rng(seed);
  std::vector<SamplePoint> out;
  std::set<std::pair<long, long>> seen;
  for (int slot = 0; slot < n; ++slot) {
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      long iu = static_cast<long>(rng() % 19) - 9;
      long iv = static_cast<long>(rng() % 19) - 9;
      if (seen.count({iu, iv})) continue;
      Rat u(iu), v(iv);
      if (!admissible(f, u, v)) continue;
      if (extra && !extra(localize(f, u, v))) continue;
      seen.insert({iu, iv});
      out.push_back(SamplePoint{u, v, true});
      found = true;
    }
    if (!found) {
      throw SamplingExhausted("could not find admissible sample " + std::to_string(slot + 1) + " of " +
                              std::to_string(n) + " within 100 draws");
    }
  }
  return out;
}

std::pair<int, int> complement_basis(const Matrix<Rat>& a) {
  // pairs from (3, 4) downwards
  for (int i = 3; i >= 0; --i) {
    for (int j = 4; j > i; --j) {
      Matrix<Rat> m(5, 5);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) m(r, c) = a(r, c);
      m(3, i) = Rat(1);
      m(4, j) = Rat(1);
      if (!det(m).is_zero()) return {i, j};
    }
  }
  throw RankDrop("frame rows do not span a plane");
}

std::pair<int, int> complement_basis(const PlaneFrame& f, const SamplePoint& p) {
  return complement_basis(eval_at(f.A(), p.u, p.v));
}

PlaneFrame transform_ambient(const PlaneFrame& f, const Matrix<Rat>& g) {
  Matrix<RFunc> gr = g.map([](const Rat& r) { return RFunc(r); });
  return PlaneFrame(f.A() * gr.transpose());
}

PlaneFrame mix_rows(const PlaneFrame& f, const Matrix<Rat>& g) {
  Matrix<RFunc> gr = g.map([](const Rat& r) { return RFunc(r); });
  return PlaneFrame(gr * f.A());
}

PlaneFrame reparametrize(const PlaneFrame& f, const std::array<Rat, 6>& k) {
  RFunc u = RFunc::var("u"), v = RFunc::var("v");
  RFunc nu = RFunc(k[0]) * u + RFunc(k[1]) * v + RFunc(k[4]);
  RFunc nv = RFunc(k[2]) * u + RFunc(k[3]) * v + RFunc(k[5]);
  RFunc tmp = RFunc::var("w");
  Matrix<RFunc> a = f.A().map([&](const RFunc& e) {
    // simultaneous substitution through a fresh variable
    return e.substitute("u", tmp).substitute("v", nv).substitute("w", nu);
  });
  return PlaneFrame(a);
}

}  // namespace focalis
