#include "focalis/rat.hpp"

#include "focalis/errors.hpp"

namespace focalis {

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("ParseError", "not a rational: '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

bool is_perfect_square(const mpz_class& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class square_reduce(const mpz_class& n, mpz_class* root_part, unsigned long bound) {
  mpz_class rest = abs(n);
  mpz_class root = 1;
  for (unsigned long p = 2; p < bound && rest > 1; ++p) {
    mpz_class pp = p * p;
    while (rest % pp == 0) {
      rest /= pp;
      root *= p;
    }
  }
  if (rest > 1 && is_perfect_square(rest)) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    root *= r;
    rest = 1;
  }
  if (root_part) *root_part = root;
  return n < 0 ? mpz_class(-rest) : rest;
}

}  // namespace focalis
