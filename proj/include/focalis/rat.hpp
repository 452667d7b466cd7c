#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace focalis {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading '-').
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool invertible(const Rat& x) { return !x.is_zero(); }
Rat exact_div(const Rat& a, const Rat& b);

/// Is n a perfect square (n >= 0)?
bool is_perfect_square(const mpz_class& n);

/// Writes n = s^2 * k removing square factors of primes below `bound` and
/// a trailing perfect-square cofactor. Returns k (sign of n kept).
mpz_class square_reduce(const mpz_class& n, mpz_class* root_part, unsigned long bound = 2000);

}  // namespace focalis
