#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qround {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "a", "-a", "a/b" or a finite decimal such as "2.5".
  static Rational parse(std::string_view text);
  static bool try_parse(std::string_view text, Rational& out);

  /// "num/den", or "num" when den is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  std::string numerator_str() const { return q_.get_num().get_str(); }
  std::string denominator_str() const { return q_.get_den().get_str(); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Smallest integer >= this.
  Rational ceil() const;
  Rational floor() const;
  /// Integer value; throws if not an integer or out of range.
  long to_long() const;

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// ceil(a / b) for nonnegative a and positive b.
inline long ceil_div(long a, long b) { return b <= 0 ? 0 : (a + b - 1) / b; }

}  // namespace qround

template <>
struct std::hash<qround::Rational> {
  std::size_t operator()(const qround::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};
