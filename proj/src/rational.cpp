#include "qround/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "qround/errors.hpp"

namespace qround {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

bool Rational::try_parse(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  bool neg = false;
  std::string_view s = text;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string_view::npos) {
    auto a = s.substr(0, slash);
    auto b = s.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) return false;
    mpz_class den{std::string(b)};
    if (den == 0) return false;
    q = mpq_class(mpz_class(std::string(a)), den);
  } else if (dot != std::string_view::npos) {
    auto a = s.substr(0, dot);
    auto b = s.substr(dot + 1);
    if (a.empty() && b.empty()) return false;
    if ((!a.empty() && !all_digits(a)) || (!b.empty() && !all_digits(b))) return false;
    mpz_class ip = a.empty() ? mpz_class(0) : mpz_class(std::string(a));
    mpz_class fp = b.empty() ? mpz_class(0) : mpz_class(std::string(b));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
    q = mpq_class(ip * scale + fp, scale);
  } else {
    if (!all_digits(s)) return false;
    q = mpq_class(mpz_class(std::string(s)));
  }
  q.canonicalize();
  if (neg) q = -q;
  out = Rational(q);
  return true;
}

Rational Rational::parse(std::string_view text) {
  Rational r;
  if (!try_parse(text, r)) throw ParseError("invalid rational '" + std::string(text) + "'", 0, 0);
  return r;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rational(mpq_class(r));
}

Rational Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rational(mpq_class(r));
}

long Rational::to_long() const {
  if (q_.get_den() != 1 || !q_.get_num().fits_slong_p())
    throw std::range_error("rational " + str() + " is not a representable integer");
  return q_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qround
