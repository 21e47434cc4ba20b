#include "qround/interval.hpp"

#include "qround/errors.hpp"

namespace qround {

UncertainInterval::UncertainInterval(Rational lo, EndpointKind lo_kind, Rational hi, EndpointKind hi_kind)
    : lo_(std::move(lo)), lo_kind_(lo_kind), hi_(std::move(hi)), hi_kind_(hi_kind) {
  if (lo_ > hi_) throw InvalidInstance("interval lower endpoint exceeds upper endpoint");
  if (lo_ == hi_ && (lo_kind_ != EndpointKind::Closed || hi_kind_ != EndpointKind::Closed))
    throw InvalidInstance("degenerate interval must be closed on both sides");
}

UncertainInterval::UncertainInterval(Rational v)
    : lo_(v), lo_kind_(EndpointKind::Closed), hi_(std::move(v)), hi_kind_(EndpointKind::Closed) {}

UncertainInterval UncertainInterval::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> UncertainInterval {
    throw ParseError("bad interval '" + std::string(text) + "': " + why, 0, 0);
  };
  if (text.size() < 3) return fail("too short");
  char open = text.front();
  char close = text.back();
  std::string_view body = text.substr(1, text.size() - 2);
  if (open == '{') {
    if (close != '}') return fail("unterminated point");
    Rational v;
    if (!Rational::try_parse(body, v)) return fail("bad value");
    return UncertainInterval(v);
  }
  if ((open != '(' && open != '[') || (close != ')' && close != ']')) return fail("bad brackets");
  auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
    return fail("expected exactly one comma");
  Rational lo;
  Rational hi;
  if (!Rational::try_parse(body.substr(0, comma), lo)) return fail("bad lower endpoint");
  if (!Rational::try_parse(body.substr(comma + 1), hi)) return fail("bad upper endpoint");
  EndpointKind lk = open == '(' ? EndpointKind::Open : EndpointKind::Closed;
  EndpointKind hk = close == ')' ? EndpointKind::Open : EndpointKind::Closed;
  if (lo > hi) return fail("lower endpoint exceeds upper endpoint");
  if (lo == hi && (lk == EndpointKind::Open || hk == EndpointKind::Open)) return fail("empty interval");
  return UncertainInterval(lo, lk, hi, hk);
}

std::string UncertainInterval::str() const {
  if (is_trivial()) return "{" + lo_.str() + "}";
  std::string s;
  s += lo_kind_ == EndpointKind::Open ? '(' : '[';
  s += lo_.str();
  s += ',';
  s += hi_.str();
  s += hi_kind_ == EndpointKind::Open ? ')' : ']';
  return s;
}

bool UncertainInterval::contains(const Rational& v) const {
  if (v < lo_ || v > hi_) return false;
  if (v == lo_ && lo_kind_ == EndpointKind::Open) return false;
  if (v == hi_ && hi_kind_ == EndpointKind::Open) return false;
  return true;
}

int compare_lower(const UncertainInterval& a, const UncertainInterval& b) {
  if (a.lo() != b.lo()) return a.lo() < b.lo() ? -1 : 1;
  if (a.lo_kind() == b.lo_kind()) return 0;
  return a.lo_kind() == EndpointKind::Closed ? -1 : 1;
}

int compare_upper(const UncertainInterval& a, const UncertainInterval& b) {
  if (a.hi() != b.hi()) return a.hi() < b.hi() ? -1 : 1;
  if (a.hi_kind() == b.hi_kind()) return 0;
  return a.hi_kind() == EndpointKind::Open ? -1 : 1;
}

bool intersects(const UncertainInterval& a, const UncertainInterval& b) {
  // The intersection is bounded below by the later left endpoint and above by the earlier right one.
  const UncertainInterval& l = compare_lower(a, b) >= 0 ? a : b;
  const UncertainInterval& u = compare_upper(a, b) <= 0 ? a : b;
  if (l.lo() < u.hi()) return true;
  if (l.lo() > u.hi()) return false;
  return l.lo_kind() == EndpointKind::Closed && u.hi_kind() == EndpointKind::Closed;
}

bool contains_interval(const UncertainInterval& outer, const UncertainInterval& inner) {
  return compare_lower(outer, inner) <= 0 && compare_upper(outer, inner) >= 0;
}

}  // namespace qround
