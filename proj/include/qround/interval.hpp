#pragma once

#include <string>
#include <string_view>

#include "qround/rational.hpp"

namespace qround {

enum class EndpointKind { Open, Closed };

/// Interval over exact rationals with independently open or closed endpoints.
/// A trivial interval is the single point {v} (both endpoints closed and equal).
class UncertainInterval {
 public:
  UncertainInterval() : UncertainInterval(Rational(0)) {}
  UncertainInterval(Rational lo, EndpointKind lo_kind, Rational hi, EndpointKind hi_kind);
  /// The trivial interval {v}.
  explicit UncertainInterval(Rational v);

  static UncertainInterval open(Rational lo, Rational hi) {
    return {std::move(lo), EndpointKind::Open, std::move(hi), EndpointKind::Open};
  }
  static UncertainInterval closed(Rational lo, Rational hi) {
    return {std::move(lo), EndpointKind::Closed, std::move(hi), EndpointKind::Closed};
  }
  static UncertainInterval point(Rational v) { return UncertainInterval(std::move(v)); }

  /// One of "(a,b)", "[a,b]", "(a,b]", "[a,b)", "{v}".
  static UncertainInterval parse(std::string_view text);
  std::string str() const;

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  EndpointKind lo_kind() const { return lo_kind_; }
  EndpointKind hi_kind() const { return hi_kind_; }

  bool is_trivial() const { return lo_ == hi_; }
  bool is_open() const { return lo_kind_ == EndpointKind::Open && hi_kind_ == EndpointKind::Open; }
  bool contains(const Rational& v) const;

  friend bool operator==(const UncertainInterval&, const UncertainInterval&) = default;

 private:
  Rational lo_;
  EndpointKind lo_kind_;
  Rational hi_;
  EndpointKind hi_kind_;
};

inline bool contains(const UncertainInterval& iv, const Rational& v) { return iv.contains(v); }

/// Three-way comparison of left endpoints: value, then closed before open.
int compare_lower(const UncertainInterval& a, const UncertainInterval& b);
/// Three-way comparison of right endpoints: value, then open before closed.
int compare_upper(const UncertainInterval& a, const UncertainInterval& b);

inline bool precedes_lower(const UncertainInterval& a, const UncertainInterval& b) { return compare_lower(a, b) < 0; }
inline bool precedes_upper(const UncertainInterval& a, const UncertainInterval& b) { return compare_upper(a, b) < 0; }

/// True iff the relative order of values in a and b cannot be deduced.
/// Works on effective intervals: a revealed value is passed as a trivial interval.
inline bool dependent(const UncertainInterval& a, const UncertainInterval& b) {
  return a.hi() > b.lo() && b.hi() > a.lo();
}

/// Nonempty intersection, respecting openness.
bool intersects(const UncertainInterval& a, const UncertainInterval& b);

/// inner is a subset of outer.
bool contains_interval(const UncertainInterval& outer, const UncertainInterval& inner);

}  // namespace qround
