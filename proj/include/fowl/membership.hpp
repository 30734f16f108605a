#pragma once

#include <string>

#include "fowl/degree.hpp"
#include "fowl/rational.hpp"

namespace fowl {

enum class ShapeKind { LeftShoulder, RightShoulder, Triangular, Trapezoidal };

std::string_view shape_kind_name(ShapeKind k);

// Piecewise-linear membership function over a reference interval [k1,k2].
// Breakpoints: left/right use a,b; triangular a,b,c; trapezoidal a,b,c,d.
// Invariant: k1 <= a <= b (<= c (<= d)) <= k2 for the breakpoints the kind
// uses. Adjacent breakpoints may coincide; a zero-width ramp is a crisp
// step closed on the degree-1 side.
struct MembershipShape {
  ShapeKind kind = ShapeKind::LeftShoulder;
  Rat k1, k2, a, b, c, d;

  static MembershipShape left(Rat k1, Rat k2, Rat a, Rat b);
  static MembershipShape right(Rat k1, Rat k2, Rat a, Rat b);
  static MembershipShape triangular(Rat k1, Rat k2, Rat a, Rat b, Rat c);
  static MembershipShape trapezoidal(Rat k1, Rat k2, Rat a, Rat b, Rat c, Rat d);

  bool operator==(const MembershipShape& o) const;

  std::string str() const;
};

// Exact shape value. Requires k1 <= x <= k2; throws std::domain_error
// identifying the shape and the value otherwise.
Degree membership(const MembershipShape& s, const Rat& x);

// Total extension over all rationals: shoulders keep their plateau value
// outside [k1,k2], triangular/trapezoidal are 0 there. Used by quantified
// evaluation where out-of-range values simply are (non-)members.
Degree membership_total(const MembershipShape& s, const Rat& x);

}  // namespace fowl
