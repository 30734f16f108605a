#include "fowl/membership.hpp"

#include <stdexcept>

namespace fowl {

namespace {

void require_order(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("membership shape breakpoints not ordered: ") + what);
}

}  // namespace

std::string_view shape_kind_name(ShapeKind k) {
  switch (k) {
    case ShapeKind::LeftShoulder: return "leftshoulder";
    case ShapeKind::RightShoulder: return "rightshoulder";
    case ShapeKind::Triangular: return "triangular";
    case ShapeKind::Trapezoidal: return "trapezoidal";
  }
  return "?";
}

MembershipShape MembershipShape::left(Rat k1, Rat k2, Rat a, Rat b) {
  require_order(k1 <= a && a <= b && b <= k2, "left");
  MembershipShape s;
  s.kind = ShapeKind::LeftShoulder;
  s.k1 = std::move(k1);
  s.k2 = std::move(k2);
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

MembershipShape MembershipShape::right(Rat k1, Rat k2, Rat a, Rat b) {
  require_order(k1 <= a && a <= b && b <= k2, "right");
  MembershipShape s;
  s.kind = ShapeKind::RightShoulder;
  s.k1 = std::move(k1);
  s.k2 = std::move(k2);
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

MembershipShape MembershipShape::triangular(Rat k1, Rat k2, Rat a, Rat b, Rat c) {
  require_order(k1 <= a && a <= b && b <= c && c <= k2, "triangular");
  MembershipShape s;
  s.kind = ShapeKind::Triangular;
  s.k1 = std::move(k1);
  s.k2 = std::move(k2);
  s.a = std::move(a);
  s.b = std::move(b);
  s.c = std::move(c);
  return s;
}

MembershipShape MembershipShape::trapezoidal(Rat k1, Rat k2, Rat a, Rat b, Rat c, Rat d) {
  require_order(k1 <= a && a <= b && b <= c && c <= d && d <= k2, "trapezoidal");
  MembershipShape s;
  s.kind = ShapeKind::Trapezoidal;
  s.k1 = std::move(k1);
  s.k2 = std::move(k2);
  s.a = std::move(a);
  s.b = std::move(b);
  s.c = std::move(c);
  s.d = std::move(d);
  return s;
}

bool MembershipShape::operator==(const MembershipShape& o) const {
  if (kind != o.kind || k1 != o.k1 || k2 != o.k2 || a != o.a || b != o.b) return false;
  switch (kind) {
    case ShapeKind::LeftShoulder:
    case ShapeKind::RightShoulder: return true;
    case ShapeKind::Triangular: return c == o.c;
    case ShapeKind::Trapezoidal: return c == o.c && d == o.d;
  }
  return false;
}

std::string MembershipShape::str() const {
  std::string out = std::string(shape_kind_name(kind)) + "(" + to_decimal_string(k1) + "," +
                    to_decimal_string(k2) + "," + to_decimal_string(a) + "," + to_decimal_string(b);
  if (kind == ShapeKind::Triangular || kind == ShapeKind::Trapezoidal) out += "," + to_decimal_string(c);
  if (kind == ShapeKind::Trapezoidal) out += "," + to_decimal_string(d);
  return out + ")";
}

Degree membership(const MembershipShape& s, const Rat& x) {
  if (x < s.k1 || x > s.k2)
    throw std::domain_error("value " + to_decimal_string(x) + " outside reference interval of " + s.str());
  return membership_total(s, x);
}

Degree membership_total(const MembershipShape& s, const Rat& x) {
  switch (s.kind) {
    case ShapeKind::LeftShoulder:
      // 1 on (-inf,a], linear down to 0 at b. A zero-width ramp keeps the
      // boundary point on the degree-1 side.
      if (x <= s.a) return Degree::one();
      if (x >= s.b) return Degree::zero();
      return Degree((s.b - x) / (s.b - s.a));
    case ShapeKind::RightShoulder:
      if (x >= s.b) return Degree::one();
      if (x <= s.a) return Degree::zero();
      return Degree((x - s.a) / (s.b - s.a));
    case ShapeKind::Triangular:
      if (x == s.b) return Degree::one();
      if (x <= s.a || x >= s.c) return Degree::zero();
      if (x < s.b) return Degree((x - s.a) / (s.b - s.a));
      return Degree((s.c - x) / (s.c - s.b));
    case ShapeKind::Trapezoidal:
      if (x >= s.b && x <= s.c) return Degree::one();
      if (x <= s.a || x >= s.d) return Degree::zero();
      if (x < s.b) return Degree((x - s.a) / (s.b - s.a));
      return Degree((s.d - x) / (s.d - s.c));
  }
  return Degree::zero();
}

}  // namespace fowl
