#include "fowl/modifier.hpp"

#include <stdexcept>

#include "fowl/membership.hpp"

namespace fowl {

ModifierDef ModifierDef::linear(Rat c) {
  if (c <= 0) throw std::invalid_argument("linear modifier requires c > 0");
  ModifierDef m;
  m.kind = ModifierKind::Linear;
  m.a = c / (c + 1);
  m.b = Rat(1) / (c + 1);
  m.c = std::move(c);
  return m;
}

ModifierDef ModifierDef::triangular(Rat a, Rat b, Rat c) {
  if (!(0 <= a && a <= b && b <= c && c <= 1))
    throw std::invalid_argument("triangular modifier requires 0 <= a <= b <= c <= 1");
  ModifierDef m;
  m.kind = ModifierKind::Triangular;
  m.a = std::move(a);
  m.b = std::move(b);
  m.c = std::move(c);
  return m;
}

std::string ModifierDef::str() const {
  if (kind == ModifierKind::Linear) return "linear(" + to_decimal_string(c) + ")";
  return "triangular(" + to_decimal_string(a) + "," + to_decimal_string(b) + "," + to_decimal_string(c) + ")";
}

Degree apply_modifier(const ModifierDef& m, const Degree& x) {
  const Rat& v = x.value();
  if (m.kind == ModifierKind::Linear) {
    // a is in (0,1) for every c > 0, so neither segment degenerates.
    if (v <= m.a) return Degree(v * m.b / m.a);
    return Degree(m.b + (v - m.a) * (1 - m.b) / (1 - m.a));
  }
  return membership_total(MembershipShape::triangular(Rat(0), Rat(1), m.a, m.b, m.c), v);
}

}  // namespace fowl
