#pragma once

#include <string>

#include "fowl/degree.hpp"
#include "fowl/rational.hpp"

namespace fowl {

enum class ModifierKind { Linear, Triangular };

// A fuzzy hedge: a function [0,1] -> [0,1] reshaping membership degrees.
// linear(c) is the two-segment polyline through (0,0), (a,b), (1,1) with
// a = c/(c+1), b = 1/(c+1); c = 1 is the identity. triangular(a,b,c) is
// the triangular membership function over [0,1].
struct ModifierDef {
  ModifierKind kind = ModifierKind::Linear;
  Rat a, b, c;

  static ModifierDef linear(Rat c);  // requires c > 0
  static ModifierDef triangular(Rat a, Rat b, Rat c);

  bool operator==(const ModifierDef& o) const {
    return kind == o.kind && a == o.a && b == o.b && c == o.c;
  }

  std::string str() const;
};

Degree apply_modifier(const ModifierDef& m, const Degree& x);

}  // namespace fowl
