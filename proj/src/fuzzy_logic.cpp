#include "fowl/fuzzy_logic.hpp"

namespace fowl {

std::string_view family_name(LogicFamily f) {
  switch (f) {
    case LogicFamily::Zadeh: return "zadeh";
    case LogicFamily::Godel: return "godel";
    case LogicFamily::Lukasiewicz: return "lukasiewicz";
    case LogicFamily::Product: return "product";
  }
  return "?";
}

std::optional<LogicFamily> family_from_name(std::string_view name) {
  if (name == "zadeh") return LogicFamily::Zadeh;
  if (name == "godel" || name == "goedel") return LogicFamily::Godel;
  if (name == "lukasiewicz") return LogicFamily::Lukasiewicz;
  if (name == "product") return LogicFamily::Product;
  return std::nullopt;
}

Degree tnorm(LogicFamily f, const Degree& x, const Degree& y) {
  const Rat& a = x.value();
  const Rat& b = y.value();
  switch (f) {
    case LogicFamily::Zadeh:
    case LogicFamily::Godel:
      return a <= b ? x : y;
    case LogicFamily::Lukasiewicz: {
      Rat s = a + b - 1;
      return Degree(s > 0 ? s : Rat(0));
    }
    case LogicFamily::Product:
      return Degree(a * b);
  }
  return Degree::zero();
}

Degree tconorm(LogicFamily f, const Degree& x, const Degree& y) {
  const Rat& a = x.value();
  const Rat& b = y.value();
  switch (f) {
    case LogicFamily::Zadeh:
    case LogicFamily::Godel:
      return a >= b ? x : y;
    case LogicFamily::Lukasiewicz: {
      Rat s = a + b;
      return Degree(s < 1 ? s : Rat(1));
    }
    case LogicFamily::Product:
      return Degree(a + b - a * b);
  }
  return Degree::zero();
}

Degree negation(LogicFamily f, const Degree& x) {
  switch (f) {
    case LogicFamily::Zadeh:
    case LogicFamily::Lukasiewicz:
      return Degree(1 - x.value());
    case LogicFamily::Godel:
    case LogicFamily::Product:
      return x.value() == 0 ? Degree::one() : Degree::zero();
  }
  return Degree::zero();
}

Degree implication(LogicFamily f, const Degree& x, const Degree& y) {
  const Rat& a = x.value();
  const Rat& b = y.value();
  switch (f) {
    case LogicFamily::Zadeh: {
      Rat n = 1 - a;
      return Degree(n >= b ? n : b);
    }
    case LogicFamily::Godel:
      return a <= b ? Degree::one() : y;
    case LogicFamily::Lukasiewicz: {
      Rat s = 1 - a + b;
      return Degree(s < 1 ? s : Rat(1));
    }
    case LogicFamily::Product:
      // a = 0 falls under the a <= b branch since b >= 0.
      return a <= b ? Degree::one() : Degree(b / a);
  }
  return Degree::zero();
}

}  // namespace fowl
