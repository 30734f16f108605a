#pragma once

#include <optional>
#include <string_view>

#include "fowl/degree.hpp"

namespace fowl {

// The four operator families. Each bundles a t-norm, a t-conorm,
// a negation and an implication.
enum class LogicFamily { Zadeh, Godel, Lukasiewicz, Product };

std::string_view family_name(LogicFamily f);
std::optional<LogicFamily> family_from_name(std::string_view name);

Degree tnorm(LogicFamily f, const Degree& x, const Degree& y);
Degree tconorm(LogicFamily f, const Degree& x, const Degree& y);
Degree negation(LogicFamily f, const Degree& x);
Degree implication(LogicFamily f, const Degree& x, const Degree& y);

}  // namespace fowl
