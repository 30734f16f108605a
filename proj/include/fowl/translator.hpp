#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fowl/diagnostics.hpp"
#include "fowl/kb.hpp"

namespace fowl {

enum class Support { Yes, No, Partial };

std::string_view support_name(Support s);

// Per-target construct support. The fuzzydl/delorean profiles reproduce the
// published support matrix of the two reasoners, including the partial
// role-inclusion entry (chains restricted to length 1); generic supports
// everything.
class TargetProfile {
 public:
  const std::string& name() const { return name_; }
  Support support(ConstructTag tag) const { return table_[static_cast<std::size_t>(tag)]; }

  static const TargetProfile& generic();
  static const TargetProfile& fuzzydl();
  static const TargetProfile& delorean();
  static const TargetProfile* by_name(std::string_view name);

 private:
  static constexpr std::size_t kTags = static_cast<std::size_t>(ConstructTag::A25) + 1;
  std::string name_;
  std::array<Support, kTags> table_{};

  TargetProfile(std::string name, Support fill);
};

struct CapabilityEntry {
  ConstructTag tag;
  std::size_t count = 0;
  Support support = Support::Yes;
  std::size_t partial_violations = 0;  // occurrences outside the allowed partial case

  bool supported() const { return support == Support::Yes || (support == Support::Partial && partial_violations == 0); }
};

// Counts every construct occurrence in the KB and its support status under
// the profile. Translation succeeds iff every entry is supported.
std::vector<CapabilityEntry> capability_report(const FuzzyKB& kb, const TargetProfile& t);

struct TranslateResult {
  std::optional<std::string> text;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return text.has_value(); }
};

// Deterministic emission in the target dialect: logic header, modifier and
// datatype definitions, concept/role definitions, axioms in source order.
// Constructs the profile does not support produce diagnostics instead.
TranslateResult translate(const FuzzyKB& kb, const TargetProfile& t);

}  // namespace fowl
