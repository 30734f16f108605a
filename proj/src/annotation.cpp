#include "fowl/annotation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fowl {

std::string_view fuzzy_type_name(FuzzyType t) {
  switch (t) {
    case FuzzyType::Modifier: return "modifier";
    case FuzzyType::Datatype: return "datatype";
    case FuzzyType::Concept: return "concept";
    case FuzzyType::Role: return "role";
    case FuzzyType::Axiom: return "axiom";
    case FuzzyType::Ontology: return "ontology";
  }
  return "?";
}

std::vector<Rat> DatatypePayload::breakpoints() const {
  std::vector<Rat> out;
  if (a) out.push_back(*a);
  if (b) out.push_back(*b);
  if (c) out.push_back(*c);
  if (d) out.push_back(*d);
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Minimal XML fragment reader for the payload dialect: elements, attributes,
// self-closing tags, whitespace-only text. No entities, no comments, no PIs.

struct XmlAttr {
  std::string name, value;
};

struct XmlElement {
  std::string name;
  std::vector<XmlAttr> attrs;
  std::vector<XmlElement> children;

  const XmlAttr* find(std::string_view attr) const {
    for (const auto& a : attrs)
      if (a.name == attr) return &a;
    return nullptr;
  }
};

struct XmlError {
  std::string message;
};

class XmlReader {
 public:
  explicit XmlReader(std::string_view text) : text_(text) {}

  XmlElement parse_document() {
    skip_ws();
    XmlElement root = parse_element();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing content after the root element");
    return root;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) { throw XmlError{what}; }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  static bool name_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }
  static bool name_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.';
  }

  std::string parse_name() {
    if (eof() || !name_start(peek())) fail("expected a tag or attribute name");
    std::size_t start = pos_;
    while (!eof() && name_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char ch, const char* what) {
    if (eof() || peek() != ch) fail(std::string("expected '") + ch + "' " + what);
    ++pos_;
  }

  XmlElement parse_element() {
    expect('<', "to open an element");
    XmlElement el;
    el.name = parse_name();
    while (true) {
      skip_ws();
      if (eof()) fail("unterminated tag <" + el.name + ">");
      if (peek() == '/') {
        ++pos_;
        expect('>', "to close a self-closing tag");
        return el;
      }
      if (peek() == '>') {
        ++pos_;
        break;
      }
      XmlAttr attr;
      attr.name = parse_name();
      skip_ws();
      expect('=', "after attribute name");
      skip_ws();
      expect('"', "to open an attribute value");
      std::size_t start = pos_;
      while (!eof() && peek() != '"' && peek() != '<') ++pos_;
      if (eof() || peek() != '"') fail("unterminated attribute value in <" + el.name + ">");
      attr.value = std::string(text_.substr(start, pos_ - start));
      ++pos_;
      if (el.find(attr.name)) fail("duplicate attribute '" + attr.name + "' in <" + el.name + ">");
      el.attrs.push_back(std::move(attr));
    }
    // Content: child elements separated by whitespace, then the end tag.
    while (true) {
      std::size_t text_start = pos_;
      while (!eof() && peek() != '<') ++pos_;
      for (std::size_t i = text_start; i < pos_; ++i)
        if (!std::isspace(static_cast<unsigned char>(text_[i]))) fail("unexpected text content in <" + el.name + ">");
      if (eof()) fail("missing end tag </" + el.name + ">");
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        pos_ += 2;
        std::string end = parse_name();
        if (end != el.name) fail("mismatched end tag </" + end + "> for <" + el.name + ">");
        skip_ws();
        expect('>', "to finish the end tag");
        return el;
      }
      el.children.push_back(parse_element());
    }
  }
};

// ---------------------------------------------------------------------------
// Payload extraction.

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

struct PayloadError {
  std::string message;
};

[[noreturn]] void bad(const std::string& what) { throw PayloadError{what}; }

void expect_attrs(const XmlElement& el, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  for (const auto& a : el.attrs) {
    bool known = std::any_of(required.begin(), required.end(), [&](auto r) { return a.name == r; }) ||
                 std::any_of(optional.begin(), optional.end(), [&](auto o) { return a.name == o; });
    if (!known) bad("unknown attribute '" + a.name + "' in <" + el.name + ">");
  }
  for (auto r : required)
    if (!el.find(r)) bad("missing required attribute '" + std::string(r) + "' in <" + el.name + ">");
}

std::string string_attr(const XmlElement& el, std::string_view name) {
  const XmlAttr* a = el.find(name);
  if (!a) bad("missing required attribute '" + std::string(name) + "' in <" + el.name + ">");
  if (a->value.empty()) bad("empty attribute '" + std::string(name) + "' in <" + el.name + ">");
  return a->value;
}

Rat numeric_attr(const XmlElement& el, std::string_view name) {
  std::string raw = string_attr(el, name);
  auto v = parse_decimal(raw);
  if (!v) bad("attribute '" + std::string(name) + "' is not a decimal number: \"" + raw + "\"");
  return *v;
}

void expect_no_children(const XmlElement& el) {
  if (!el.children.empty()) bad("<" + el.name + "> does not take nested elements");
}

const XmlElement& single_child(const XmlElement& root, std::string_view tag) {
  if (root.children.size() != 1) bad("expected exactly one <" + std::string(tag) + "> element");
  const XmlElement& el = root.children.front();
  if (el.name != tag) bad("expected <" + std::string(tag) + ">, found <" + el.name + ">");
  return el;
}

ModifierPayload read_modifier(const XmlElement& root) {
  const XmlElement& el = single_child(root, "Modifier");
  expect_no_children(el);
  std::string type = string_attr(el, "type");
  ModifierPayload p;
  if (type == "linear") {
    expect_attrs(el, {"type", "c"});
    p.kind = ModifierKind::Linear;
    p.c = numeric_attr(el, "c");
  } else if (type == "triangular") {
    expect_attrs(el, {"type", "a", "b", "c"});
    p.kind = ModifierKind::Triangular;
    p.a = numeric_attr(el, "a");
    p.b = numeric_attr(el, "b");
    p.c = numeric_attr(el, "c");
  } else {
    bad("unknown modifier type \"" + type + "\"");
  }
  return p;
}

DatatypePayload read_datatype(const XmlElement& root) {
  const XmlElement& el = single_child(root, "Datatype");
  expect_no_children(el);
  std::string type = string_attr(el, "type");
  DatatypePayload p;
  if (type == "leftshoulder" || type == "rightshoulder") {
    expect_attrs(el, {"type", "a", "b"});
    p.kind = type == "leftshoulder" ? DatatypePayloadKind::LeftShoulder : DatatypePayloadKind::RightShoulder;
    p.a = numeric_attr(el, "a");
    p.b = numeric_attr(el, "b");
  } else if (type == "triangular") {
    expect_attrs(el, {"type", "a", "b", "c"});
    p.kind = DatatypePayloadKind::Triangular;
    p.a = numeric_attr(el, "a");
    p.b = numeric_attr(el, "b");
    p.c = numeric_attr(el, "c");
  } else if (type == "trapezoidal") {
    expect_attrs(el, {"type", "a", "b", "c", "d"});
    p.kind = DatatypePayloadKind::Trapezoidal;
    p.a = numeric_attr(el, "a");
    p.b = numeric_attr(el, "b");
    p.c = numeric_attr(el, "c");
    p.d = numeric_attr(el, "d");
  } else if (type == "modified") {
    expect_attrs(el, {"type", "modifier", "base"});
    p.kind = DatatypePayloadKind::Modified;
    p.modifier = string_attr(el, "modifier");
    p.base = string_attr(el, "base");
  } else {
    bad("unknown datatype type \"" + type + "\"");
  }
  return p;
}

WeightedPair read_weighted_pair(const XmlElement& el) {
  if (el.name != "Concept") bad("expected nested <Concept>, found <" + el.name + ">");
  expect_no_children(el);
  if (string_attr(el, "type") != "weighted") bad("weightedSum admits only nested weighted concepts");
  expect_attrs(el, {"type", "value", "base"});
  return WeightedPair{numeric_attr(el, "value"), string_attr(el, "base")};
}

ConceptPayload read_concept(const XmlElement& root) {
  const XmlElement& el = single_child(root, "Concept");
  std::string type = string_attr(el, "type");
  ConceptPayload p;
  if (type == "modified") {
    expect_no_children(el);
    expect_attrs(el, {"type", "modifier", "base"});
    p.kind = ConceptPayloadKind::Modified;
    p.modifier = string_attr(el, "modifier");
    p.base = string_attr(el, "base");
  } else if (type == "weighted") {
    expect_no_children(el);
    expect_attrs(el, {"type", "value", "base"});
    p.kind = ConceptPayloadKind::Weighted;
    p.value = numeric_attr(el, "value");
    p.base = string_attr(el, "base");
  } else if (type == "nominal") {
    expect_no_children(el);
    expect_attrs(el, {"type", "value", "individual"});
    p.kind = ConceptPayloadKind::Nominal;
    p.value = numeric_attr(el, "value");
    p.individual = string_attr(el, "individual");
  } else if (type == "weightedSum") {
    expect_attrs(el, {"type"});
    p.kind = ConceptPayloadKind::WeightedSum;
    for (const auto& child : el.children) p.summands.push_back(read_weighted_pair(child));
  } else {
    bad("unknown concept type \"" + type + "\"");
  }
  return p;
}

RolePayload read_role(const XmlElement& root) {
  const XmlElement& el = single_child(root, "Role");
  expect_no_children(el);
  if (string_attr(el, "type") != "modified") bad("unknown role type \"" + string_attr(el, "type") + "\"");
  expect_attrs(el, {"type", "modifier", "base"});
  return RolePayload{string_attr(el, "modifier"), string_attr(el, "base")};
}

AxiomPayload read_axiom(const XmlElement& root) {
  AxiomPayload p;
  if (root.children.empty()) return p;  // degree defaults to 1
  if (root.children.size() > 1) bad("at most one <Degree> element is allowed");
  const XmlElement& el = root.children.front();
  if (el.name != "Degree") bad("expected <Degree>, found <" + el.name + ">");
  expect_no_children(el);
  expect_attrs(el, {"value"});
  p.degree = numeric_attr(el, "value");
  return p;
}

OntologyPayload read_ontology(const XmlElement& root) {
  const XmlElement& el = single_child(root, "FuzzyLogic");
  expect_no_children(el);
  expect_attrs(el, {"logic"});
  std::string logic = string_attr(el, "logic");
  if (logic != "lukasiewicz" && logic != "zadeh") bad("unknown logic \"" + logic + "\" (lukasiewicz|zadeh)");
  return OntologyPayload{logic == "zadeh" ? LogicFamily::Zadeh : LogicFamily::Lukasiewicz};
}

}  // namespace

AnnotationParseResult parse_annotation(std::string_view text) {
  AnnotationParseResult result;
  try {
    XmlElement root = XmlReader(text).parse_document();
    if (lowercase(root.name) != "fuzzyowl2") bad("root element must be <fuzzyOwl2>, found <" + root.name + ">");
    expect_attrs(root, {"fuzzyType"});
    std::string type = string_attr(root, "fuzzyType");
    FuzzyAnnotation a;
    if (type == "modifier") {
      a.fuzzy_type = FuzzyType::Modifier;
      a.payload = read_modifier(root);
    } else if (type == "datatype") {
      a.fuzzy_type = FuzzyType::Datatype;
      a.payload = read_datatype(root);
    } else if (type == "concept") {
      a.fuzzy_type = FuzzyType::Concept;
      a.payload = read_concept(root);
    } else if (type == "role") {
      a.fuzzy_type = FuzzyType::Role;
      a.payload = read_role(root);
    } else if (type == "axiom") {
      a.fuzzy_type = FuzzyType::Axiom;
      a.payload = read_axiom(root);
    } else if (type == "ontology") {
      a.fuzzy_type = FuzzyType::Ontology;
      a.payload = read_ontology(root);
    } else {
      bad("unknown fuzzyType \"" + type + "\"");
    }
    result.annotation = std::move(a);
  } catch (const XmlError& e) {
    result.diagnostics.push_back({diag::kAnnotationParse, Severity::Error, "", "malformed XML: " + e.message});
  } catch (const PayloadError& e) {
    result.diagnostics.push_back({diag::kAnnotationParse, Severity::Error, "", e.message});
  }
  return result;
}

namespace {

std::string num(const Rat& r) { return to_decimal_string(r); }

std::string serialize_payload(const FuzzyAnnotation& a) {
  struct Visitor {
    std::string operator()(const ModifierPayload& p) const {
      if (p.kind == ModifierKind::Linear) return "<Modifier type=\"linear\" c=\"" + num(p.c) + "\" />";
      return "<Modifier type=\"triangular\" a=\"" + num(*p.a) + "\" b=\"" + num(*p.b) + "\" c=\"" + num(p.c) +
             "\" />";
    }
    std::string operator()(const DatatypePayload& p) const {
      switch (p.kind) {
        case DatatypePayloadKind::LeftShoulder:
          return "<Datatype type=\"leftshoulder\" a=\"" + num(*p.a) + "\" b=\"" + num(*p.b) + "\" />";
        case DatatypePayloadKind::RightShoulder:
          return "<Datatype type=\"rightshoulder\" a=\"" + num(*p.a) + "\" b=\"" + num(*p.b) + "\" />";
        case DatatypePayloadKind::Triangular:
          return "<Datatype type=\"triangular\" a=\"" + num(*p.a) + "\" b=\"" + num(*p.b) + "\" c=\"" +
                 num(*p.c) + "\" />";
        case DatatypePayloadKind::Trapezoidal:
          return "<Datatype type=\"trapezoidal\" a=\"" + num(*p.a) + "\" b=\"" + num(*p.b) + "\" c=\"" +
                 num(*p.c) + "\" d=\"" + num(*p.d) + "\" />";
        case DatatypePayloadKind::Modified:
          return "<Datatype type=\"modified\" modifier=\"" + p.modifier + "\" base=\"" + p.base + "\" />";
      }
      return "";
    }
    std::string operator()(const ConceptPayload& p) const {
      switch (p.kind) {
        case ConceptPayloadKind::Modified:
          return "<Concept type=\"modified\" modifier=\"" + p.modifier + "\" base=\"" + p.base + "\" />";
        case ConceptPayloadKind::Weighted:
          return "<Concept type=\"weighted\" value=\"" + num(*p.value) + "\" base=\"" + p.base + "\" />";
        case ConceptPayloadKind::Nominal:
          return "<Concept type=\"nominal\" value=\"" + num(*p.value) + "\" individual=\"" + p.individual +
                 "\" />";
        case ConceptPayloadKind::WeightedSum: {
          std::string out = "<Concept type=\"weightedSum\">";
          for (const auto& s : p.summands)
            out += "<Concept type=\"weighted\" value=\"" + num(s.value) + "\" base=\"" + s.base + "\" />";
          return out + "</Concept>";
        }
      }
      return "";
    }
    std::string operator()(const RolePayload& p) const {
      return "<Role type=\"modified\" modifier=\"" + p.modifier + "\" base=\"" + p.base + "\" />";
    }
    std::string operator()(const AxiomPayload& p) const {
      if (p.degree == 1) return "";
      return "<Degree value=\"" + num(p.degree) + "\" />";
    }
    std::string operator()(const OntologyPayload& p) const {
      return std::string("<FuzzyLogic logic=\"") + std::string(family_name(p.logic)) + "\" />";
    }
  };
  return std::visit(Visitor{}, a.payload);
}

}  // namespace

std::string serialize_annotation(const FuzzyAnnotation& a) {
  return "<fuzzyOwl2 fuzzyType=\"" + std::string(fuzzy_type_name(a.fuzzy_type)) + "\">" + serialize_payload(a) +
         "</fuzzyOwl2>";
}

namespace {

bool in_unit_closed(const Rat& v) { return v >= 0 && v <= 1; }
bool in_unit_half_open(const Rat& v) { return v > 0 && v <= 1; }

void check_iffs(const Rat& a, const Rat& b, const Rat& c, std::vector<Diagnostic>& out) {
  if ((b == 0) != (a == 1))
    out.push_back({diag::kModIffAB, Severity::Info, "",
                   "b = 0 iff a = 1 does not hold (a = " + num(a) + ", b = " + num(b) + ")"});
  if ((b == 1) != (c == 1))
    out.push_back({diag::kModIffBC, Severity::Info, "",
                   "b = 1 iff c = 1 does not hold (b = " + num(b) + ", c = " + num(c) + ")"});
}

}  // namespace

std::vector<Diagnostic> validate_local(const FuzzyAnnotation& a) {
  std::vector<Diagnostic> out;
  struct Visitor {
    std::vector<Diagnostic>& out;
    void operator()(const ModifierPayload& p) const {
      if (p.kind == ModifierKind::Linear) {
        if (!in_unit_half_open(p.c)) {
          out.push_back({diag::kModParamRange, Severity::Error, "",
                         "linear modifier parameter c = " + num(p.c) + " outside (0,1]"});
          return;
        }
        check_iffs(p.c / (p.c + 1), Rat(1) / (p.c + 1), p.c, out);
        return;
      }
      bool in_range = true;
      for (const auto* v : {&*p.a, &*p.b, &p.c}) {
        if (!in_unit_closed(*v)) {
          out.push_back({diag::kModParamRange, Severity::Error, "",
                         "triangular modifier parameter " + num(*v) + " outside [0,1]"});
          in_range = false;
        }
      }
      if (!(*p.a <= *p.b && *p.b <= p.c)) {
        out.push_back({diag::kModBreakpointOrder, Severity::Error, "",
                       "breakpoints not ordered: a = " + num(*p.a) + ", b = " + num(*p.b) +
                           ", c = " + num(p.c)});
        return;
      }
      if (in_range) check_iffs(*p.a, *p.b, p.c, out);
    }
    void operator()(const DatatypePayload& p) const {
      if (p.kind == DatatypePayloadKind::Modified) return;
      auto bps = p.breakpoints();
      for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        if (bps[i] > bps[i + 1]) {
          std::string list;
          for (std::size_t k = 0; k < bps.size(); ++k) list += (k ? ", " : "") + num(bps[k]);
          out.push_back({diag::kDtBreakpointOrder, Severity::Error, "", "breakpoints not ordered: " + list});
          break;
        }
      }
    }
    void operator()(const ConceptPayload& p) const {
      switch (p.kind) {
        case ConceptPayloadKind::Modified: return;
        case ConceptPayloadKind::Weighted:
          if (!in_unit_half_open(*p.value))
            out.push_back({diag::kWeightRange, Severity::Error, "",
                           "weighted concept value " + num(*p.value) + " outside (0,1]"});
          return;
        case ConceptPayloadKind::Nominal:
          if (!in_unit_half_open(*p.value))
            out.push_back({diag::kNominalDegreeRange, Severity::Error, "",
                           "nominal value " + num(*p.value) + " outside (0,1]"});
          return;
        case ConceptPayloadKind::WeightedSum: {
          if (p.summands.size() < 2)
            out.push_back({diag::kWsumTooFew, Severity::Error, "",
                           "k = " + std::to_string(p.summands.size()) + " < 2"});
          Rat sum = 0;
          for (const auto& s : p.summands) {
            if (!in_unit_half_open(s.value))
              out.push_back({diag::kWeightRange, Severity::Error, "",
                             "weight " + num(s.value) + " of " + s.base + " outside (0,1]"});
            sum += s.value;
          }
          if (sum > 1)
            out.push_back({diag::kWsumWeightOverflow, Severity::Error, "", "weights sum " + num(sum) + " > 1"});
          return;
        }
      }
    }
    void operator()(const RolePayload&) const {}
    void operator()(const AxiomPayload& p) const {
      if (!in_unit_half_open(p.degree))
        out.push_back(
            {diag::kAxiomDegreeRange, Severity::Error, "", "axiom degree " + num(p.degree) + " outside (0,1]"});
    }
    void operator()(const OntologyPayload&) const {}
  };
  std::visit(Visitor{out}, a.payload);
  return out;
}

ModifierDef modifier_payload_def(const ModifierPayload& p) {
  if (p.kind == ModifierKind::Linear) return ModifierDef::linear(p.c);
  return ModifierDef::triangular(*p.a, *p.b, p.c);
}

MembershipShape datatype_payload_shape(const DatatypePayload& p, const std::optional<Rat>& k1,
                                       const std::optional<Rat>& k2) {
  if (p.kind == DatatypePayloadKind::Modified)
    throw std::invalid_argument("modified datatype payload has no shape");
  auto bps = p.breakpoints();
  Rat lo = k1 ? *k1 : *std::min_element(bps.begin(), bps.end());
  Rat hi = k2 ? *k2 : *std::max_element(bps.begin(), bps.end());
  switch (p.kind) {
    case DatatypePayloadKind::LeftShoulder: return MembershipShape::left(lo, hi, *p.a, *p.b);
    case DatatypePayloadKind::RightShoulder: return MembershipShape::right(lo, hi, *p.a, *p.b);
    case DatatypePayloadKind::Triangular: return MembershipShape::triangular(lo, hi, *p.a, *p.b, *p.c);
    case DatatypePayloadKind::Trapezoidal: return MembershipShape::trapezoidal(lo, hi, *p.a, *p.b, *p.c, *p.d);
    case DatatypePayloadKind::Modified: break;
  }
  throw std::invalid_argument("unreachable datatype payload kind");
}

}  // namespace fowl
