#include "fowl/model_parser.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fowl {

// ---------------------------------------------------------------------------
// FiniteInterpretation

bool FiniteInterpretation::has_element(const std::string& e) const {
  return std::find(domain.begin(), domain.end(), e) != domain.end();
}

Degree FiniteInterpretation::concept_degree(const std::string& name, const std::string& x) const {
  auto it = concept_table.find({name, x});
  return it == concept_table.end() ? Degree::zero() : it->second;
}

Degree FiniteInterpretation::role_degree(const std::string& name, const std::string& x,
                                         const std::string& y) const {
  auto it = role_table.find({name, x, y});
  return it == role_table.end() ? Degree::zero() : it->second;
}

Degree FiniteInterpretation::concrete_role_degree(const std::string& name, const std::string& x,
                                                  const Rat& v) const {
  auto it = concrete_role_table.find({name, x, v});
  return it == concrete_role_table.end() ? Degree::zero() : it->second;
}

// ---------------------------------------------------------------------------
// Template parsing

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line) : line_(line) {}

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  bool eol() {
    skip_ws();
    return pos_ >= line_.size();
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.size()) {
      char c = line_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' || c == '=') break;
      ++pos_;
    }
    return std::string(line_.substr(start, pos_ - start));
  }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
};

struct LineError {
  std::string message;
};

}  // namespace

struct ModelTemplateParser {
  ModelTemplate model;
  std::vector<Diagnostic> diags;
  int line_no = 0;

  bool empty_domain() const { return model.domain_.empty(); }

  void fail(const std::string& message) { throw LineError{message}; }

  ModelTemplate::Slot slot(const std::string& token) {
    if (token.empty()) fail("expected a number or $parameter");
    if (token[0] == '$') {
      std::string name = token.substr(1);
      if (name.empty()) fail("empty parameter name");
      if (std::find(model.parameters_.begin(), model.parameters_.end(), name) == model.parameters_.end())
        model.parameters_.push_back(name);
      ModelTemplate::Slot s;
      s.param = name;
      return s;
    }
    auto v = parse_decimal(token);
    if (!v) fail("'" + token + "' is not a decimal number");
    ModelTemplate::Slot s;
    s.literal = *v;
    return s;
  }

  void require_element(const std::string& e) {
    if (std::find(model.domain_.begin(), model.domain_.end(), e) == model.domain_.end())
      fail("element '" + e + "' is not in the domain");
  }

  void line(std::string_view text) {
    auto hash = text.find('#');
    if (hash != std::string_view::npos) text = text.substr(0, hash);
    LineScanner s(text);
    if (s.eol()) return;
    std::string keyword = s.word();
    if (keyword == "domain") {
      while (!s.eol()) {
        std::string e = s.word();
        if (e.empty()) fail("malformed domain element");
        if (std::find(model.domain_.begin(), model.domain_.end(), e) != model.domain_.end())
          fail("duplicate domain element '" + e + "'");
        model.domain_.push_back(e);
      }
      return;
    }
    if (keyword == "values") {
      while (!s.eol()) model.values_.push_back(slot(s.word()));
      return;
    }
    if (keyword == "individual") {
      std::string name = s.word();
      if (!s.accept('=')) fail("expected '=' after the individual name");
      std::string element = s.word();
      require_element(element);
      model.individuals_.emplace_back(name, element);
      if (!s.eol()) fail("trailing content after individual mapping");
      return;
    }
    if (keyword == "concept") {
      ModelTemplate::ConceptEntry e;
      e.name = s.word();
      if (!s.accept('(')) fail("expected '(' after the concept name");
      e.element = s.word();
      require_element(e.element);
      if (!s.accept(')')) fail("expected ')'");
      if (!s.accept('=')) fail("expected '='");
      e.degree = slot(s.word());
      if (!s.eol()) fail("trailing content after concept entry");
      model.concepts_.push_back(std::move(e));
      return;
    }
    if (keyword == "role") {
      ModelTemplate::RoleEntry e;
      e.name = s.word();
      if (!s.accept('(')) fail("expected '(' after the role name");
      e.from = s.word();
      require_element(e.from);
      if (!s.accept(',')) fail("expected ','");
      e.to = s.word();
      require_element(e.to);
      if (!s.accept(')')) fail("expected ')'");
      if (!s.accept('=')) fail("expected '='");
      e.degree = slot(s.word());
      if (!s.eol()) fail("trailing content after role entry");
      model.roles_.push_back(std::move(e));
      return;
    }
    if (keyword == "crole") {
      ModelTemplate::ConcreteRoleEntry e;
      e.name = s.word();
      if (!s.accept('(')) fail("expected '(' after the concrete role name");
      e.element = s.word();
      require_element(e.element);
      if (!s.accept(',')) fail("expected ','");
      e.value = slot(s.word());
      if (!s.accept(')')) fail("expected ')'");
      if (!s.accept('=')) fail("expected '='");
      e.degree = slot(s.word());
      if (!s.eol()) fail("trailing content after crole entry");
      model.concrete_roles_.push_back(std::move(e));
      return;
    }
    fail("unknown directive '" + keyword + "'");
  }
};

ModelTemplateResult parse_model_template(std::string_view text) {
  ModelTemplateParser p;
  ModelTemplateResult result;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
    ++p.line_no;
    try {
      p.line(line);
    } catch (const LineError& e) {
      result.diagnostics.push_back(
          {diag::kModelParse, Severity::Error, "line " + std::to_string(p.line_no), e.message});
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (p.empty_domain())
    result.diagnostics.push_back({diag::kModelParse, Severity::Error, "", "the model declares no domain"});
  result.model = std::move(p.model);
  result.diagnostics.insert(result.diagnostics.end(), p.diags.begin(), p.diags.end());
  return result;
}

FiniteInterpretation ModelTemplate::instantiate(const std::map<std::string, Rat>& assignment) const {
  auto resolve = [&](const Slot& s) -> Rat {
    if (s.param.empty()) return s.literal;
    auto it = assignment.find(s.param);
    if (it == assignment.end()) throw std::invalid_argument("no value for parameter $" + s.param);
    return it->second;
  };

  FiniteInterpretation interp;
  interp.domain = domain_;
  for (const auto& v : values_) {
    Rat value = resolve(v);
    if (std::find(interp.values.begin(), interp.values.end(), value) == interp.values.end())
      interp.values.push_back(std::move(value));
  }
  for (const auto& [name, element] : individuals_) interp.individual_map[name] = element;
  for (const auto& e : concepts_) {
    interp.bound_concepts.insert(e.name);
    interp.concept_table[{e.name, e.element}] = Degree(resolve(e.degree));
  }
  for (const auto& e : roles_) {
    interp.bound_roles.insert(e.name);
    interp.role_table[{e.name, e.from, e.to}] = Degree(resolve(e.degree));
  }
  for (const auto& e : concrete_roles_) {
    interp.bound_concrete_roles.insert(e.name);
    interp.concrete_role_table[{e.name, e.element, resolve(e.value)}] = Degree(resolve(e.degree));
  }
  return interp;
}

ModelParseResult parse_model(std::string_view text) {
  ModelParseResult result;
  ModelTemplateResult tmpl = parse_model_template(text);
  result.diagnostics = std::move(tmpl.diagnostics);
  if (!tmpl.model.parameters().empty()) {
    std::string names;
    for (const auto& p : tmpl.model.parameters()) names += (names.empty() ? "$" : ", $") + p;
    result.diagnostics.push_back({diag::kModelParse, Severity::Error, "",
                                  "model contains unbound parameters: " + names});
    return result;
  }
  if (!result.ok()) return result;
  try {
    result.interpretation = tmpl.model.instantiate({});
  } catch (const std::exception& e) {
    result.diagnostics.push_back({diag::kModelParse, Severity::Error, "", e.what()});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Grid parsing

std::size_t GridSpec::point_count() const {
  std::size_t n = 1;
  for (const auto& p : params) n *= p.values.size();
  return params.empty() ? 0 : n;
}

std::map<std::string, Rat> GridSpec::assignment(std::size_t index) const {
  std::map<std::string, Rat> out;
  for (std::size_t i = params.size(); i-- > 0;) {
    const Param& p = params[i];
    out[p.name] = p.values[index % p.values.size()];
    index /= p.values.size();
  }
  return out;
}

GridParseResult parse_grid(std::string_view text) {
  GridParseResult result;
  int line_no = 0;
  std::size_t start = 0;
  auto fail = [&](const std::string& message) {
    result.diagnostics.push_back({diag::kGridParse, Severity::Error, "line " + std::to_string(line_no), message});
  };
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view raw = end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    LineScanner s(raw);
    if (!s.eol()) {
      std::string keyword = s.word();
      if (keyword != "param") {
        fail("unknown directive '" + keyword + "'");
      } else {
        GridSpec::Param param;
        param.name = s.word();
        if (param.name.empty() || !s.accept('=')) {
          fail("expected 'param name=...'");
        } else {
          // lo:hi:step or v1,v2,...
          std::string first = s.word();
          auto split = [&](const std::string& token, char sep) {
            std::vector<std::string> parts;
            std::size_t from = 0;
            while (true) {
              auto at = token.find(sep, from);
              parts.push_back(token.substr(from, at - from));
              if (at == std::string::npos) break;
              from = at + 1;
            }
            return parts;
          };
          bool ok = true;
          if (first.find(':') != std::string::npos) {
            auto parts = split(first, ':');
            std::optional<Rat> lo, hi, step;
            if (parts.size() == 3) {
              lo = parse_decimal(parts[0]);
              hi = parse_decimal(parts[1]);
              step = parse_decimal(parts[2]);
            }
            if (!lo || !hi || !step || *step <= 0 || *hi < *lo) {
              fail("malformed range '" + first + "' (expected lo:hi:step with step > 0)");
              ok = false;
            } else {
              for (Rat v = *lo; v <= *hi; v += *step) param.values.push_back(v);
            }
          } else {
            std::string list = first;
            while (s.accept(',')) list += "," + s.word();
            for (const auto& item : split(list, ',')) {
              auto v = parse_decimal(item);
              if (!v) {
                fail("'" + item + "' is not a decimal number");
                ok = false;
                break;
              }
              param.values.push_back(*v);
            }
          }
          if (ok && !s.eol()) fail("trailing content after param");
          if (ok && param.values.empty()) fail("parameter '" + param.name + "' has an empty range");
          bool duplicate = std::any_of(result.grid.params.begin(), result.grid.params.end(),
                                       [&](const GridSpec::Param& p) { return p.name == param.name; });
          if (duplicate) fail("duplicate parameter '" + param.name + "'");
          if (ok && !duplicate) result.grid.params.push_back(std::move(param));
        }
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return result;
}

}  // namespace fowl
