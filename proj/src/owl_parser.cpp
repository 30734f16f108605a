#include "fowl/owl_parser.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace fowl::owl {

namespace {

enum class TokKind { LParen, RParen, Name, String, Number, CaretCaret, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;  // unescaped content for String
  SourceLoc loc;
};

struct SyntaxError {
  SourceLoc loc;
  std::string message;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.loc = loc();
    if (pos_ >= text_.size()) {
      t.kind = TokKind::End;
      return t;
    }
    char ch = text_[pos_];
    if (ch == '(') {
      advance();
      t.kind = TokKind::LParen;
      return t;
    }
    if (ch == ')') {
      advance();
      t.kind = TokKind::RParen;
      return t;
    }
    if (ch == '"') {
      advance();
      t.kind = TokKind::String;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        char c = text_[pos_];
        if (c == '\\') {
          advance();
          if (pos_ >= text_.size()) break;
          char esc = text_[pos_];
          if (esc != '"' && esc != '\\') throw SyntaxError{loc(), "unknown escape sequence in string literal"};
          t.text += esc;
          advance();
          continue;
        }
        t.text += c;
        advance();
      }
      if (pos_ >= text_.size()) throw SyntaxError{t.loc, "unterminated string literal"};
      advance();  // closing quote
      return t;
    }
    if (ch == '^') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '^') {
        advance();
        advance();
        t.kind = TokKind::CaretCaret;
        return t;
      }
      throw SyntaxError{t.loc, "stray '^'"};
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      t.kind = TokKind::Number;
      std::size_t start = pos_;
      if (ch == '-' || ch == '+') advance();
      bool any = false;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance();
        any = true;
      }
      if (pos_ < text_.size() && text_[pos_] == '.') {
        advance();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          advance();
          any = true;
        }
      }
      if (!any) throw SyntaxError{t.loc, "malformed number"};
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      t.kind = TokKind::Name;
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':')
          advance();
        else
          break;
      }
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    throw SyntaxError{t.loc, std::string("unexpected character '") + ch + "'"};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  SourceLoc loc() const { return SourceLoc{line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
};

const std::unordered_map<std::string_view, AxiomKind>& axiom_kinds() {
  static const std::unordered_map<std::string_view, AxiomKind> kinds = {
      {"ClassAssertion", AxiomKind::ClassAssertion},
      {"ObjectPropertyAssertion", AxiomKind::ObjectPropertyAssertion},
      {"NegativeObjectPropertyAssertion", AxiomKind::NegativeObjectPropertyAssertion},
      {"DataPropertyAssertion", AxiomKind::DataPropertyAssertion},
      {"NegativeDataPropertyAssertion", AxiomKind::NegativeDataPropertyAssertion},
      {"SameIndividual", AxiomKind::SameIndividual},
      {"DifferentIndividuals", AxiomKind::DifferentIndividuals},
      {"SubClassOf", AxiomKind::SubClassOf},
      {"EquivalentClasses", AxiomKind::EquivalentClasses},
      {"DisjointClasses", AxiomKind::DisjointClasses},
      {"DisjointUnion", AxiomKind::DisjointUnion},
      {"SubObjectPropertyOf", AxiomKind::SubObjectPropertyOf},
      {"SubDataPropertyOf", AxiomKind::SubDataPropertyOf},
      {"EquivalentObjectProperties", AxiomKind::EquivalentObjectProperties},
      {"EquivalentDataProperties", AxiomKind::EquivalentDataProperties},
      {"ObjectPropertyDomain", AxiomKind::ObjectPropertyDomain},
      {"ObjectPropertyRange", AxiomKind::ObjectPropertyRange},
      {"DataPropertyDomain", AxiomKind::DataPropertyDomain},
      {"DataPropertyRange", AxiomKind::DataPropertyRange},
      {"InverseObjectProperties", AxiomKind::InverseObjectProperties},
      {"FunctionalObjectProperty", AxiomKind::FunctionalObjectProperty},
      {"InverseFunctionalObjectProperty", AxiomKind::InverseFunctionalObjectProperty},
      {"TransitiveObjectProperty", AxiomKind::TransitiveObjectProperty},
      {"DisjointObjectProperties", AxiomKind::DisjointObjectProperties},
      {"DisjointDataProperties", AxiomKind::DisjointDataProperties},
      {"ReflexiveObjectProperty", AxiomKind::ReflexiveObjectProperty},
      {"IrreflexiveObjectProperty", AxiomKind::IrreflexiveObjectProperty},
      {"SymmetricObjectProperty", AxiomKind::SymmetricObjectProperty},
      {"AsymmetricObjectProperty", AxiomKind::AsymmetricObjectProperty},
      {"FunctionalDataProperty", AxiomKind::FunctionalDataProperty},
  };
  return kinds;
}

bool is_class_constructor(std::string_view name) {
  static const std::unordered_map<std::string_view, int> ctors = {
      {"ObjectIntersectionOf", 0}, {"ObjectUnionOf", 0},       {"ObjectComplementOf", 0},
      {"ObjectAllValuesFrom", 0},  {"ObjectSomeValuesFrom", 0}, {"ObjectHasValue", 0},
      {"ObjectOneOf", 0},          {"ObjectHasSelf", 0},        {"ObjectExistsSelf", 0},
      {"ObjectMinCardinality", 0}, {"ObjectMaxCardinality", 0}, {"ObjectExactCardinality", 0},
      {"DataAllValuesFrom", 0},    {"DataSomeValuesFrom", 0},   {"DataHasValue", 0},
      {"DataMinCardinality", 0},   {"DataMaxCardinality", 0},   {"DataExactCardinality", 0},
  };
  return ctors.count(name) > 0;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  ParseResult run() {
    ParseResult result;
    doc_ = &result.document;
    diags_ = &result.diagnostics;
    try {
      shift();
      if (at_name("Ontology") && peek_is_lparen()) {
        shift();  // Ontology
        expect(TokKind::LParen, "after Ontology");
        if (cur_.kind == TokKind::Name && !next_is_lparen()) {
          doc_->ontology_name = cur_.text;
          shift();
        }
        while (cur_.kind != TokKind::RParen && cur_.kind != TokKind::End) statement();
        expect(TokKind::RParen, "to close Ontology");
        if (cur_.kind != TokKind::End) error_here("trailing content after Ontology(...)");
      } else {
        while (cur_.kind != TokKind::End) statement();
      }
    } catch (const SyntaxError& e) {
      report(e);
    }
    doc_ = nullptr;
    diags_ = nullptr;
    return result;
  }

 private:
  Lexer lexer_;
  Token cur_, lookahead_;
  bool has_lookahead_ = false;
  OwlDocument* doc_ = nullptr;
  std::vector<Diagnostic>* diags_ = nullptr;

  // -- token plumbing ------------------------------------------------------

  void shift() {
    if (has_lookahead_) {
      cur_ = lookahead_;
      has_lookahead_ = false;
    } else {
      cur_ = lexer_.next();
    }
  }

  const Token& lookahead() {
    if (!has_lookahead_) {
      lookahead_ = lexer_.next();
      has_lookahead_ = true;
    }
    return lookahead_;
  }

  bool at_name(std::string_view n) const { return cur_.kind == TokKind::Name && cur_.text == n; }
  bool peek_is_lparen() { return lookahead().kind == TokKind::LParen; }
  bool next_is_lparen() { return lookahead().kind == TokKind::LParen; }

  [[noreturn]] void error_here(const std::string& message) { throw SyntaxError{cur_.loc, message}; }

  void expect(TokKind k, const char* what) {
    if (cur_.kind != k) error_here(std::string("expected ") + token_kind_name(k) + " " + what);
    shift();
  }

  static const char* token_kind_name(TokKind k) {
    switch (k) {
      case TokKind::LParen: return "'('";
      case TokKind::RParen: return "')'";
      case TokKind::Name: return "a name";
      case TokKind::String: return "a string literal";
      case TokKind::Number: return "a number";
      case TokKind::CaretCaret: return "'^^'";
      case TokKind::End: return "end of input";
    }
    return "?";
  }

  std::string take_name(const char* what) {
    if (cur_.kind != TokKind::Name) error_here(std::string("expected a name ") + what);
    std::string n = cur_.text;
    shift();
    return n;
  }

  void report(const SyntaxError& e) {
    diags_->push_back({diag::kOwlParse, Severity::Error, e.loc.str(), e.message});
  }

  // Skips the remainder of a parenthesised statement after an error. A close
  // paren at depth 0 belongs to the enclosing Ontology(...) and stays put.
  void recover_statement() {
    int depth = 0;
    bool entered = false;
    while (cur_.kind != TokKind::End) {
      if (cur_.kind == TokKind::LParen) {
        ++depth;
        entered = true;
      } else if (cur_.kind == TokKind::RParen) {
        if (depth == 0) return;
        --depth;
        if (depth == 0 && entered) {
          shift();
          return;
        }
      }
      shift();
    }
  }

  // -- statements ----------------------------------------------------------

  void statement() {
    if (cur_.kind != TokKind::Name) {
      SyntaxError e{cur_.loc, "expected a declaration, axiom or Annotation"};
      report(e);
      shift();
      return;
    }
    std::string head = cur_.text;
    SourceLoc loc = cur_.loc;
    try {
      if (head == "Annotation") {
        auto [prop, value] = parse_annotation_form();
        if (prop == "fuzzyLabel")
          doc_->ontology_fuzzy_labels.push_back(value);
        else
          doc_->ontology_other_annotations.emplace_back(prop, value);
        return;
      }
      if (head == "Class" || head == "Datatype" || head == "ObjectProperty" || head == "DataProperty" ||
          head == "DatatypeProperty" || head == "NamedIndividual" || head == "Individual") {
        parse_declaration(head, loc);
        return;
      }
      if (head == "DatatypeDefinition") {
        parse_datatype_definition(loc);
        return;
      }
      auto it = axiom_kinds().find(head);
      if (it == axiom_kinds().end()) throw SyntaxError{loc, "unknown construct name '" + head + "'"};
      parse_axiom(it->second, loc);
    } catch (const SyntaxError& e) {
      report(e);
      recover_statement();
    }
  }

  // Annotation ( property "literal" )
  std::pair<std::string, std::string> parse_annotation_form() {
    shift();  // Annotation
    expect(TokKind::LParen, "after Annotation");
    std::string prop = take_name("of the annotation property");
    if (cur_.kind != TokKind::String) error_here("expected the annotation value as a string literal");
    std::string value = cur_.text;
    shift();
    expect(TokKind::RParen, "to close Annotation");
    return {prop, value};
  }

  bool at_annotation() { return at_name("Annotation") && peek_is_lparen(); }

  void collect_annotation(std::vector<std::string>& fuzzy, std::vector<AnnotationPair>& other) {
    auto [prop, value] = parse_annotation_form();
    if (prop == "fuzzyLabel")
      fuzzy.push_back(value);
    else
      other.emplace_back(prop, value);
  }

  void parse_declaration(const std::string& head, SourceLoc loc) {
    shift();  // head
    expect(TokKind::LParen, "after the declaration keyword");
    Declaration decl;
    decl.loc = loc;
    bool have_name = false;
    while (cur_.kind != TokKind::RParen) {
      if (at_annotation()) {
        collect_annotation(decl.fuzzy_labels, decl.other_annotations);
        continue;
      }
      if (cur_.kind == TokKind::Name && !have_name) {
        decl.name = cur_.text;
        have_name = true;
        shift();
        continue;
      }
      error_here("unexpected token in " + head + "(...)");
    }
    shift();  // ')'
    if (!have_name) throw SyntaxError{loc, head + "(...) is missing the declared name"};
    if (head == "Class")
      doc_->classes.push_back(std::move(decl));
    else if (head == "Datatype")
      doc_->datatypes.push_back(std::move(decl));
    else if (head == "ObjectProperty")
      doc_->object_properties.push_back(std::move(decl));
    else if (head == "DataProperty" || head == "DatatypeProperty")
      doc_->data_properties.push_back(std::move(decl));
    else
      doc_->individuals.push_back(std::move(decl));
  }

  Rat parse_typed_or_plain_number(const char* what) {
    if (cur_.kind == TokKind::Number) {
      auto v = parse_decimal(cur_.text);
      if (!v) error_here("malformed number");
      shift();
      return *v;
    }
    if (cur_.kind == TokKind::String) {
      std::string lex = cur_.text;
      SourceLoc loc = cur_.loc;
      shift();
      if (cur_.kind == TokKind::CaretCaret) {
        shift();
        take_name("of the literal datatype");
      }
      auto v = parse_decimal(lex);
      if (!v) throw SyntaxError{loc, std::string("literal is not a decimal number ") + what};
      return *v;
    }
    error_here(std::string("expected a literal ") + what);
  }

  void parse_datatype_definition(SourceLoc loc) {
    shift();  // DatatypeDefinition
    expect(TokKind::LParen, "after DatatypeDefinition");
    DatatypeDefinition def;
    def.loc = loc;
    bool have_name = false;
    while (cur_.kind != TokKind::RParen) {
      if (at_annotation()) {
        collect_annotation(def.fuzzy_labels, def.other_annotations);
        continue;
      }
      if (!have_name) {
        def.name = take_name("of the defined datatype");
        have_name = true;
        continue;
      }
      if (at_name("DatatypeRestriction")) {
        shift();
        expect(TokKind::LParen, "after DatatypeRestriction");
        def.base_type = take_name("of the base type");
        while (cur_.kind != TokKind::RParen) {
          std::string facet = take_name("of the facet");
          Rat value = parse_typed_or_plain_number("as the facet value");
          if (facet == "xsd:minInclusive")
            def.min_inclusive = value;
          else if (facet == "xsd:maxInclusive")
            def.max_inclusive = value;
          else
            def.unsupported_facets.push_back(facet);
        }
        shift();  // ')'
        continue;
      }
      if (cur_.kind == TokKind::Name && def.base_type.empty()) {
        def.base_type = cur_.text;
        shift();
        continue;
      }
      error_here("unexpected token in DatatypeDefinition(...)");
    }
    shift();  // ')'
    if (!have_name) throw SyntaxError{loc, "DatatypeDefinition(...) is missing the defined name"};
    doc_->datatype_definitions.push_back(std::move(def));
  }

  // -- expressions ---------------------------------------------------------

  ObjectProperty parse_object_property() {
    if (at_name("ObjectInverseOf")) {
      shift();
      expect(TokKind::LParen, "after ObjectInverseOf");
      ObjectProperty p{ObjectProperty::Kind::Inverse, take_name("of the inverted property")};
      expect(TokKind::RParen, "to close ObjectInverseOf");
      return p;
    }
    if (at_name("TopObjectProperty") || at_name("owl:topObjectProperty")) {
      shift();
      return ObjectProperty{ObjectProperty::Kind::Top, ""};
    }
    if (at_name("BottomObjectProperty") || at_name("owl:bottomObjectProperty")) {
      shift();
      return ObjectProperty{ObjectProperty::Kind::Bottom, ""};
    }
    return ObjectProperty{ObjectProperty::Kind::Named, take_name("of an object property")};
  }

  DataProperty parse_data_property() {
    if (at_name("TopDataProperty") || at_name("owl:topDataProperty")) {
      shift();
      return DataProperty{DataProperty::Kind::Top, ""};
    }
    if (at_name("BottomDataProperty") || at_name("owl:bottomDataProperty")) {
      shift();
      return DataProperty{DataProperty::Kind::Bottom, ""};
    }
    return DataProperty{DataProperty::Kind::Named, take_name("of a data property")};
  }

  DataRange parse_data_range() {
    std::string n = take_name("of a data range");
    if (n.rfind("xsd:", 0) == 0) return DataRange{DataRange::Kind::Builtin, n};
    return DataRange{DataRange::Kind::Named, n};
  }

  unsigned parse_cardinality() {
    if (cur_.kind != TokKind::Number) error_here("expected a cardinality");
    auto v = parse_decimal(cur_.text);
    if (!v || boost::multiprecision::denominator(*v) != 1 || *v < 0 || *v > 1000000)
      error_here("cardinality must be a non-negative integer (at most 1000000)");
    shift();
    return static_cast<unsigned>(boost::multiprecision::numerator(*v).convert_to<unsigned long>());
  }

  ClassExprPtr parse_class_expr() {
    if (cur_.kind != TokKind::Name) error_here("expected a class expression");
    std::string head = cur_.text;
    if (head == "owl:Thing") {
      shift();
      auto e = std::make_shared<ClassExpr>();
      e->kind = ClassExpr::Kind::Thing;
      return e;
    }
    if (head == "owl:Nothing") {
      shift();
      auto e = std::make_shared<ClassExpr>();
      e->kind = ClassExpr::Kind::Nothing;
      return e;
    }
    if (!is_class_constructor(head)) {
      shift();
      return make_named_class(head);
    }
    shift();
    expect(TokKind::LParen, "after the class constructor");
    auto e = std::make_shared<ClassExpr>();
    if (head == "ObjectIntersectionOf" || head == "ObjectUnionOf") {
      e->kind = head == "ObjectIntersectionOf" ? ClassExpr::Kind::IntersectionOf : ClassExpr::Kind::UnionOf;
      while (cur_.kind != TokKind::RParen) e->operands.push_back(parse_class_expr());
      if (e->operands.size() < 2) error_here(head + " needs at least two operands");
    } else if (head == "ObjectComplementOf") {
      e->kind = ClassExpr::Kind::ComplementOf;
      e->operands.push_back(parse_class_expr());
    } else if (head == "ObjectAllValuesFrom" || head == "ObjectSomeValuesFrom") {
      e->kind = head == "ObjectAllValuesFrom" ? ClassExpr::Kind::AllValuesFrom : ClassExpr::Kind::SomeValuesFrom;
      e->obj_prop = parse_object_property();
      e->operands.push_back(parse_class_expr());
    } else if (head == "ObjectHasValue") {
      e->kind = ClassExpr::Kind::HasValue;
      e->obj_prop = parse_object_property();
      e->individuals.push_back(take_name("of the individual"));
    } else if (head == "ObjectOneOf") {
      e->kind = ClassExpr::Kind::OneOf;
      while (cur_.kind != TokKind::RParen) e->individuals.push_back(take_name("of an individual"));
      if (e->individuals.empty()) error_here("ObjectOneOf needs at least one individual");
    } else if (head == "ObjectHasSelf" || head == "ObjectExistsSelf") {
      e->kind = ClassExpr::Kind::HasSelf;
      e->obj_prop = parse_object_property();
    } else if (head == "ObjectMinCardinality" || head == "ObjectMaxCardinality" ||
               head == "ObjectExactCardinality") {
      e->kind = head == "ObjectMinCardinality"   ? ClassExpr::Kind::MinCardinality
                : head == "ObjectMaxCardinality" ? ClassExpr::Kind::MaxCardinality
                                                 : ClassExpr::Kind::ExactCardinality;
      e->cardinality = parse_cardinality();
      e->obj_prop = parse_object_property();
      if (cur_.kind != TokKind::RParen) {
        e->qualified = true;
        e->operands.push_back(parse_class_expr());
      }
    } else if (head == "DataAllValuesFrom" || head == "DataSomeValuesFrom") {
      e->kind =
          head == "DataAllValuesFrom" ? ClassExpr::Kind::DataAllValuesFrom : ClassExpr::Kind::DataSomeValuesFrom;
      e->data_prop = parse_data_property();
      e->data_range = parse_data_range();
    } else if (head == "DataHasValue") {
      e->kind = ClassExpr::Kind::DataHasValue;
      e->data_prop = parse_data_property();
      e->literal = parse_typed_or_plain_number("as the value");
    } else {  // data cardinalities
      e->kind = head == "DataMinCardinality"   ? ClassExpr::Kind::DataMinCardinality
                : head == "DataMaxCardinality" ? ClassExpr::Kind::DataMaxCardinality
                                               : ClassExpr::Kind::DataExactCardinality;
      e->cardinality = parse_cardinality();
      e->data_prop = parse_data_property();
      if (cur_.kind != TokKind::RParen) {
        e->qualified = true;
        e->data_range = parse_data_range();
      }
    }
    expect(TokKind::RParen, "to close the class constructor");
    return e;
  }

  bool at_class_expression() {
    return cur_.kind == TokKind::Name &&
           (is_class_constructor(cur_.text) || cur_.text == "owl:Thing" || cur_.text == "owl:Nothing");
  }

  // -- axioms --------------------------------------------------------------

  void parse_axiom(AxiomKind kind, SourceLoc loc) {
    shift();  // kind name
    expect(TokKind::LParen, "after the axiom name");
    Axiom ax;
    ax.kind = kind;
    ax.loc = loc;

    // Annotations may appear at any argument position.
    auto skip_annotations = [&] {
      while (at_annotation()) collect_annotation(ax.fuzzy_labels, ax.other_annotations);
    };

    auto next_class = [&] {
      skip_annotations();
      ax.classes.push_back(parse_class_expr());
    };
    auto next_obj_prop = [&] {
      skip_annotations();
      ax.object_properties.push_back(parse_object_property());
    };
    auto next_data_prop = [&] {
      skip_annotations();
      ax.data_properties.push_back(parse_data_property());
    };
    auto next_individual = [&] {
      skip_annotations();
      ax.individuals.push_back(take_name("of an individual"));
    };

    skip_annotations();
    switch (kind) {
      case AxiomKind::ClassAssertion: {
        // Accepts both (CE a) and the individual-first spelling (a CE).
        if (at_class_expression()) {
          next_class();
          next_individual();
        } else {
          std::string first = take_name("in ClassAssertion");
          skip_annotations();
          if (at_class_expression()) {
            ax.individuals.push_back(first);
            next_class();
          } else {
            std::string second = take_name("in ClassAssertion");
            // Standard order (class first); may be swapped against the
            // declaration table when mapping to DL form.
            ax.classes.push_back(make_named_class(first));
            ax.individuals.push_back(second);
            ax.maybe_swapped = true;
          }
        }
        break;
      }
      case AxiomKind::ObjectPropertyAssertion:
      case AxiomKind::NegativeObjectPropertyAssertion:
        next_obj_prop();
        next_individual();
        next_individual();
        break;
      case AxiomKind::DataPropertyAssertion:
      case AxiomKind::NegativeDataPropertyAssertion:
        next_data_prop();
        next_individual();
        skip_annotations();
        ax.literal = parse_typed_or_plain_number("as the asserted value");
        break;
      case AxiomKind::SameIndividual:
      case AxiomKind::DifferentIndividuals:
        while (cur_.kind != TokKind::RParen) next_individual();
        if (ax.individuals.size() < 2) error_here("at least two individuals are required");
        break;
      case AxiomKind::SubClassOf:
        next_class();
        next_class();
        break;
      case AxiomKind::EquivalentClasses:
      case AxiomKind::DisjointClasses:
        while (cur_.kind != TokKind::RParen) next_class();
        if (ax.classes.size() < 2) error_here("at least two class expressions are required");
        break;
      case AxiomKind::DisjointUnion:
        while (cur_.kind != TokKind::RParen) next_class();
        if (ax.classes.size() < 3) error_here("DisjointUnion needs the union class and at least two parts");
        break;
      case AxiomKind::SubObjectPropertyOf: {
        skip_annotations();
        if ((at_name("ObjectPropertyChain") || at_name("subObjectPropertyChain")) && peek_is_lparen()) {
          ax.has_chain = true;
          shift();
          expect(TokKind::LParen, "after the chain keyword");
          while (cur_.kind != TokKind::RParen) ax.object_properties.push_back(parse_object_property());
          expect(TokKind::RParen, "to close the chain");
          if (ax.object_properties.empty()) error_here("empty property chain");
        } else {
          ax.object_properties.push_back(parse_object_property());
        }
        next_obj_prop();  // super role, stored last
        break;
      }
      case AxiomKind::SubDataPropertyOf:
        next_data_prop();
        next_data_prop();
        break;
      case AxiomKind::EquivalentObjectProperties:
        while (cur_.kind != TokKind::RParen) next_obj_prop();
        if (ax.object_properties.size() < 2) error_here("at least two properties are required");
        break;
      case AxiomKind::EquivalentDataProperties:
        while (cur_.kind != TokKind::RParen) next_data_prop();
        if (ax.data_properties.size() < 2) error_here("at least two properties are required");
        break;
      case AxiomKind::ObjectPropertyDomain:
      case AxiomKind::ObjectPropertyRange:
        next_obj_prop();
        next_class();
        break;
      case AxiomKind::DataPropertyDomain:
        next_data_prop();
        next_class();
        break;
      case AxiomKind::DataPropertyRange:
        next_data_prop();
        skip_annotations();
        ax.data_range = parse_data_range();
        break;
      case AxiomKind::InverseObjectProperties:
        next_obj_prop();
        next_obj_prop();
        break;
      case AxiomKind::FunctionalObjectProperty:
      case AxiomKind::InverseFunctionalObjectProperty:
      case AxiomKind::TransitiveObjectProperty:
      case AxiomKind::ReflexiveObjectProperty:
      case AxiomKind::IrreflexiveObjectProperty:
      case AxiomKind::SymmetricObjectProperty:
      case AxiomKind::AsymmetricObjectProperty:
        next_obj_prop();
        break;
      case AxiomKind::DisjointObjectProperties:
        while (cur_.kind != TokKind::RParen) next_obj_prop();
        if (ax.object_properties.size() < 2) error_here("at least two properties are required");
        break;
      case AxiomKind::DisjointDataProperties:
        while (cur_.kind != TokKind::RParen) next_data_prop();
        if (ax.data_properties.size() < 2) error_here("at least two properties are required");
        break;
      case AxiomKind::FunctionalDataProperty:
        next_data_prop();
        break;
    }
    skip_annotations();
    expect(TokKind::RParen, "to close the axiom");
    doc_->axioms.push_back(std::move(ax));
  }
};

}  // namespace

ParseResult parse_document(std::string_view text) { return Parser(text).run(); }

}  // namespace fowl::owl
