// fowl — validate, translate, evaluate and maximize fuzzy OWL 2 ontologies
// encoded with fuzzyLabel annotations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fowl/evaluator.hpp"
#include "fowl/kb_builder.hpp"
#include "fowl/owl_parser.hpp"
#include "fowl/translator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitUnsupported = 3;

struct CliError {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitIo, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{kExitIo, "cannot write '" + out_path + "'"};
  out << text;
}

void print_diagnostics(const std::vector<fowl::Diagnostic>& diags, const std::string& format) {
  for (const auto& d : diags) {
    if (format == "tsv")
      std::cout << d.tsv() << "\n";
    else
      std::cout << fowl::severity_name(d.severity) << "[" << d.code << "] " << d.location << ": " << d.message
                << "\n";
  }
}

int diag_exit(const std::vector<fowl::Diagnostic>& diags, bool strict) {
  if (fowl::has_errors(diags)) return kExitValidation;
  if (strict && fowl::has_warnings(diags)) return kExitValidation;
  return kExitOk;
}

// Parses the document and builds the KB, printing diagnostics.
// Throws CliError when the caller cannot proceed.
fowl::BuildResult load_kb(const std::string& input, const std::string& format, bool strict) {
  std::string text = read_input(input);
  fowl::owl::ParseResult parsed = fowl::owl::parse_document(text);
  if (!parsed.ok()) {
    print_diagnostics(parsed.diagnostics, format);
    throw CliError{kExitIo, "parse failure in '" + input + "'"};
  }
  fowl::BuildResult built = fowl::build_kb(parsed.document);
  print_diagnostics(built.diagnostics, format);
  if (int code = diag_exit(built.diagnostics, strict); code != kExitOk)
    throw CliError{code, "knowledge base has validation errors"};
  return built;
}

fowl::FiniteInterpretation load_model(const std::string& path, const std::string& format) {
  fowl::ModelParseResult parsed = fowl::parse_model(read_input(path));
  if (!parsed.ok()) {
    print_diagnostics(parsed.diagnostics, format);
    throw CliError{kExitIo, "model parse failure in '" + path + "'"};
  }
  return std::move(parsed.interpretation);
}

struct BdbQuery {
  bool is_role = false;
  std::string a, b, name;
};

BdbQuery parse_bdb_query(const std::string& text) {
  BdbQuery q;
  auto colon = text.rfind(':');
  if (colon == std::string::npos || colon + 1 == text.size())
    throw CliError{kExitIo, "malformed bdb query '" + text + "' (expected ind:Concept or (a,b):Role)"};
  q.name = text.substr(colon + 1);
  std::string lhs = text.substr(0, colon);
  if (!lhs.empty() && lhs.front() == '(') {
    if (lhs.back() != ')') throw CliError{kExitIo, "malformed bdb query '" + text + "'"};
    std::string pair = lhs.substr(1, lhs.size() - 2);
    auto comma = pair.find(',');
    if (comma == std::string::npos) throw CliError{kExitIo, "malformed bdb query '" + text + "'"};
    q.is_role = true;
    q.a = pair.substr(0, comma);
    q.b = pair.substr(comma + 1);
  } else {
    q.a = lhs;
  }
  if (q.a.empty() || (q.is_role && q.b.empty())) throw CliError{kExitIo, "malformed bdb query '" + text + "'"};
  return q;
}

int run_validate(const std::string& input, const std::string& format, bool strict) {
  std::string text = read_input(input);
  fowl::owl::ParseResult parsed = fowl::owl::parse_document(text);
  if (!parsed.ok()) {
    print_diagnostics(parsed.diagnostics, format);
    return kExitIo;
  }
  fowl::BuildResult built = fowl::build_kb(parsed.document);
  print_diagnostics(built.diagnostics, format);
  return diag_exit(built.diagnostics, strict);
}

int run_translate(const std::string& input, const std::string& target, const std::string& out_path,
                  const std::string& format, bool strict) {
  const fowl::TargetProfile* profile = fowl::TargetProfile::by_name(target);
  if (!profile) throw CliError{kExitIo, "unknown target '" + target + "'"};
  fowl::BuildResult built = load_kb(input, format, strict);
  fowl::TranslateResult translated = fowl::translate(built.kb, *profile);
  if (!translated.ok()) {
    for (const auto& d : translated.diagnostics) std::cerr << d.tsv() << "\n";
    return kExitUnsupported;
  }
  write_output(out_path, *translated.text);
  return kExitOk;
}

int run_evaluate(const std::string& input, const std::string& model_path,
                 const std::vector<std::string>& bdb_queries, bool trace, const std::string& format,
                 bool strict) {
  if (model_path.empty()) throw CliError{kExitIo, "evaluate requires --model"};
  fowl::BuildResult built = load_kb(input, format, strict);
  fowl::FiniteInterpretation interp = load_model(model_path, format);
  fowl::Evaluator ev(built.kb, interp);

  fowl::KbReport report = ev.satisfies_kb();
  std::size_t index = 0;
  for (const auto& entry : report.entries) {
    std::string computed = entry.computed ? entry.computed->str() : "-";
    if (format == "tsv") {
      std::cout << "axiom\t" << index << "\t" << (entry.holds ? "true" : "false") << "\t" << computed << "\t"
                << fowl::print_fuzzy_axiom(*entry.axiom) << "\n";
    } else {
      std::cout << (entry.holds ? "ok   " : "FAIL ") << fowl::print_fuzzy_axiom(*entry.axiom);
      if (entry.computed) std::cout << "  [computed " << computed << "]";
      std::cout << "\n";
    }
    ++index;
  }
  std::cout << (format == "tsv" ? "overall\t" : "overall: ") << (report.satisfied ? "true" : "false") << "\n";

  for (const auto& raw : bdb_queries) {
    BdbQuery q = parse_bdb_query(raw);
    if (q.is_role) {
      fowl::Degree d = ev.bdb_role(q.a, q.b, fowl::RoleExpr::atomic(q.name));
      std::cout << (format == "tsv" ? "bdb\t" : "bdb ") << raw << (format == "tsv" ? "\t" : " = ") << d.str()
                << "\n";
    } else {
      fowl::TraceNode trace_node;
      fowl::Degree d = ev.bdb_concept(q.a, *fowl::make_atomic(q.name), trace ? &trace_node : nullptr);
      std::cout << (format == "tsv" ? "bdb\t" : "bdb ") << raw << (format == "tsv" ? "\t" : " = ") << d.str()
                << "\n";
      if (trace) std::cout << fowl::format_trace(trace_node);
    }
  }
  return kExitOk;
}

int run_maximize(const std::string& input, const std::string& model_path, const std::string& grid_path,
                 const std::string& concept_name, const std::string& format, bool strict) {
  if (model_path.empty() || grid_path.empty() || concept_name.empty())
    throw CliError{kExitIo, "maximize requires --model, --grid and --concept"};
  fowl::BuildResult built = load_kb(input, format, strict);

  fowl::ModelTemplateResult tmpl = fowl::parse_model_template(read_input(model_path));
  if (!tmpl.ok()) {
    print_diagnostics(tmpl.diagnostics, format);
    return kExitIo;
  }
  fowl::GridParseResult grid = fowl::parse_grid(read_input(grid_path));
  if (!grid.ok()) {
    print_diagnostics(grid.diagnostics, format);
    return kExitIo;
  }

  fowl::MaximizeResult best =
      fowl::maximize_degree(built.kb, tmpl.model, grid.grid, *fowl::make_atomic(concept_name));
  if (format == "tsv") {
    for (const auto& [name, value] : best.best_parameters)
      std::cout << "param\t" << name << "\t" << fowl::to_decimal_string(value) << "\n";
    std::cout << "element\t" << best.best_element << "\n";
    std::cout << "degree\t" << best.best_degree.str() << "\n";
    std::cout << "points\t" << best.points_evaluated << "\n";
  } else {
    std::cout << "best degree " << best.best_degree.str() << " at element " << best.best_element << " with";
    for (const auto& [name, value] : best.best_parameters)
      std::cout << " " << name << "=" << fowl::to_decimal_string(value);
    std::cout << " (" << best.points_evaluated << " grid points)\n";
  }
  return kExitOk;
}

int run_info(const std::string& input, const std::string& format, bool strict) {
  fowl::BuildResult built = load_kb(input, format, strict);
  const fowl::FuzzyKB& kb = built.kb;
  auto report = fowl::capability_report(kb, fowl::TargetProfile::generic());
  if (format == "tsv") {
    std::cout << "logic\t" << fowl::family_name(kb.logic) << "\n";
    std::cout << "axioms\t" << kb.abox.size() << "\t" << kb.tbox.size() << "\t" << kb.rbox.size() << "\n";
    std::cout << "definitions\t" << kb.concept_defs.size() << "\t" << kb.role_defs.size() << "\t"
              << kb.datatypes.size() << "\t" << kb.modifiers.size() << "\n";
    for (const auto& e : report)
      std::cout << "construct\t" << fowl::construct_tag_name(e.tag) << "\t" << e.count << "\n";
  } else {
    std::cout << "logic: " << fowl::family_name(kb.logic) << (kb.logic_explicit ? "" : " (default)") << "\n";
    std::cout << "axioms: " << kb.abox.size() << " abox, " << kb.tbox.size() << " tbox, " << kb.rbox.size()
              << " rbox\n";
    std::cout << "definitions: " << kb.concept_defs.size() << " concepts, " << kb.role_defs.size() << " roles, "
              << kb.datatypes.size() << " datatypes, " << kb.modifiers.size() << " modifiers\n";
    std::cout << "constructs:";
    for (const auto& e : report) std::cout << " " << fowl::construct_tag_name(e.tag) << "=" << e.count;
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy OWL 2 toolkit: fuzzyLabel-annotated ontologies"};
  app.require_subcommand(1);

  std::string input, target = "generic", model_path, grid_path, out_path, concept_name, format = "text";
  bool strict = false, trace = false;
  std::vector<std::string> bdb_queries;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "ontology file (functional syntax), or - for stdin")->required();
    cmd->add_flag("--strict", strict, "treat warnings as errors");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "tsv"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and check an annotated ontology");
  add_common(validate);

  CLI::App* translate = app.add_subcommand("translate", "emit a reasoner dialect");
  add_common(translate);
  translate->add_option("--target", target, "dialect")->check(CLI::IsMember({"generic", "fuzzydl", "delorean"}));
  translate->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "check every axiom over a finite model");
  add_common(evaluate);
  evaluate->add_option("--model", model_path, "model file")->required();
  evaluate->add_option("--bdb", bdb_queries, "assertion query ind:Concept or (a,b):Role (repeatable)");
  evaluate->add_flag("--trace", trace, "print the evaluation trace of bdb queries");

  CLI::App* maximize = app.add_subcommand("maximize", "grid-search degree maximization");
  add_common(maximize);
  maximize->add_option("--model", model_path, "parameterized model template")->required();
  maximize->add_option("--grid", grid_path, "grid file")->required();
  maximize->add_option("--concept", concept_name, "concept name to maximize")->required();

  CLI::App* info = app.add_subcommand("info", "construct counts and selected logic");
  add_common(info);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return run_validate(input, format, strict);
    if (app.got_subcommand(translate)) return run_translate(input, target, out_path, format, strict);
    if (app.got_subcommand(evaluate)) return run_evaluate(input, model_path, bdb_queries, trace, format, strict);
    if (app.got_subcommand(maximize))
      return run_maximize(input, model_path, grid_path, concept_name, format, strict);
    if (app.got_subcommand(info)) return run_info(input, format, strict);
  } catch (const CliError& e) {
    std::cerr << "fowl: " << e.message << "\n";
    return e.code;
  } catch (const fowl::EvalError& e) {
    std::cerr << "fowl: evaluation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "fowl: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
