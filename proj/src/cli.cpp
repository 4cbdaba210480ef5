#include "symtan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symtan/em_tangent.hpp"
#include "symtan/render.hpp"
#include "symtan/text.hpp"

namespace symtan {

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_file = 3;

[[noreturn]] void usage(const std::string& message) { throw CommandError{exit_usage, message}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{exit_file, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!(file << text)) throw CommandError{exit_file, "cannot write " + cfg.output};
}

StructureAlgebra load_algebra(const std::string& path) {
  try {
    return algebra_from_json(read_file(path));
  } catch (const FormatError& e) {
    throw CommandError{exit_file, path + ": " + e.what()};
  }
}

Semiring semiring_of(const CommandConfig& cfg) {
  try {
    return Semiring::parse(cfg.semiring);
  } catch (const std::invalid_argument& e) {
    usage(e.what());
  }
}

Polynomial<Gen> expression(const CommandConfig& cfg, const Semiring& sr, const std::string& text) {
  try {
    return parse_polynomial(text, cfg.vars, sr);
  } catch (const ParseError& e) {
    usage(e.what());
  }
}

// --- subcommands ----------------------------------------------------------------

int run_check(const CommandConfig& cfg, std::ostream& out) {
  const auto laws = select_laws(cfg.suite);
  if (laws.empty()) usage("no law matches '" + cfg.suite + "'");
  if (cfg.list) {
    std::string text;
    for (const auto& law : laws) text += law.id + "  [" + law.family + "]  " + law.statement + "\n";
    write_output(cfg, text, out);
    return 0;
  }
  std::vector<LawReport> reports;
  std::size_t failed = 0, skipped = 0;
  for (const auto& law : laws) {
    reports.push_back(run_law(law.id, cfg.generator));
    failed += reports.back().status == LawStatus::fail;
    skipped += reports.back().status == LawStatus::skipped;
  }
  std::string text;
  if (cfg.format == OutputFormat::json) {
    text = reports_to_json(reports);
  } else {
    for (const auto& r : reports) text += report_to_text(r);
    text += std::to_string(reports.size() - failed - skipped) + " passed, " + std::to_string(failed) + " failed, " +
            std::to_string(skipped) + " skipped\n";
  }
  write_output(cfg, text, out);
  return failed ? exit_failure : 0;
}

int run_diff(const CommandConfig& cfg, std::ostream& out) {
  const Semiring sr = semiring_of(cfg);
  write_output(cfg, format_derivative(cfg.vars, derive(expression(cfg, sr, cfg.expression))) + "\n", out);
  return 0;
}

int run_lambda(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.vars.size() % 2) usage("lambda needs an even number of variables: base coordinates, then tangent coordinates");
  const Semiring sr = semiring_of(cfg);
  const auto half = static_cast<std::uint32_t>(cfg.vars.size() / 2);
  const Polynomial<Gen> p = expression(cfg, sr, cfg.expression);
  Polynomial<Tagged<Gen>> tagged(sr);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial<Tagged<Gen>>::Factor> factors;
    for (const auto& [g, e] : m.factors())
      factors.emplace_back(g.index < half ? Tagged<Gen>{0, g} : Tagged<Gen>{1, Gen{g.index - half}}, e);
    tagged.add_term(Monomial<Tagged<Gen>>::from_factors(std::move(factors)), c);
  }
  const auto parts = components(lambda(tagged), 1);
  const Names names{std::vector<std::string>(cfg.vars.begin(), cfg.vars.begin() + half)};
  write_output(cfg, "(" + render(names, parts[0]) + ", " + render(names, parts[1]) + ")\n", out);
  return 0;
}

int run_tangent(const CommandConfig& cfg, std::ostream& out) {
  const Semiring sr = semiring_of(cfg);
  std::vector<std::string> names;
  SubstitutionMorphism f{sr, {}, false};
  for (const auto& a : cfg.assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) usage("expected name=expression, got '" + a + "'");
    std::string name = a.substr(0, eq);
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    if (name.empty()) usage("missing name in '" + a + "'");
    names.push_back(name);
    f.images.push_back(expression(cfg, sr, a.substr(eq + 1)));
  }
  std::vector<Scalar> point, tangent;
  try {
    point = parse_scalars(cfg.point, sr);
    tangent = parse_scalars(cfg.tangent, sr);
  } catch (const ParseError& e) {
    usage(e.what());
  }
  if (point.size() != cfg.vars.size() || tangent.size() != cfg.vars.size())
    usage("--point and --tangent need one scalar per variable (" + std::to_string(cfg.vars.size()) + ")");
  const Pushforward pf = pushforward(f, point, tangent);
  std::string text;
  for (std::size_t i = 0; i < names.size(); ++i)
    text += names[i] + " = (" + sr.format(pf.values[i]) + ", " + sr.format(pf.tangents[i]) + ")\n";
  write_output(cfg, text, out);
  return 0;
}

int run_weil(const CommandConfig& cfg, std::ostream& out) {
  StructureAlgebra a = cfg.input.empty() ? unit_algebra(semiring_of(cfg)) : load_algebra(cfg.input);
  if (const auto problems = a.violations(1); !problems.empty())
    throw CommandError{exit_file, cfg.input + ": not an algebra: " + problems.front()};
  try {
    write_output(cfg, algebra_to_json(weil_extend(a, cfg.weil_kind)), out);
  } catch (const AlgebraError& e) {
    throw CommandError{exit_file, cfg.input + ": " + e.what()};
  }
  return 0;
}

int run_validate(const CommandConfig& cfg, std::ostream& out) {
  const StructureAlgebra a = load_algebra(cfg.input);
  const auto problems = a.violations();
  std::string text;
  if (problems.empty()) {
    text = "ok: rank " + std::to_string(a.rank()) + " algebra over " + a.semiring().selector() + "\n";
  } else {
    for (const auto& p : problems) text += "violation: " + p + "\n";
  }
  write_output(cfg, text, out);
  return problems.empty() ? 0 : exit_failure;
}

}  // namespace

std::variant<CommandConfig, std::string> parse_command(const std::vector<std::string>& args) {
  CommandConfig cfg;
  CLI::App app{"Symmetric-algebra calculus and tangent structure checker", "symtan"};
  app.require_subcommand(1);

  std::string vars_csv, format = "text", kind = "T", mutation = "none";
  auto add_semiring = [&](CLI::App* s) {
    return s->add_option("--semiring", cfg.semiring, "nat | int | bool | tropical | mod:<m>")->capture_default_str();
  };
  auto add_vars = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--vars", vars_csv, "comma-separated variable names");
    if (required) o->required();
  };
  auto add_output = [&](CLI::App* s) { s->add_option("--output", cfg.output, "write to this file instead of stdout"); };

  auto* check = app.add_subcommand("check", "run law suites");
  add_semiring(check);
  check->add_option("--suite", cfg.suite, "glob over law ids and families")->capture_default_str();
  check->add_option("--max-degree", cfg.generator.max_degree, "degree bound (1..6)")->capture_default_str();
  check->add_option("--n-vars", cfg.generator.n_vars, "variables per space (1..3)")->capture_default_str();
  check->add_option("--nesting", cfg.generator.nesting_depth, "outer degree bound for nested inputs (1..2)")
      ->capture_default_str();
  check->add_option("--samples", cfg.generator.random_samples, "random combinations per law")->capture_default_str();
  check->add_option("--seed", cfg.generator.seed, "random seed")->capture_default_str();
  check->add_option("--mutation", mutation, "seeded bug: none | drop-power-coefficient | leibniz-tau-swapped | lambda-missing-second")
      ->capture_default_str();
  check->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  check->add_flag("--list", cfg.list, "list the selected laws instead of running them");
  add_output(check);

  auto* diff = app.add_subcommand("diff", "print d(p) grouped by the linear variable");
  add_semiring(diff);
  add_vars(diff, true);
  diff->add_option("expression", cfg.expression, "polynomial")->required();
  add_output(diff);

  auto* lambda = app.add_subcommand("lambda", "print the two components of λ(p); the second half of --vars is the tangent copy");
  add_semiring(lambda);
  add_vars(lambda, true);
  lambda->add_option("expression", cfg.expression, "polynomial")->required();
  add_output(lambda);

  auto* tangent = app.add_subcommand("tangent", "push a tangent vector forward along a polynomial map");
  add_semiring(tangent);
  add_vars(tangent, true);
  tangent->add_option("--point", cfg.point, "base point, one scalar per variable")->required();
  tangent->add_option("--tangent", cfg.tangent, "tangent vector, one scalar per variable")->required();
  tangent->add_option("assignments", cfg.assignments, "name=expression components of the map")->required();
  add_output(tangent);

  auto* weil = app.add_subcommand("weil", "tensor an algebra with a Weil algebra");
  auto* weil_semiring = add_semiring(weil);
  weil->add_option("--kind", kind, "T | T2 | Tsq")->check(CLI::IsMember({"T", "T2", "Tsq"}))->capture_default_str();
  auto* weil_input = weil->add_option("--input", cfg.input, "algebra file (default: the unit algebra)");
  weil_input->excludes(weil_semiring);
  add_output(weil);

  auto* validate_cmd = app.add_subcommand("algebra-validate", "check the algebra laws of a structure-constant file");
  validate_cmd->add_option("--input", cfg.input, "algebra file")->required();
  add_output(validate_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (auto* s : app.get_subcommands()) return s->help();
    return app.help();
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  cfg.subcommand = name == "check"     ? Subcommand::check
                   : name == "diff"    ? Subcommand::diff
                   : name == "lambda"  ? Subcommand::lambda
                   : name == "tangent" ? Subcommand::tangent
                   : name == "weil"    ? Subcommand::weil
                                       : Subcommand::algebra_validate;
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  cfg.weil_kind = *parse_weil_kind(kind);

  try {
    Semiring::parse(cfg.semiring);
    if (!vars_csv.empty()) cfg.vars = parse_variables(vars_csv);
  } catch (const std::invalid_argument& e) {
    usage(e.what());
  }
  if (cfg.subcommand == Subcommand::check) {
    const auto m = parse_mutation(mutation);
    if (!m) usage("unknown mutation '" + mutation + "'");
    cfg.generator.mutation = *m;
    cfg.generator.semiring = cfg.semiring;
    try {
      validate(cfg.generator);
    } catch (const std::invalid_argument& e) {
      usage(e.what());
    }
  }
  return cfg;
}

int run_command(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.subcommand) {
      case Subcommand::check:
        return run_check(cfg, out);
      case Subcommand::diff:
        return run_diff(cfg, out);
      case Subcommand::lambda:
        return run_lambda(cfg, out);
      case Subcommand::tangent:
        return run_tangent(cfg, out);
      case Subcommand::weil:
        return run_weil(cfg, out);
      case Subcommand::algebra_validate:
        return run_validate(cfg, out);
    }
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::variant<CommandConfig, std::string> parsed;
  try {
    parsed = parse_command(args);
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  }
  if (const auto* help = std::get_if<std::string>(&parsed)) {
    out << *help;
    return 0;
  }
  return run_command(std::get<CommandConfig>(parsed), out, err);
}

}  // namespace symtan
