#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lawcheck_support.hpp"
#include "symtan/cli.hpp"
#include "symtan/text.hpp"

using namespace symtan;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "symtan-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("diff prints d(p) grouped by variable") {
  const Run r = cli({"diff", "--semiring", "nat", "--vars", "x,y", "x^2*y"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*x*y (x) + x^2 (y)\n");
}

TEST_CASE("diff agrees with the power-rule oracle on every monomial") {
  const std::vector<std::string> names{"x", "y", "z"};
  const auto vars = laws::gens(3);
  for (const char* sel : {"nat", "mod:5"}) {
    const Semiring sr = Semiring::parse(sel);
    for (const auto& m : laws::monomials(vars, 4)) {
      DerivativeElement<Gen> expected(sr);
      for (const auto& [key, c] : oracle::power_rule_d(sr, oracle::Poly{3, {{laws::exponents_of(m, vars), sr.one()}}})) {
        std::vector<Monomial<Gen>::Factor> f;
        for (std::uint32_t i = 0; i < 3; ++i) f.emplace_back(Gen{i}, key.first[i]);
        expected.add_term({Monomial<Gen>::from_factors(f), Gen{key.second}}, c);
      }
      const Run r = cli({"diff", "--semiring", sel, "--vars", "x,y,z", render_key(Names{names}, m)});
      CHECK(r.code == 0);
      CHECK(r.out == format_derivative(names, expected) + "\n");
    }
  }
}

TEST_CASE("lambda prints both components") {
  const Run r = cli({"lambda", "--vars", "x,v", "x^2 + x*v + v^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "(x^2, x^2)\n");
  CHECK(cli({"lambda", "--vars", "x,y,v", "x"}).code == 2);
}

TEST_CASE("tangent pushes a vector forward") {
  const Run r = cli({"tangent", "--semiring", "int", "--vars", "x,y", "--point", "3,-2", "--tangent", "1,5", "f=x^2*y",
                     "g = x + y"});
  CHECK(r.code == 0);
  CHECK(r.out == "f = (-18, 33)\ng = (1, 6)\n");
  CHECK(cli({"tangent", "--vars", "x", "--point", "1,2", "--tangent", "1", "f=x"}).code == 2);
  CHECK(cli({"tangent", "--vars", "x", "--point", "1", "--tangent", "1", "x^2"}).code == 2);
}

TEST_CASE("check exit status follows the reports") {
  CHECK(cli({"check", "--semiring", "nat", "--suite", "cd.*", "--max-degree", "4"}).code == 0);
  const Run failing = cli({"check", "--suite", "cd.2", "--mutation", "leibniz-tau-swapped"});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("FAIL cd.2") != std::string::npos);
  CHECK(cli({"check", "--suite", "no-such-law"}).code == 2);
  const Run listed = cli({"check", "--list", "--suite", "cd.*"});
  CHECK(listed.code == 0);
  CHECK(std::count(listed.out.begin(), listed.out.end(), '\n') == 5);
}

TEST_CASE("check JSON is byte-identical across runs") {
  const std::vector<std::string> args{"check", "--semiring", "mod:5", "--seed", "9", "--format", "json"};
  const Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.front() == '[');
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check", "--bogus"}).code == 2);
  CHECK(cli({"check", "--semiring", "mod:1"}).code == 2);
  CHECK(cli({"check", "--max-degree", "9"}).code == 2);
  CHECK(cli({"check", "--format", "xml"}).code == 2);
  CHECK(cli({"check", "--mutation", "typo"}).code == 2);
  CHECK(cli({"diff", "--vars", "x", "y"}).code == 2);
  CHECK(cli({"diff", "--semiring", "bool", "--vars", "x,y", "x - y"}).code == 2);
  CHECK(cli({"diff", "x"}).code == 2);
  CHECK(cli({"weil", "--kind", "T3"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("weil writes a rank-4 algebra with square-zero generators") {
  const fs::path unit = scratch("unit.alg.json"), out = scratch("tsq.alg.json");
  write(unit, algebra_to_json(unit_algebra(Semiring::parse("mod:5"))));
  const Run r = cli({"weil", "--kind", "Tsq", "--input", unit.string(), "--output", out.string()});
  CHECK(r.code == 0);
  const StructureAlgebra tsq = algebra_from_json(slurp(out));
  CHECK(tsq.rank() == 4);
  CHECK(tsq.semiring().selector() == "mod:5");
  CHECK(tsq.multiply(tsq.basis_vector(1), tsq.basis_vector(1)).is_zero());
  CHECK(tsq.multiply(tsq.basis_vector(2), tsq.basis_vector(2)).is_zero());
  CHECK(cli({"weil", "--kind", "T", "--semiring", "bool"}).out == algebra_to_json(weil_extend(unit_algebra(Semiring::parse("bool")), WeilKind::T)));
  CHECK(cli({"weil", "--input", unit.string(), "--semiring", "nat"}).code == 2);
}

TEST_CASE("file errors exit with 3") {
  const fs::path junk = scratch("junk.alg.json");
  write(junk, "{ not json");
  CHECK(cli({"algebra-validate", "--input", junk.string()}).code == 3);
  CHECK(cli({"weil", "--input", junk.string()}).code == 3);
  CHECK(cli({"algebra-validate", "--input", scratch("missing.alg.json").string()}).code == 3);
}

TEST_CASE("algebra-validate reports violations") {
  const fs::path good = scratch("good.alg.json"), bad = scratch("bad.alg.json");
  write(good, algebra_to_json(weil_extend(unit_algebra(Semiring::parse("nat")), WeilKind::T2)));
  const Run ok = cli({"algebra-validate", "--input", good.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok: rank 3 algebra over nat\n");
  // 1*1 = e breaks unitality
  write(bad, R"({"semiring":"nat","basis":["1","e"],"unit":{"1":"1"},"table":{"0,0":{"e":"1"},"0,1":{"e":"1"},"1,1":{"1":"1"}}})");
  const Run broken = cli({"algebra-validate", "--input", bad.string()});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("violation: ") == 0);
  CHECK(cli({"weil", "--input", bad.string()}).code == 3);
}
