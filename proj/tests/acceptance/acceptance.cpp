// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lawcheck_support.hpp"
#include "symtan/cli.hpp"
#include "symtan/em_tangent.hpp"
#include "symtan/lawcheck.hpp"

using namespace symtan;

namespace {

const std::vector<std::string> reference{"nat", "bool", "mod:5"};
const std::vector<std::string> all_semirings{"nat", "bool", "mod:5", "int", "tropical", "mod:2"};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

/// Runs every law matching `glob` over each semiring; all must pass.
void laws_pass(Outcome& o, const std::string& glob, const std::vector<std::string>& semirings,
               const std::function<void(GeneratorConfig&)>& tweak = {}) {
  const auto laws = select_laws(glob);
  o.require(!laws.empty(), "no law matches " + glob);
  for (const auto& sel : semirings) {
    GeneratorConfig c;
    c.semiring = sel;
    if (tweak) tweak(c);
    for (const auto& law : laws) {
      const LawReport r = run_law(law.id, c);
      o.require(r.status == LawStatus::pass && r.checked > 0, sel + ": " + report_to_text(r));
    }
  }
}

Combination<Gen> random_vector(const Semiring& sr, std::size_t dim, std::mt19937_64& rng) {
  Combination<Gen> v(sr);
  for (std::uint32_t i = 0; i < dim; ++i) v.add_term(Gen{i}, sr.random(rng));
  return v;
}

/// Block `b` (of size r) of a W-major coordinate vector.
Combination<Gen> block(const Combination<Gen>& v, std::size_t b, std::size_t r) {
  Combination<Gen> out(v.semiring());
  for (const auto& [g, c] : v.terms())
    if (g.index / r == b) out.add_term(Gen{static_cast<std::uint32_t>(g.index % r)}, c);
  return out;
}

Combination<Gen> blocks(const Semiring& sr, const std::vector<Combination<Gen>>& parts, std::size_t r) {
  Combination<Gen> out(sr);
  for (std::size_t b = 0; b < parts.size(); ++b)
    for (const auto& [g, c] : parts[b].terms()) out.add_term(Gen{static_cast<std::uint32_t>(b * r + g.index)}, c);
  return out;
}

Outcome criterion_codifferential() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  laws_pass(o, "cd.*", reference);
  const double s = seconds_since(start);
  o.require(s < 60, "took " + fixed(s));
  if (o.ok) o.detail = "cd.1-cd.5, n=3, degree 4, nat/bool/mod:5, " + fixed(s);
  return o;
}

Outcome criterion_coderiving() {
  Outcome o;
  laws_pass(o, "appendix.coderive-*", reference);
  const Semiring nat = Semiring::parse("nat");
  const Names names{{"x"}};
  const DerivativeElement<Gen> input = DerivativeElement<Gen>::basis(nat, {Monomial<Gen>::variable(Gen{0}), Gen{0}});
  const auto lhs = symtan::apply(input, compose(coderive_map(nat), derive_map(nat)));
  const auto rhs = symtan::apply(
      input, sum_of(identity_map(nat),
                    compose(on_slot<0>(derive_map(nat)), swap_slots<1, 2>(nat), on_slots<0, 2>(coderive_map(nat)))));
  o.require(render(names, lhs) == "2*(x ⊗ x)", "lhs on x ⊗ x is " + render(names, lhs));
  o.require(render(names, rhs) == "2*(x ⊗ x)", "rhs on x ⊗ x is " + render(names, rhs));
  if (o.ok) o.detail = "three identities pass; x ⊗ x gives 2*(x ⊗ x) on both sides";
  return o;
}

Outcome criterion_distributive() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  laws_pass(o, "appendix.dist-*", reference);
  const double s = seconds_since(start);
  o.require(s < 120, "took " + fixed(s));
  if (o.ok) o.detail = "inner/outer degree 2, 2 variables per copy, " + fixed(s);
  return o;
}

Outcome criterion_tangent_monad() {
  Outcome o;
  for (const char* law : {"appendix.lambda-p", "appendix.lambda-sigma", "appendix.lambda-z", "appendix.lambda-ell",
                          "appendix.lambda-c"})
    laws_pass(o, law, reference);
  if (o.ok) o.detail = "five identities over nat/bool/mod:5";
  return o;
}

Outcome criterion_dual_numbers() {
  Outcome o;
  laws_pass(o, "weil.formulas", reference);
  std::mt19937_64 rng(5);
  std::size_t checked = 0;
  for (const auto& sel : all_semirings) {
    const Semiring sr = Semiring::parse(sel);
    for (const auto& [name, a] : laws::test_algebras(sr, 3)) {
      const std::size_t r = a.rank();
      const auto p = em_component(EmKind::p, a), z = em_component(EmKind::z, a), sigma = em_component(EmKind::sigma, a);
      const auto l = em_component(EmKind::l, a), c = em_component(EmKind::c, a);
      for (int round = 0; round < 40; ++round) {
        const auto x = random_vector(sr, 4 * r, rng);
        const auto b0 = block(x, 0, r), b1 = block(x, 1, r), b2 = block(x, 2, r), b3 = block(x, 3, r);
        const Combination<Gen> zero(sr);
        const std::string where = sel + " " + name + " ";
        o.require(apply_morphism(p, blocks(sr, {b0, b1}, r)) == b0, where + "p(a + b eps) != a");
        o.require(apply_morphism(z, b0) == blocks(sr, {b0, zero}, r), where + "z(a) != a");
        o.require(apply_morphism(sigma, blocks(sr, {b0, b1, b2}, r)) == blocks(sr, {b0, b1 + b2}, r),
                  where + "sigma(a + b eps + c eps') != a + (b+c) eps");
        o.require(apply_morphism(l, blocks(sr, {b0, b1}, r)) == blocks(sr, {b0, zero, zero, b1}, r),
                  where + "l(a + b eps) != a + b eps1 eps2");
        o.require(apply_morphism(c, x) == blocks(sr, {b0, b2, b1, b3}, r),
                  where + "c(a + b eps1 + c eps2 + d eps1 eps2) != a + c eps1 + b eps2 + d eps1 eps2");
        checked += 5;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " coordinate checks over rank <= 3 algebras, 6 semirings";
  return o;
}

Outcome criterion_lift_vs_weil() {
  Outcome o;
  laws_pass(o, "em.lift-vs-weil", all_semirings);
  std::size_t tables = 0;
  for (const auto& sel : all_semirings) {
    const Semiring sr = Semiring::parse(sel);
    for (const auto& [name, a] : laws::test_algebras(sr, 3)) {
      const StructureAlgebra weil = weil_extend(a, WeilKind::T);
      o.require(tabulate(lift_tangent(finite_algebra(a)), weil.labels()) == weil, sel + " " + name + ": tables differ");
      ++tables;
    }
  }
  if (o.ok) o.detail = std::to_string(tables) + " structure-constant tables equal";
  return o;
}

Outcome criterion_universality() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t cases = 0;
  for (const char* sel : {"bool", "mod:2"}) {
    GeneratorConfig c;
    c.semiring = sel;
    for (const char* law : {"universality.equalizer", "universality.factorization"}) {
      const LawReport r = run_law(law, c);
      o.require(r.status == LawStatus::pass && r.checked > 0, std::string(sel) + ": " + report_to_text(r));
      cases += r.checked;
    }
  }
  const double s = seconds_since(start);
  o.require(s < 300, "took " + fixed(s));
  if (o.ok) o.detail = std::to_string(cases) + " cases over bool and mod:2, " + fixed(s);
  return o;
}

Outcome criterion_lambda_oracle() {
  Outcome o;
  laws_pass(o, "oracle.lambda", all_semirings, [](GeneratorConfig& c) {
    c.n_vars = 2;
    c.max_degree = 4;
  });
  if (o.ok) o.detail = "S(V+V), 2 variables per copy, degree 4, 6 semirings";
  return o;
}

Outcome criterion_seely() {
  Outcome o;
  laws_pass(o, "seely.*", reference);
  if (o.ok) o.detail = "round-trip and multiplicativity over nat/bool/mod:5";
  return o;
}

Outcome criterion_mutations() {
  Outcome o;
  std::string caught;
  for (Mutation m : {Mutation::drop_power_coefficient, Mutation::leibniz_tau_swapped, Mutation::lambda_missing_second}) {
    GeneratorConfig c;
    c.mutation = m;
    std::string first;
    for (const auto& law : registered_laws()) {
      const LawReport r = run_law(law.id, c);
      if (r.status == LawStatus::fail && r.counterexample && first.empty()) first = law.id + " on " + r.counterexample->input;
    }
    o.require(!first.empty(), mutation_name(m) + " not caught");
    caught += (caught.empty() ? "" : "; ") + mutation_name(m) + " by " + first;
  }
  if (o.ok) o.detail = caught;
  return o;
}

Outcome criterion_infinitesimal() {
  Outcome o;
  laws_pass(o, "infinitesimal.object", all_semirings);
  for (const auto& sel : all_semirings) {
    const Semiring sr = Semiring::parse(sel);
    const StructureAlgebra d = infinitesimal_object(sr);
    o.require(d == weil_extend(unit_algebra(sr), WeilKind::T), sel + ": not K[eps]");
    o.require(d == tabulate(lift_tangent(initial_algebra(sr)), {"1", "eps"}), sel + ": not the lift of K");
    o.require(d.multiply(d.basis_vector(1), d.basis_vector(1)).is_zero(), sel + ": eps^2 != 0");
  }
  if (o.ok) o.detail = "dual numbers over 6 semirings";
  return o;
}

Outcome criterion_cli() {
  Outcome o;
  auto run = [](const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str();
  };
  for (const char* sel : {"nat", "mod:5"}) {
    int c1 = 0, c2 = 0;
    const std::vector<std::string> args{"check", "--semiring", sel, "--seed", "7", "--format", "json"};
    const std::string a = run(args, c1), b = run(args, c2);
    o.require(c1 == 0 && c2 == 0, std::string(sel) + ": check exit status");
    o.require(!a.empty() && a == b, std::string(sel) + ": JSON reports differ between runs");
  }
  int code = 0;
  const std::string diff = run({"diff", "--semiring", "nat", "--vars", "x,y", "x^2*y"}, code);
  o.require(code == 0 && diff == "2*x*y (x) + x^2 (y)\n", "diff printed '" + diff + "'");
  if (o.ok) o.detail = "byte-identical JSON over two runs; diff prints 2*x*y (x) + x^2 (y)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"codifferential axioms", criterion_codifferential},
      {"coderiving identities", criterion_coderiving},
      {"distributive law", criterion_distributive},
      {"tangent-monad identities", criterion_tangent_monad},
      {"dual-number formulas", criterion_dual_numbers},
      {"lift equals Weil extension", criterion_lift_vs_weil},
      {"vertical-lift universality", criterion_universality},
      {"lambda oracle agreement", criterion_lambda_oracle},
      {"Seely round-trip", criterion_seely},
      {"mutation sensitivity", criterion_mutations},
      {"infinitesimal object", criterion_infinitesimal},
      {"CLI determinism", criterion_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << " (" << o.detail << ")\n";
  }
  return failed ? 1 : 0;
}
