#include "symtan/lawcheck.hpp"

#include <fnmatch.h>

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lawcheck_support.hpp"

namespace symtan {

namespace laws {

Combination<Gen> coords(const Semiring& sr, const std::vector<std::pair<std::size_t, Scalar>>& entries) {
  Combination<Gen> out(sr);
  for (const auto& [i, c] : entries) out.add_term(Gen{static_cast<std::uint32_t>(i)}, c);
  return out;
}

std::vector<NamedAlgebra> test_algebras(const Semiring& sr, std::size_t max_rank) {
  const Scalar one = sr.one();
  const Combination<Gen> zero(sr);
  std::vector<NamedAlgebra> out;
  out.push_back({"K", unit_algebra(sr)});
  if (max_rank >= 2) {
    // K[t]/t²
    out.push_back({"K[t]/t^2", StructureAlgebra::make(FreeModule(sr, {"1", "t"}), coords(sr, {{0, one}}),
                                                      {coords(sr, {{0, one}}), coords(sr, {{1, one}}),
                                                       coords(sr, {{1, one}}), zero})});
    // K × K with orthogonal idempotents
    out.push_back({"KxK", StructureAlgebra::make(FreeModule(sr, {"e0", "e1"}), coords(sr, {{0, one}, {1, one}}),
                                                 {coords(sr, {{0, one}}), zero, zero, coords(sr, {{1, one}})})});
  }
  if (max_rank >= 3) {
    auto b = [&](std::size_t i) { return coords(sr, {{i, one}}); };
    out.push_back({"K[t]/t^3", StructureAlgebra::make(FreeModule(sr, {"1", "t", "t2"}), b(0),
                                                      {b(0), b(1), b(2), b(1), b(2), zero, b(2), zero, zero})});
  }
  return out;
}

std::string compact_json(const StructureAlgebra& a) {
  return nlohmann::ordered_json::parse(algebra_to_json(a)).dump();
}

std::string matrix_text(const LinearMap& m) {
  const Semiring& sr = m.semiring();
  std::string out = "[";
  for (std::size_t r = 0; r < m.codomain().dim(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.domain().dim(); ++c) out += (c ? "," : "") + sr.format(m.at(r, c));
    out += "]";
  }
  return out + "]";
}

bool same_entries(const LinearMap& a, const LinearMap& b) {
  if (a.domain().dim() != b.domain().dim() || a.codomain().dim() != b.codomain().dim()) return false;
  for (std::size_t r = 0; r < a.codomain().dim(); ++r)
    for (std::size_t c = 0; c < a.domain().dim(); ++c)
      if (!(a.at(r, c) == b.at(r, c))) return false;
  return true;
}

LinearMap random_matrix(Ctx& c, const FreeModule& domain, const FreeModule& codomain) {
  LinearMap m(domain, codomain);
  for (std::size_t r = 0; r < codomain.dim(); ++r)
    for (std::size_t col = 0; col < domain.dim(); ++col) m.set(r, col, c.sr.random(c.rng));
  return m;
}

}  // namespace laws

namespace {

const std::vector<laws::LawEntry>& entries() {
  static const std::vector<laws::LawEntry> all = [] {
    std::vector<laws::LawEntry> out;
    laws::register_symmetric_laws(out);
    laws::register_tangent_laws(out);
    laws::register_core_laws(out);
    return out;
  }();
  return all;
}

// FNV-1a, so that every law draws from its own reproducible stream.
std::uint64_t stream_id(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::optional<Mutation> parse_mutation(const std::string& text) {
  for (Mutation m : {Mutation::none, Mutation::drop_power_coefficient, Mutation::leibniz_tau_swapped,
                     Mutation::lambda_missing_second})
    if (mutation_name(m) == text) return m;
  return std::nullopt;
}

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::drop_power_coefficient: return "drop-power-coefficient";
    case Mutation::leibniz_tau_swapped: return "leibniz-tau-swapped";
    case Mutation::lambda_missing_second: return "lambda-missing-second";
  }
  return "none";
}

void validate(const GeneratorConfig& config) {
  Semiring::parse(config.semiring);
  if (config.n_vars < 1 || config.n_vars > 3) throw std::invalid_argument("n_vars must be in 1..3");
  if (config.max_degree < 1 || config.max_degree > 6) throw std::invalid_argument("max_degree must be in 1..6");
  if (config.nesting_depth < 1 || config.nesting_depth > 2) throw std::invalid_argument("nesting_depth must be 1 or 2");
}

const std::vector<LawInfo>& registered_laws() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<LawInfo> select_laws(const std::string& glob) {
  std::vector<LawInfo> out;
  for (const auto& info : registered_laws())
    if (fnmatch(glob.c_str(), info.id.c_str(), 0) == 0 || fnmatch(glob.c_str(), info.family.c_str(), 0) == 0)
      out.push_back(info);
  return out;
}

LawReport run_law(const std::string& id, const GeneratorConfig& config) {
  validate(config);
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    const Semiring sr = Semiring::parse(config.semiring);
    laws::Ctx ctx{config, sr, Names{{"x", "y", "z"}}, std::mt19937_64(config.seed ^ stream_id(id)), {}, {}};
    ctx.report.suite = e.info.family;
    ctx.report.law = id;
    ctx.report.config = config;
    try {
      e.run(ctx);
    } catch (const std::exception& ex) {
      ctx.fail("(setup)", std::string("error: ") + ex.what(), "");
    }
    if (ctx.report.status == LawStatus::pass && ctx.report.checked == 0)
      ctx.fail("(none)", "no cases were generated", "");
    return ctx.report;
  }
  throw std::out_of_range("unknown law: " + id);
}

std::string status_name(LawStatus s) {
  switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::skipped: return "skipped";
  }
  return "fail";
}

namespace {

nlohmann::ordered_json report_json(const LawReport& r) {
  nlohmann::ordered_json params;
  params["n_vars"] = r.config.n_vars;
  params["max_degree"] = r.config.max_degree;
  params["nesting_depth"] = r.config.nesting_depth;
  params["random_samples"] = r.config.random_samples;
  params["seed"] = r.config.seed;
  if (r.config.mutation != Mutation::none) params["mutation"] = mutation_name(r.config.mutation);

  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["law"] = r.law;
  j["semiring"] = r.config.semiring;
  j["params"] = std::move(params);
  j["status"] = status_name(r.status);
  j["checked"] = r.checked;
  if (r.counterexample)
    j["counterexample"] = {{"input", r.counterexample->input}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
  else
    j["counterexample"] = nullptr;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string report_to_json(const LawReport& r) { return report_json(r).dump(); }

std::string reports_to_json(const std::vector<LawReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string report_to_text(const LawReport& r) {
  std::ostringstream out;
  switch (r.status) {
    case LawStatus::pass: out << "PASS " << r.law << " (" << r.checked << " cases)\n"; break;
    case LawStatus::skipped: out << "SKIP " << r.law << " (" << r.note << ")\n"; break;
    case LawStatus::fail:
      out << "FAIL " << r.law << " (after " << r.checked << " cases)\n";
      if (r.counterexample) {
        out << "  input: " << r.counterexample->input << "\n";
        out << "  lhs:   " << r.counterexample->lhs << "\n";
        out << "  rhs:   " << r.counterexample->rhs << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace symtan
