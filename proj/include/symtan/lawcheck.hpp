#pragma once

// Law suites: every registered law is checked on all monomial-basis inputs
// within the configured bounds (linearity makes that complete up to the
// bounds) plus seeded random combinations of them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symtan/semiring.hpp"

namespace symtan {

/// Seeded bugs used to confirm that the suites can fail.
enum class Mutation {
  none,
  drop_power_coefficient,  // d(x^n) = x^(n-1) ⊗ x
  leibniz_tau_swapped,     // first Leibniz summand differentiates the wrong factor
  lambda_missing_second,   // λ keeps only S(π₀)ι₀
};

std::optional<Mutation> parse_mutation(const std::string& text);
std::string mutation_name(Mutation m);

struct GeneratorConfig {
  std::string semiring = "nat";
  std::uint32_t n_vars = 3;         // 1..3
  std::uint32_t max_degree = 4;     // 1..6
  std::uint32_t nesting_depth = 2;  // outer-degree bound for nested inputs, 1..2
  std::uint32_t random_samples = 20;
  std::uint64_t seed = 0;
  Mutation mutation = Mutation::none;
};

/// Throws std::invalid_argument for out-of-range bounds or an unknown semiring.
void validate(const GeneratorConfig& config);

struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
};

enum class LawStatus { pass, fail, skipped };

struct LawReport {
  std::string suite;  // family, e.g. "codifferential"
  std::string law;    // e.g. "cd.2"
  GeneratorConfig config;
  LawStatus status = LawStatus::pass;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::string note;  // reason for a skip
};

struct LawInfo {
  std::string id;
  std::string family;
  std::string statement;
};

/// All registered laws in execution order.
const std::vector<LawInfo>& registered_laws();

/// Laws whose id or family matches the glob (`*`, `?`, `[...]`).
std::vector<LawInfo> select_laws(const std::string& glob);

/// Runs one law; failures are reported, never thrown. Throws std::out_of_range for an unknown id.
LawReport run_law(const std::string& id, const GeneratorConfig& config);

std::string status_name(LawStatus s);

/// One JSON object per report (compact, one line).
std::string report_to_json(const LawReport& r);
/// JSON array of reports, pretty-printed.
std::string reports_to_json(const std::vector<LawReport>& reports);
/// "PASS cd.2 (142 cases)" style line, plus counterexample lines on failure.
std::string report_to_text(const LawReport& r);

}  // namespace symtan
