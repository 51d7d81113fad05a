#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "doubles.hpp"

namespace mhd {

struct Failure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string name;
  std::int64_t samples = 0;        // tuples evaluated
  std::int64_t active = 0;         // tuples where a compared value was nonzero
  std::int64_t failure_count = 0;  // individual identity violations
  bool pass = true;
  std::vector<Failure> failures;  // first few witnesses
  std::vector<std::string> notes;
};

struct RunConfig {
  std::string instance = "group";  // group | qtaft
  std::string group = "sym:3";     // zn:<n> | sym:<n> | dihedral:<n> | z
  std::string field = "rational";  // rational | fq:<p>
  std::int64_t taft_m = 2;
  std::int64_t taft_i = 1;
  std::string taft_lambda;  // scalar literal; resolved from (m, i) when empty
  std::int64_t window = 8;
  std::int64_t samples = -1;  // -1: exhaustive when feasible, else per-check default
  std::uint64_t seed = 1;
  std::vector<std::string> suite;  // empty runs every check for the instance
  std::string corrupt;             // empty or a corruption name
};

struct SuiteResult {
  std::vector<CheckReport> checks;
  bool all_pass = true;
  bool exhaustive = false;
  std::string resolved_lambda;  // qtaft only
};

// check names in fixed execution order for the given instance kind
std::vector<std::string> suite_names(const std::string& instance);

// "" -> None; otherwise one of drop_antipode, delta_not_cop,
// swap_coaction_b, trivial_braiding
Corrupt parse_corrupt(const std::string& name);

// throws ConfigError when the configuration cannot be run
void validate(const RunConfig& cfg);

SuiteResult run_suite(const RunConfig& cfg);

}  // namespace mhd
