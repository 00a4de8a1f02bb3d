#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidfrac/fraction.hpp"

namespace braidfrac {

/// cone, left_invariance, bi_invariance, compatibility, indirect_axioms,
/// same_sign, semidirect, realization
const std::vector<std::string>& suite_names();

struct Counterexample {
  std::size_t trial = 0;
  std::string check;
  /// (name, literal) pairs; elements print as `frac ...`, forests as `[steps]`.
  std::vector<std::pair<std::string, std::string>> values;
};

struct Report {
  std::string suite;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  std::int64_t time_ms = 0;
  std::optional<Counterexample> first;

  bool passed() const { return failures == 0; }
};

struct HarnessOptions {
  int budget = 6;  // forest steps per side; braids get up to twice as many letters
};

/// Runs `trials` independent trials seeded from (seed, trial index). Throws
/// std::invalid_argument for an unknown suite and FlavorError when the suite
/// does not apply to the context's flavor. Exceptions inside a trial count as
/// failures of check `error`.
Report run_suite(std::string_view suite, const GroupContext& ctx, std::size_t trials,
                 std::uint64_t seed, const HarnessOptions& options = {});

/// `suite=<name> trials=<n> failures=<k> seed=<s> time_ms=<t>`, then for a
/// failing run `counterexample: trial=<i> check=<name>` and one indented
/// `name: literal` line per value.
std::string report_format(const Report& r);

/// Seed of trial `index` under run seed `seed` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace braidfrac
