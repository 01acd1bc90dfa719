#pragma once

// Corpus-wide verification of the composition identities. Every suite checks
// a formula route against the brute-force oracle (or, past the oracle cap,
// against an exact formula route already checked on smaller instances) and
// aggregates pass/fail counts per identity.

#include "json.hpp"

#include <string>
#include <vector>

namespace rootedpoly {

struct VerifyOptions {
  /// Oracle cap for constructed products; larger instances are skipped for
  /// the checks that need the oracle.
  int cap = 12;
  /// Relative coefficient tolerance of the numeric (spectral) checks.
  double tol = 1e-8;
};

/// Oracle cap used by `verify` when none is given: ROOTEDPOLY_CAP when set,
/// else 12 (the largest product in the corpus).
int default_verify_cap();

struct IdentityResult {
  std::string id;
  std::string description;
  bool exact = true;
  long instances = 0;
  long failures = 0;
  long skipped = 0;
  double max_deviation = 0.0;
  std::string first_failure;

  /// "pass", "fail", or "skipped" when no instance could be checked.
  std::string status() const;
};

struct SuiteReport {
  std::string suite;
  std::vector<IdentityResult> identities;
  double seconds = 0.0;

  bool passed() const;
  const IdentityResult* find(const std::string& id) const;
  nlohmann::json to_json() const;
};

SuiteReport verify_products(const VerifyOptions& opt = {});
SuiteReport verify_bipartite(const VerifyOptions& opt = {});
SuiteReport verify_spectral(const VerifyOptions& opt = {});
SuiteReport verify_divisibility(const VerifyOptions& opt = {});
SuiteReport verify_crosscheck(const VerifyOptions& opt = {});
SuiteReport verify_dendrimer(const VerifyOptions& opt = {});

/// products, bipartite, spectral, divisibility, crosscheck, dendrimer.
const std::vector<std::string>& suite_names();
/// One suite by name, or every suite for "all". Throws InputError otherwise.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opt = {});

}  // namespace rootedpoly
