#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsec/certificate.hpp"
#include "gsec/family.hpp"
#include "gsec/json_io.hpp"
#include "gsec/polytope.hpp"

namespace gsec {

/// What a certificate may be checked against; absent pieces are not used.
struct CertContext {
  const ForestFamily* family = nullptr;
  const GsecPolytope* polytope = nullptr;  // the polytope a GSEC claim refers to
  const GsecPolytope* inner = nullptr;     // source of a separating point
  const std::vector<int>* ell = nullptr;
  const PathFamily* routes = nullptr;
  const SetFunction* g = nullptr;
};

/// Re-checks a certificate against the raw definitions.
bool revalidate(const Graph& g, const Certificate& c, const CertContext& ctx);

/// Definition of a BRP route: some initial load q in [0, Q] keeps every
/// prefix load q + D(i) inside [0, Q].
bool brp_feasible_by_definition(std::span<const Rational> d, const Rational& capacity, std::span<const int> order);

struct TrialResult {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string status;  // "pass", "fail", "skip"
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<TrialResult> trials;
  std::vector<std::string> notes;
  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs a seeded suite; trial i uses seed + i. `input` optionally replaces
/// the random instance (prop5 takes a set function, others a family).
/// Throws BadParams for an unknown suite name.
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed, const std::optional<Json>& input = std::nullopt);

Json to_json(const SuiteReport& r);

}  // namespace gsec
