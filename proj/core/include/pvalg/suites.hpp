#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvalg/pv_catalog.hpp"
#include "pvalg/report.hpp"

namespace pvalg {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

struct SuiteOptions {
  std::optional<PVType> pv;            ///< all builtin entries when unset
  std::uint64_t seed = kDefaultSeed;
  int trials = 0;                      ///< 0 selects each suite's default
  std::optional<int> n;                ///< Smith suites: n in {0,1,2} when unset
  std::optional<std::string> f;        ///< Smith suites: f(t) over Q[a,b]
  std::optional<std::string> model;    ///< oracle suite: every model when unset
  int max_a = 4;
};

/// grading, t0-commutative, degree-growth, hc-generators, center, tau-ideals,
/// smith-pbw, casimir, iso, oracle.
const std::vector<std::string>& suite_names();

/// One report per target; throws OutOfRange for an unknown suite name.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace pvalg
