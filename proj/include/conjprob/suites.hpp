#pragma once

// Verification suites over all modules, one ReportEntry per claim, and the
// value tables printed by the command-line tool.

#include "conjprob/finite_groups.hpp"
#include "conjprob/report.hpp"
#include "conjprob/sym_probabilities.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace conjprob {

enum class Suite { All, Lemma19, Lemma21, Gaps, Frobenius, Oracles, Remarks, Asymptotics };

/// "all", "lemma19", ...; throws PreconditionError otherwise.
Suite parse_suite(std::string_view name);
std::string to_string(Suite suite);

struct SuiteOptions {
  int kappa_cutoff = 80;  // exact values below, recursive bounds above
  int rho_cutoff = 30;
  int kappa_n_max = 300;
  int rho_n_max = 180;
  int regular_l_max = 10000;
  unsigned digits = 10;
  /// Called with a short description before each long step.
  std::function<void(std::string_view)> progress;
};

/// Entries appear in a fixed order; a failing claim never aborts the run.
/// Exceptions inside a claim are reported as a failing entry.
std::vector<ReportEntry> run_suite(Suite suite, const SuiteOptions& options,
                                   StatsCache& cache);

/// Rows n = 1..n_max: n, value, decimal, n^2 value and, when cumulative,
/// sum_{m=0}^{n} of the statistic.
Table sn_table(Statistic stat, int n_max, unsigned digits, bool cumulative,
               StatsCache& cache);

/// Property/value rows: order, class count, centralizer profile, kappa, rho,
/// cp; `invariants` adds center, class sizes, 2-Engel and the gap checks.
Table group_table(const FiniteGroup& g, unsigned digits, bool invariants);

}  // namespace conjprob
