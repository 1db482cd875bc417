#pragma once

// Exact statistics of the symmetric groups and the recursive upper bounds
// built from them.
//
//   kappa(S_n)  probability that two uniform permutations are conjugate
//   rho(S_n)    probability that they have conjugates that commute
//   s_k(n)      probability that every cycle is shorter than k
//   r(l)        probability that a permutation of l points is regular
//
// Conventions: kappa(S_0) = rho(S_0) = s_k(0) = 1.

#include "conjprob/certified.hpp"
#include "conjprob/rational.hpp"

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conjprob {

struct Limits {
  int kappa_ceiling = 80;  // largest n for exact kappa(S_n)
  int rho_ceiling = 30;    // largest n for exact rho(S_n)
};

enum class Statistic { Kappa, Rho };
std::string to_string(Statistic stat);

enum class BoundMethod { Exact, Recursive };

struct BoundRecord {
  int n = 0;
  ExactRational value;
  BoundMethod method = BoundMethod::Exact;
  std::optional<int> chosen_k;  // set iff method == Recursive
};

/// Memo store shared by the statistics. Every entry is reproducible from
/// scratch, so presence or absence never changes a result. All members are
/// safe to call concurrently; each write is atomic per key.
class StatsCache {
 public:
  explicit StatsCache(Limits limits = {});

  const Limits& limits() const { return limits_; }

  std::optional<ExactRational> kappa(int n) const;
  std::optional<ExactRational> rho(int n) const;
  std::optional<ExactRational> s(int k, int n) const;
  std::optional<ExactRational> r(int l) const;
  std::optional<BoundRecord> bound(Statistic stat, int n) const;

  void put_kappa(int n, const ExactRational& v);
  void put_rho(int n, const ExactRational& v);
  void put_s(int k, int n, const ExactRational& v);
  void put_r(int l, const ExactRational& v);
  void put_bound(Statistic stat, const BoundRecord& rec);

  std::size_t size() const;

  /// One record per line: "<stat> <args> <num>/<den>" with stat in
  /// {kappa, rho, s, r}; s takes "k n", the others a single argument.
  void save(std::ostream& out) const;
  /// Reads records written by save(). Throws ParseError naming the first
  /// malformed line; nothing is inserted in that case.
  void load(std::istream& in);

 private:
  Limits limits_;
  mutable std::mutex mutex_;
  std::map<int, ExactRational> kappa_;
  std::map<int, ExactRational> rho_;
  std::map<std::pair<int, int>, ExactRational> s_;
  std::map<int, ExactRational> r_;
  std::map<int, BoundRecord> kappa_bounds_;
  std::map<int, BoundRecord> rho_bounds_;
};

// ---------------------------------------------------------------------------
// Exact values

/// kappa(S_n) = sum over partitions lambda of n of 1/z(lambda)^2. Throws
/// ResourceLimitError above limits().kappa_ceiling.
ExactRational kappa_sn(int n, StatsCache& cache);
ExactRational kappa_sn(int n);

/// kappa(S_0), ..., kappa(S_n_max).
std::vector<ExactRational> kappa_sn_table(int n_max, StatsCache& cache);

/// Same value by visiting every partition of n and summing (n!/z)^2 as
/// integers. Independent of kappa_sn's grouped evaluation; used as oracle.
ExactRational kappa_sn_enumerated(int n, int ceiling = 80);

/// s_k(n) from s_k(n) = (1/n) sum_{j=1}^{k-1} s_k(n-j), s_k(n) = 1 for n < k.
ExactRational s_small_cycles(int k, int n, StatsCache& cache);
ExactRational s_small_cycles(int k, int n);
/// s_k(0), ..., s_k(n_max).
std::vector<ExactRational> s_small_cycles_table(int k, int n_max,
                                                StatsCache& cache);

/// Sum of 1/z(lambda) over partitions of n with every part < k.
ExactRational s_small_cycles_oracle(int k, int n, int ceiling = 80);

/// r(l) = sum over m | l of m^m / (l^m m!).
ExactRational r_regular(int l, StatsCache& cache);
ExactRational r_regular(int l);

struct RegularBoundsReport {
  int l_max = 0;
  bool holds = true;
  std::optional<int> first_violation;
};

/// 1/l <= r(l) <= 1/l + 2/l^2 + c/l^3 for l = 1..l_max, exact r(l), certified
/// against the lower rational bound on c = e^3/(1 - e/3). Values are not
/// cached.
RegularBoundsReport regular_bounds_check(int l_max);

/// 13^2 kappa(S_13) and 10^2 rho(S_10).
ExactRational kappa_constant(StatsCache& cache);
ExactRational rho_constant(StatsCache& cache);
ExactRational uniform_constant(Statistic stat, StatsCache& cache);

// ---------------------------------------------------------------------------
// Recursive bounds

/// Upper bound s_k(n)^2 + sum_{l=k}^n w(l) v(n-l) with w(l) = 1/l^2 for kappa
/// and r(l)^2 for rho, where v(m) is the exact statistic if m is within the
/// ceiling and otherwise a cached BoundRecord. Requires 2 <= k <= n; throws
/// MissingDependencyError if some v(m) is unavailable.
ExactRational kappa_upper_bound(int n, int k, StatsCache& cache);
ExactRational rho_upper_bound(int n, int k, StatsCache& cache);

/// Lower bound sum_{l=k}^n v(n-l)/l^2 from exact values; requires n/2 < k <= n.
ExactRational kappa_lower_bound(int n, int k, StatsCache& cache);
ExactRational rho_lower_bound(int n, int k, StatsCache& cache);

struct UniformBoundReport {
  Statistic stat = Statistic::Kappa;
  int n_max = 0;
  int exact_cutoff = 0;
  ExactRational constant;             // C_kappa or C_rho
  std::vector<BoundRecord> records;   // n = 1 .. n_max
  bool passed = true;
  std::optional<int> first_failure;   // smallest n with n^2 value > C
  std::optional<int> failure_best_k;
  /// n with the largest n^2 value among the records, and that value.
  int argmax_n = 0;
  ExactRational max_scaled;
};

/// Builds BoundRecords for n = 1..n_max: exact up to exact_cutoff, then the
/// minimum upper bound over k = 2..min(n, k_max). Records are stored in the
/// cache. Checks n^2 value <= C throughout; a failure is reported, not thrown.
UniformBoundReport verify_uniform_bound(Statistic stat, int n_max,
                                        int exact_cutoff, StatsCache& cache,
                                        int k_max = 60);

struct MonotonicityReport {
  int k = 0;
  int n_lo = 0;
  int n_hi = 0;
  bool holds = true;
  std::optional<int> first_violation;
};

/// Checks n s_k(n) >= (n+1) s_k(n+1) for every n in [n_lo, n_hi].
MonotonicityReport nsk_monotonicity_check(int k, int n_lo, int n_hi,
                                          StatsCache& cache);

struct SmallCyclesReport {
  int k = 0;
  int n = 0;
  int t = 0;  // floor(n / (k-1))
  ExactRational s;
  ExactRational factorial_bound;  // 1/t!
  ExactRational exp_bound_lo;     // (e_lo / t)^t, 1 when t = 0
  bool factorial_holds = false;
  bool exp_holds = false;
};

/// s_k(n) <= 1/t! and s_k(n) <= (e/t)^t; the second is certified against
/// the lower rational bound on e.
SmallCyclesReport small_cycles_inequalities(int k, int n, StatsCache& cache);

struct PfracReport {
  int n = 0;
  int k = 0;
  ExactRational lhs;
  ExactRational rhs_lo;  // 1/(n^2 k) + 2 log_lo(n/k) / n^3
  bool holds = false;
};

/// sum_{l=ceil(n/2)}^{n-k-1} 1/(l^2 (n-l)^2) <= 1/(n^2 k) + 2 log(n/k)/n^3,
/// for 0 < k < n/2.
PfracReport pfrac_inequality_check(int n, int k);

/// lo = sum_{m=0}^{n_cut} v(m), hi = lo + C / n_cut. The tail over n > n_cut
/// is at most C sum_{n > n_cut} 1/n^2 < C / n_cut.
RationalInterval a_kappa_interval(int n_cut, StatsCache& cache);
RationalInterval a_rho_interval(int n_cut, StatsCache& cache);

enum class ProofChain { UniformKappa, UniformRho };

struct ProofChainReport {
  ProofChain which = ProofChain::UniformKappa;
  std::vector<ExactRational> summands;
  std::vector<std::string> reference;  // published 5-place values
  ExactRational total;
  ExactRational constant;
  bool closes = false;  // total < C_kappa, resp. total <= C_rho
};

/// Recomputes the three summands of the inductive step that carries the
/// uniform bound past the last computed n (300 for kappa, 180 for rho).
ProofChainReport theorem_proof_constants(ProofChain which, StatsCache& cache);

}  // namespace conjprob
