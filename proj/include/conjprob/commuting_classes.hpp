#pragma once

// Commuting conjugacy classes of S_n.
//
// Classes lambda and mu commute when some sigma of type lambda and tau of
// type mu commute. Equivalently the n points split into blocks of equal
// size on each of which both cycle types are regular (a copies of one part
// size). The decision procedure strips the block holding a longest cycle and
// recurses on what is left; brute-force permutation searches validate it.

#include "conjprob/partitions.hpp"
#include "conjprob/rational.hpp"
#include "conjprob/sym_probabilities.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conjprob {

/// Largest weight the commute memo supports.
inline constexpr int kMaxCommuteWeight = 48;

/// Symmetric pair of classes of the same weight, canonically ordered so that
/// left precedes right in the byte encoding.
struct CommutePair {
  CycleType left;
  CycleType right;
  int n = 0;

  CommutePair(CycleType a, CycleType b);
};

/// Memo of the commute relation, one packed triangular table per weight
/// indexed by partition rank. Not synchronized: use one cache per thread and
/// merge() the results.
class CommuteCache {
 public:
  explicit CommuteCache(int max_weight = 30);

  int max_weight() const { return max_weight_; }
  const PartitionRanker& ranker() const { return ranker_; }

  std::optional<bool> lookup(int n, std::uint64_t rank_a,
                             std::uint64_t rank_b) const;
  void store(int n, std::uint64_t rank_a, std::uint64_t rank_b, bool value);

  /// Copies every resolved entry of `other` into this cache.
  void merge(const CommuteCache& other);

  std::uint64_t resolved_entries() const;

 private:
  static std::uint64_t slot(std::uint64_t a, std::uint64_t b);

  int max_weight_;
  PartitionRanker ranker_;
  std::vector<std::vector<std::uint64_t>> tables_;  // 2 bits per pair
};

/// Throws PreconditionError when |lambda| != |mu| and ResourceLimitError
/// when the weight exceeds the cache's maximum.
bool classes_commute(const CycleType& lambda, const CycleType& mu,
                     CommuteCache& cache);
bool classes_commute(const CycleType& lambda, const CycleType& mu);
bool classes_commute(const CommutePair& pair, CommuteCache& cache);

/// rho(S_n) = sum over ordered commuting pairs of 1/(z(lambda) z(mu)).
/// Stored in the stats cache. Throws ResourceLimitError above
/// stats.limits().rho_ceiling.
ExactRational rho_sn(int n, StatsCache& stats, CommuteCache& commute);
ExactRational rho_sn(int n, StatsCache& stats);
ExactRational rho_sn(int n);

/// Does the class of mu meet the centralizer of a fixed sigma of type
/// lambda? Exhaustive over S_n; n <= 8.
bool brute_force_classes_commute(const CycleType& lambda, const CycleType& mu);

/// Rows and columns follow the reverse lexicographic partition order.
std::vector<std::vector<bool>> commute_matrix(int n, CommuteCache& cache);
std::vector<std::vector<bool>> brute_force_commute_matrix(int n);

/// CSV with a header row of partition labels; cells are 0/1.
std::string commute_matrix_csv(int n, CommuteCache& cache);

struct RegularSubsetReport {
  int n = 0;
  int l = 0;
  BigInt count;  // permutations leaving {1..l} invariant and regular on it
  ExactRational observed;
  ExactRational expected;  // r(l) / C(n, l)
  bool holds = false;
};

/// Exhaustive over S_n, n <= 8.
RegularSubsetReport regular_subset_probability_check(int n, int l);

struct CycleStatisticsReport {
  int n = 0;
  // Indexed by l = 1..n (entry 0 unused).
  std::vector<ExactRational> l_cycle_on_fixed_set;  // vs (1/l) C(n,l)^-1
  std::vector<ExactRational> expected_l_cycles;     // vs 1/l
  std::vector<ExactRational> point_in_l_cycle;      // vs 1/n
  bool holds = false;
};

/// Exhaustive over S_n, n <= 8.
CycleStatisticsReport cycle_statistics_check(int n);

}  // namespace conjprob
