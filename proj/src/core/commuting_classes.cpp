#include "conjprob/commuting_classes.hpp"

#include "conjprob/errors.hpp"
#include "conjprob/permutation.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace conjprob {

CommutePair::CommutePair(CycleType a, CycleType b) {
  if (a.n() != b.n())
    throw PreconditionError("commute pair: partitions of different weights");
  if (b.encode() < a.encode()) std::swap(a, b);
  left = std::move(a);
  right = std::move(b);
  n = left.n();
}

// ---------------------------------------------------------------------------
// CommuteCache

CommuteCache::CommuteCache(int max_weight)
    : max_weight_(max_weight),
      ranker_(std::clamp(max_weight, 0, kMaxCommuteWeight)),
      tables_(static_cast<std::size_t>(std::max(max_weight, 0)) + 1) {
  if (max_weight < 0 || max_weight > kMaxCommuteWeight)
    throw ResourceLimitError("commute cache weight must be in [0, " +
                             std::to_string(kMaxCommuteWeight) + "]");
}

std::uint64_t CommuteCache::slot(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return b * (b + 1) / 2 + a;
}

std::optional<bool> CommuteCache::lookup(int n, std::uint64_t a,
                                         std::uint64_t b) const {
  const auto& table = tables_[static_cast<std::size_t>(n)];
  if (table.empty()) return std::nullopt;
  const std::uint64_t s = slot(a, b);
  const unsigned bits = (table[s / 32] >> (2 * (s % 32))) & 3u;
  if (bits == 0) return std::nullopt;
  return bits == 2;
}

void CommuteCache::store(int n, std::uint64_t a, std::uint64_t b, bool value) {
  auto& table = tables_[static_cast<std::size_t>(n)];
  if (table.empty()) {
    const std::uint64_t p = ranker_.count(n);
    table.assign((p * (p + 1) / 2 + 31) / 32, 0);
  }
  const std::uint64_t s = slot(a, b);
  const std::uint64_t shift = 2 * (s % 32);
  table[s / 32] = (table[s / 32] & ~(std::uint64_t{3} << shift)) |
                  (std::uint64_t{value ? 2u : 1u} << shift);
}

void CommuteCache::merge(const CommuteCache& other) {
  const int top = std::min(max_weight_, other.max_weight_);
  for (int n = 0; n <= top; ++n) {
    const auto& theirs = other.tables_[n];
    if (theirs.empty()) continue;
    auto& mine = tables_[n];
    if (mine.empty()) {
      mine = theirs;
      continue;
    }
    for (std::size_t i = 0; i < mine.size(); ++i) {
      // Fill only slots we have not resolved; resolved values agree.
      std::uint64_t word = mine[i];
      std::uint64_t resolved = (word | (word >> 1)) & 0x5555555555555555ull;
      std::uint64_t mask = ~(resolved | (resolved << 1));
      mine[i] = word | (theirs[i] & mask);
    }
  }
}

std::uint64_t CommuteCache::resolved_entries() const {
  std::uint64_t total = 0;
  for (const auto& table : tables_)
    for (std::uint64_t word : table)
      total += static_cast<std::uint64_t>(
          __builtin_popcountll((word | (word >> 1)) & 0x5555555555555555ull));
  return total;
}

// ---------------------------------------------------------------------------
// Decision procedure

namespace {

using Multiplicities = std::array<std::uint8_t, kMaxCommuteWeight + 1>;

Multiplicities to_multiplicities(const CycleType& lambda) {
  Multiplicities m{};
  for (int p : lambda.parts()) ++m[p];
  return m;
}

int largest_part(const Multiplicities& m, int n) {
  for (int p = n; p >= 1; --p)
    if (m[p]) return p;
  return 0;
}

bool decide(const Multiplicities& a, const Multiplicities& b, int n,
            CommuteCache& cache) {
  if (n == 0) return true;
  const auto& ranker = cache.ranker();
  const std::uint64_t ra = ranker.rank_multiplicities(a, n);
  const std::uint64_t rb = ranker.rank_multiplicities(b, n);
  if (auto hit = cache.lookup(n, ra, rb)) return *hit;
  if (ra == rb) {
    cache.store(n, ra, rb, true);
    return true;
  }

  const int m = std::max(largest_part(a, n), largest_part(b, n));
  bool result = false;
  // The block X holding a longest cycle: its host acts on X as `count`
  // m-cycles, the other side as l/e cycles of some length e dividing l.
  for (int side = 0; side < 2 && !result; ++side) {
    const Multiplicities& host = side == 0 ? a : b;
    const Multiplicities& other = side == 0 ? b : a;
    if (host[m] == 0) continue;
    for (int count = 1; count <= host[m] && !result; ++count) {
      const int block = count * m;
      for (int e = 1; e <= m && !result; ++e) {
        if (block % e != 0 || other[e] < block / e) continue;
        Multiplicities host_rest = host;
        Multiplicities other_rest = other;
        host_rest[m] = static_cast<std::uint8_t>(host_rest[m] - count);
        other_rest[e] = static_cast<std::uint8_t>(other_rest[e] - block / e);
        result = decide(host_rest, other_rest, n - block, cache);
      }
    }
  }
  cache.store(n, ra, rb, result);
  return result;
}

}  // namespace

bool classes_commute(const CycleType& lambda, const CycleType& mu,
                     CommuteCache& cache) {
  if (lambda.n() != mu.n())
    throw PreconditionError("classes_commute: weights differ (" +
                            std::to_string(lambda.n()) + " vs " +
                            std::to_string(mu.n()) + ")");
  if (lambda.n() > cache.max_weight())
    throw ResourceLimitError("classes_commute: weight " +
                             std::to_string(lambda.n()) +
                             " exceeds the commute cache maximum");
  return decide(to_multiplicities(lambda), to_multiplicities(mu), lambda.n(),
                cache);
}

bool classes_commute(const CycleType& lambda, const CycleType& mu) {
  CommuteCache cache(std::clamp(lambda.n(), 0, kMaxCommuteWeight));
  return classes_commute(lambda, mu, cache);
}

bool classes_commute(const CommutePair& pair, CommuteCache& cache) {
  return classes_commute(pair.left, pair.right, cache);
}

ExactRational rho_sn(int n, StatsCache& stats, CommuteCache& commute) {
  if (n < 0) throw PreconditionError("rho_sn: n must be >= 0");
  if (auto v = stats.rho(n)) return *v;
  if (n > stats.limits().rho_ceiling)
    throw ResourceLimitError("rho_sn: n = " + std::to_string(n) +
                             " exceeds the enumeration ceiling " +
                             std::to_string(stats.limits().rho_ceiling));
  if (n > commute.max_weight())
    throw ResourceLimitError("rho_sn: commute cache too small for n = " +
                             std::to_string(n));

  std::vector<Multiplicities> classes;
  std::vector<BigInt> sizes;  // n! / z(lambda)
  const BigInt n_factorial = factorial(static_cast<unsigned long>(n));
  PartitionStream stream(n);
  while (stream.next()) {
    Multiplicities m{};
    for (int p : stream.parts()) ++m[p];
    classes.push_back(m);
    sizes.push_back(n_factorial / centralizer_order(stream.parts()));
  }
  // n!^2 rho(S_n) = sum_i c_i (c_i + 2 sum_{j > i, i ~ j} c_j).
  BigInt total = 0;
  BigInt inner;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    inner = 0;
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (decide(classes[i], classes[j], n, commute)) inner += sizes[j];
    total += sizes[i] * (sizes[i] + 2 * inner);
  }
  ExactRational value = make_rational(total, n_factorial * n_factorial);
  stats.put_rho(n, value);
  return value;
}

ExactRational rho_sn(int n, StatsCache& stats) {
  if (auto v = stats.rho(n)) return *v;
  CommuteCache commute(std::clamp(n, 0, kMaxCommuteWeight));
  return rho_sn(n, stats, commute);
}

ExactRational rho_sn(int n) {
  StatsCache stats;
  return rho_sn(n, stats);
}

// ---------------------------------------------------------------------------
// Brute-force oracles

namespace {

void require_small(int n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": n must be >= 0");
  if (n > 8)
    throw ResourceLimitError(std::string(what) + ": degree " +
                             std::to_string(n) + " > 8");
}

}  // namespace

bool brute_force_classes_commute(const CycleType& lambda, const CycleType& mu) {
  if (lambda.n() != mu.n())
    throw PreconditionError("brute_force_classes_commute: weights differ");
  require_small(lambda.n(), "brute_force_classes_commute");
  if (lambda.n() == 0) return true;
  const Perm sigma = perm_of_type(lambda);
  bool found = false;
  for_each_permutation(lambda.n(), [&](const Perm& tau) {
    if (!found && commute(sigma, tau) && cycle_type(tau) == mu) found = true;
  });
  return found;
}

std::vector<std::vector<bool>> commute_matrix(int n, CommuteCache& cache) {
  auto parts = all_partitions(n);
  std::vector<std::vector<bool>> out(parts.size(),
                                     std::vector<bool>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      out[i][j] = classes_commute(parts[i], parts[j], cache);
  return out;
}

std::vector<std::vector<bool>> brute_force_commute_matrix(int n) {
  require_small(n, "brute_force_commute_matrix");
  auto parts = all_partitions(n);
  std::map<CycleType, std::size_t> index;
  for (std::size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i], i);
  std::vector<std::vector<bool>> out(parts.size(),
                                     std::vector<bool>(parts.size()));
  // One pass over S_n per row: the types met by the centralizer of sigma.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Perm sigma = perm_of_type(parts[i]);
    if (n == 0) {
      out[i][i] = true;
      continue;
    }
    for_each_permutation(n, [&](const Perm& tau) {
      if (commute(sigma, tau)) out[i][index.at(cycle_type(tau))] = true;
    });
  }
  return out;
}

std::string commute_matrix_csv(int n, CommuteCache& cache) {
  auto parts = all_partitions(n);
  auto matrix = commute_matrix(n, cache);
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::string out = "\"\"";
  for (const auto& p : parts) out += "," + quote(p.to_string());
  out += "\r\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += quote(parts[i].to_string());
    for (bool cell : matrix[i]) out += cell ? ",1" : ",0";
    out += "\r\n";
  }
  return out;
}

RegularSubsetReport regular_subset_probability_check(int n, int l) {
  require_small(n, "regular_subset_probability_check");
  if (l < 1 || l > n)
    throw PreconditionError("regular_subset_probability_check: need 1 <= l <= n");
  RegularSubsetReport report;
  report.n = n;
  report.l = l;
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const Perm& sigma) {
    for (int x = 0; x < l; ++x)
      if (sigma[x] >= l) return;
    if (is_regular(std::span<const int>(sigma.data(), static_cast<std::size_t>(l))))
      ++count;
  });
  report.count = BigInt(std::to_string(count));
  report.observed =
      make_rational(report.count, factorial(static_cast<unsigned long>(n)));
  report.expected =
      r_regular(l) / ExactRational(binomial(static_cast<unsigned long>(n),
                                            static_cast<unsigned long>(l)));
  report.holds = report.observed == report.expected;
  return report;
}

CycleStatisticsReport cycle_statistics_check(int n) {
  require_small(n, "cycle_statistics_check");
  if (n < 1) throw PreconditionError("cycle_statistics_check: need n >= 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint64_t> on_fixed(size, 0);   // l-cycle on {0..l-1}
  std::vector<std::uint64_t> cycles(size, 0);     // total l-cycles
  std::vector<std::uint64_t> point_in(size, 0);   // point 0 in an l-cycle
  for_each_permutation(n, [&](const Perm& sigma) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      int min_point = i;
      int max_point = i;
      bool has_zero = false;
      for (int j = i; !seen[j]; j = sigma[j]) {
        seen[j] = 1;
        ++len;
        min_point = std::min(min_point, j);
        max_point = std::max(max_point, j);
        has_zero = has_zero || j == 0;
      }
      ++cycles[len];
      if (has_zero) ++point_in[len];
      if (min_point == 0 && max_point == len - 1) ++on_fixed[len];
    }
  });
  const BigInt total = factorial(static_cast<unsigned long>(n));
  CycleStatisticsReport report;
  report.n = n;
  report.l_cycle_on_fixed_set.resize(size);
  report.expected_l_cycles.resize(size);
  report.point_in_l_cycle.resize(size);
  report.holds = true;
  for (int l = 1; l <= n; ++l) {
    auto big = [](std::uint64_t v) { return BigInt(std::to_string(v)); };
    report.l_cycle_on_fixed_set[l] = make_rational(big(on_fixed[l]), total);
    report.expected_l_cycles[l] = make_rational(big(cycles[l]), total);
    report.point_in_l_cycle[l] = make_rational(big(point_in[l]), total);
    const ExactRational fixed_expected = make_rational(
        BigInt(1), BigInt(l) * binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(l)));
    report.holds = report.holds &&
                   report.l_cycle_on_fixed_set[l] == fixed_expected &&
                   report.expected_l_cycles[l] == make_rational(1, l) &&
                   report.point_in_l_cycle[l] == make_rational(1, n);
  }
  return report;
}

}  // namespace conjprob
