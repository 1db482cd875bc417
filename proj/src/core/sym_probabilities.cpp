#include "conjprob/sym_probabilities.hpp"

#include "conjprob/commuting_classes.hpp"
#include "conjprob/errors.hpp"
#include "conjprob/partitions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace conjprob {

std::string to_string(Statistic stat) {
  return stat == Statistic::Kappa ? "kappa" : "rho";
}

// ---------------------------------------------------------------------------
// StatsCache

StatsCache::StatsCache(Limits limits) : limits_(limits) {
  if (limits_.kappa_ceiling < 0 || limits_.rho_ceiling < 0)
    throw PreconditionError("ceilings must be non-negative");
  kappa_.emplace(0, ExactRational(1));
  rho_.emplace(0, ExactRational(1));
}

namespace {

template <class Map, class Key>
std::optional<typename Map::mapped_type> find_in(const Map& map,
                                                 const Key& key) {
  auto it = map.find(key);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::optional<ExactRational> StatsCache::kappa(int n) const {
  std::lock_guard lock(mutex_);
  return find_in(kappa_, n);
}

std::optional<ExactRational> StatsCache::rho(int n) const {
  std::lock_guard lock(mutex_);
  return find_in(rho_, n);
}

std::optional<ExactRational> StatsCache::s(int k, int n) const {
  if (n < k) return ExactRational(1);
  std::lock_guard lock(mutex_);
  return find_in(s_, std::pair{k, n});
}

std::optional<ExactRational> StatsCache::r(int l) const {
  std::lock_guard lock(mutex_);
  return find_in(r_, l);
}

std::optional<BoundRecord> StatsCache::bound(Statistic stat, int n) const {
  std::lock_guard lock(mutex_);
  return find_in(stat == Statistic::Kappa ? kappa_bounds_ : rho_bounds_, n);
}

void StatsCache::put_kappa(int n, const ExactRational& v) {
  std::lock_guard lock(mutex_);
  kappa_.insert_or_assign(n, v);
}

void StatsCache::put_rho(int n, const ExactRational& v) {
  std::lock_guard lock(mutex_);
  rho_.insert_or_assign(n, v);
}

void StatsCache::put_s(int k, int n, const ExactRational& v) {
  if (n < k) return;
  std::lock_guard lock(mutex_);
  s_.insert_or_assign(std::pair{k, n}, v);
}

void StatsCache::put_r(int l, const ExactRational& v) {
  std::lock_guard lock(mutex_);
  r_.insert_or_assign(l, v);
}

void StatsCache::put_bound(Statistic stat, const BoundRecord& rec) {
  std::lock_guard lock(mutex_);
  (stat == Statistic::Kappa ? kappa_bounds_ : rho_bounds_)
      .insert_or_assign(rec.n, rec);
}

std::size_t StatsCache::size() const {
  std::lock_guard lock(mutex_);
  return kappa_.size() + rho_.size() + s_.size() + r_.size() +
         kappa_bounds_.size() + rho_bounds_.size();
}

void StatsCache::save(std::ostream& out) const {
  std::lock_guard lock(mutex_);
  for (const auto& [n, v] : kappa_)
    out << "kappa " << n << ' ' << to_fraction_string(v) << '\n';
  for (const auto& [n, v] : rho_)
    out << "rho " << n << ' ' << to_fraction_string(v) << '\n';
  for (const auto& [key, v] : s_)
    out << "s " << key.first << ' ' << key.second << ' '
        << to_fraction_string(v) << '\n';
  for (const auto& [l, v] : r_)
    out << "r " << l << ' ' << to_fraction_string(v) << '\n';
}

namespace {

int parse_index(const std::string& token, std::size_t line) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, "expected a non-negative integer, got '" + token +
                               "'");
  return std::stoi(token);
}

}  // namespace

void StatsCache::load(std::istream& in) {
  struct Pending {
    std::string stat;
    int a = 0;
    int b = 0;
    ExactRational value;
  };
  std::vector<Pending> pending;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    std::istringstream fields(text);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    Pending p;
    p.stat = tokens[0];
    const std::size_t expected = p.stat == "s" ? 4 : 3;
    if (p.stat != "kappa" && p.stat != "rho" && p.stat != "s" && p.stat != "r")
      throw ParseError(line, "unknown statistic '" + p.stat + "'");
    if (tokens.size() != expected)
      throw ParseError(line, "expected " + std::to_string(expected) +
                                 " fields, got " +
                                 std::to_string(tokens.size()));
    p.a = parse_index(tokens[1], line);
    if (p.stat == "s") p.b = parse_index(tokens[2], line);
    const std::string& value_text = tokens.back();
    if (value_text.find('/') == std::string::npos)
      throw ParseError(line, "value must be written num/den");
    try {
      p.value = parse_rational(value_text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
    if (p.value < 0 || p.value > 1)
      throw ParseError(line, "probability outside [0, 1]");
    if (p.stat == "s" && p.a < 2) throw ParseError(line, "s needs k >= 2");
    if (p.stat == "r" && p.a < 1) throw ParseError(line, "r needs l >= 1");
    pending.push_back(std::move(p));
  }
  for (const auto& p : pending) {
    if (p.stat == "kappa")
      put_kappa(p.a, p.value);
    else if (p.stat == "rho")
      put_rho(p.a, p.value);
    else if (p.stat == "s")
      put_s(p.a, p.b, p.value);
    else
      put_r(p.a, p.value);
  }
}

// ---------------------------------------------------------------------------
// Exact values

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Coefficients of prod_{i=1}^{n_max} sum_m x^{im} / (i^{2m} m!^2): the
// coefficient of x^n is the partition sum for kappa(S_n), with partitions
// grouped by the multiplicity of each part size.
std::vector<ExactRational> kappa_by_part_sizes(int n_max) {
  std::vector<ExactRational> coef(static_cast<std::size_t>(n_max) + 1, 0);
  coef[0] = 1;
  for (int i = 1; i <= n_max; ++i) {
    std::vector<ExactRational> next = coef;
    ExactRational weight = 1;  // 1 / (i^{2m} m!^2)
    for (int m = 1; i * m <= n_max; ++m) {
      weight /= ExactRational(BigInt(i) * i * m * m);
      for (int j = i * m; j <= n_max; ++j)
        if (coef[j - i * m] != 0) next[j] += coef[j - i * m] * weight;
    }
    coef = std::move(next);
  }
  return coef;
}

}  // namespace

std::vector<ExactRational> kappa_sn_table(int n_max, StatsCache& cache) {
  require(n_max >= 0, "kappa_sn: n must be >= 0");
  if (n_max > cache.limits().kappa_ceiling)
    throw ResourceLimitError("kappa_sn: n = " + std::to_string(n_max) +
                             " exceeds the enumeration ceiling " +
                             std::to_string(cache.limits().kappa_ceiling));
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  bool complete = true;
  for (int n = 0; n <= n_max && complete; ++n) {
    auto v = cache.kappa(n);
    if (!v) complete = false;
    else out.push_back(*v);
  }
  if (complete) return out;
  out = kappa_by_part_sizes(n_max);
  for (int n = 0; n <= n_max; ++n) cache.put_kappa(n, out[n]);
  return out;
}

ExactRational kappa_sn(int n, StatsCache& cache) {
  require(n >= 0, "kappa_sn: n must be >= 0");
  if (auto v = cache.kappa(n)) return *v;
  return kappa_sn_table(n, cache).back();
}

ExactRational kappa_sn(int n) {
  StatsCache cache;
  return kappa_sn(n, cache);
}

ExactRational kappa_sn_enumerated(int n, int ceiling) {
  require(n >= 0, "kappa_sn_enumerated: n must be >= 0");
  if (n > ceiling)
    throw ResourceLimitError("kappa_sn_enumerated: n exceeds ceiling");
  const BigInt n_factorial = factorial(static_cast<unsigned long>(n));
  BigInt total = 0;
  BigInt class_size;
  PartitionStream stream(n);
  while (stream.next()) {
    class_size = n_factorial / centralizer_order(stream.parts());
    total += class_size * class_size;
  }
  return make_rational(total, n_factorial * n_factorial);
}

std::vector<ExactRational> s_small_cycles_table(int k, int n_max,
                                                StatsCache& cache) {
  require(k >= 2, "s_small_cycles: k must be >= 2");
  require(n_max >= 0, "s_small_cycles: n must be >= 0");
  std::vector<ExactRational> s(static_cast<std::size_t>(n_max) + 1);
  int start = 0;
  for (; start <= n_max; ++start) {
    auto v = cache.s(k, start);
    if (!v) break;
    s[start] = *v;
  }
  if (start > n_max) return s;
  // Sliding window sum of the previous k-1 values.
  ExactRational window = 0;
  for (int j = std::max(0, start - (k - 1)); j < start; ++j) window += s[j];
  for (int n = start; n <= n_max; ++n) {
    if (n < k) {
      s[n] = 1;
    } else {
      s[n] = window / n;
      cache.put_s(k, n, s[n]);
    }
    window += s[n];
    if (n - (k - 1) >= 0) window -= s[n - (k - 1)];
  }
  return s;
}

ExactRational s_small_cycles(int k, int n, StatsCache& cache) {
  require(k >= 2, "s_small_cycles: k must be >= 2");
  require(n >= 0, "s_small_cycles: n must be >= 0");
  if (auto v = cache.s(k, n)) return *v;
  return s_small_cycles_table(k, n, cache).back();
}

ExactRational s_small_cycles(int k, int n) {
  StatsCache cache;
  return s_small_cycles(k, n, cache);
}

ExactRational s_small_cycles_oracle(int k, int n, int ceiling) {
  require(k >= 2, "s_small_cycles_oracle: k must be >= 2");
  require(n >= 0, "s_small_cycles_oracle: n must be >= 0");
  if (n > ceiling)
    throw ResourceLimitError("s_small_cycles_oracle: n exceeds ceiling");
  const BigInt n_factorial = factorial(static_cast<unsigned long>(n));
  BigInt count = 0;  // permutations with all cycles shorter than k
  PartitionStream stream(n, 1, k - 1);
  while (stream.next()) count += n_factorial / centralizer_order(stream.parts());
  return make_rational(count, n_factorial);
}

ExactRational r_regular(int l, StatsCache& cache) {
  require(l >= 1, "r_regular: l must be >= 1");
  if (auto v = cache.r(l)) return *v;
  // Cycle type ((l/m)^m) has centralizer order (l/m)^m m!.
  ExactRational total = 0;
  for (int m = 1; m <= l; ++m) {
    if (l % m) continue;
    total += ExactRational(
        1, power(BigInt(l / m), static_cast<unsigned long>(m)) *
               factorial(static_cast<unsigned long>(m)));
  }
  total.canonicalize();
  cache.put_r(l, total);
  return total;
}

ExactRational r_regular(int l) {
  StatsCache cache;
  return r_regular(l, cache);
}

RegularBoundsReport regular_bounds_check(int l_max) {
  RegularBoundsReport report;
  report.l_max = l_max;
  const ExactRational c_lo = regular_tail_constant().lo;
  for (int l = 1; l <= l_max; ++l) {
    StatsCache scratch;
    const ExactRational r = r_regular(l, scratch);
    const BigInt big_l(l);
    const ExactRational lower = make_rational(BigInt(1), big_l);
    ExactRational upper = lower + make_rational(BigInt(2), big_l * big_l) +
                          c_lo / ExactRational(big_l * big_l * big_l);
    upper.canonicalize();
    if (r < lower || r > upper) {
      report.holds = false;
      report.first_violation = l;
      break;
    }
  }
  return report;
}

ExactRational kappa_constant(StatsCache& cache) {
  return 169 * kappa_sn(13, cache);
}

ExactRational rho_constant(StatsCache& cache) {
  return 100 * rho_sn(10, cache);
}

ExactRational uniform_constant(Statistic stat, StatsCache& cache) {
  return stat == Statistic::Kappa ? kappa_constant(cache) : rho_constant(cache);
}

// ---------------------------------------------------------------------------
// Recursive bounds

namespace {

ExactRational exact_value(Statistic stat, int m, StatsCache& cache) {
  return stat == Statistic::Kappa ? kappa_sn(m, cache) : rho_sn(m, cache);
}

int ceiling_of(Statistic stat, const StatsCache& cache) {
  return stat == Statistic::Kappa ? cache.limits().kappa_ceiling
                                  : cache.limits().rho_ceiling;
}

ExactRational weight(Statistic stat, int l, StatsCache& cache) {
  if (stat == Statistic::Kappa) return ExactRational(1, BigInt(l) * l);
  ExactRational r = r_regular(l, cache);
  return r * r;
}

// v(m): exact within the ceiling, otherwise the cached certified bound.
ExactRational value_or_bound(Statistic stat, int m, StatsCache& cache) {
  if (m <= ceiling_of(stat, cache)) return exact_value(stat, m, cache);
  if (auto rec = cache.bound(stat, m)) return rec->value;
  throw MissingDependencyError("no exact value or certified bound for " +
                               to_string(stat) + "(S_" + std::to_string(m) +
                               ")");
}

ExactRational upper_bound(Statistic stat, int n, int k, StatsCache& cache) {
  require(2 <= k && k <= n, "upper bound: need 2 <= k <= n");
  ExactRational s = s_small_cycles(k, n, cache);
  ExactRational total = s * s;
  for (int l = k; l <= n; ++l)
    total += weight(stat, l, cache) * value_or_bound(stat, n - l, cache);
  return total;
}

ExactRational lower_bound(Statistic stat, int n, int k, StatsCache& cache) {
  require(n >= 1 && k <= n && 2 * k > n, "lower bound: need n/2 < k <= n");
  ExactRational total = 0;
  for (int l = k; l <= n; ++l)
    total += exact_value(stat, n - l, cache) / ExactRational(BigInt(l) * l);
  return total;
}

}  // namespace

ExactRational kappa_upper_bound(int n, int k, StatsCache& cache) {
  return upper_bound(Statistic::Kappa, n, k, cache);
}

ExactRational rho_upper_bound(int n, int k, StatsCache& cache) {
  return upper_bound(Statistic::Rho, n, k, cache);
}

ExactRational kappa_lower_bound(int n, int k, StatsCache& cache) {
  return lower_bound(Statistic::Kappa, n, k, cache);
}

ExactRational rho_lower_bound(int n, int k, StatsCache& cache) {
  return lower_bound(Statistic::Rho, n, k, cache);
}

UniformBoundReport verify_uniform_bound(Statistic stat, int n_max,
                                        int exact_cutoff, StatsCache& cache,
                                        int k_max) {
  require(n_max >= 1, "verify_uniform_bound: n_max must be >= 1");
  require(exact_cutoff >= 0, "verify_uniform_bound: cutoff must be >= 0");
  require(k_max >= 2, "verify_uniform_bound: k_max must be >= 2");
  if (exact_cutoff > ceiling_of(stat, cache))
    throw ResourceLimitError("verify_uniform_bound: exact cutoff " +
                             std::to_string(exact_cutoff) +
                             " exceeds the enumeration ceiling");

  UniformBoundReport report;
  report.stat = stat;
  report.n_max = n_max;
  report.exact_cutoff = exact_cutoff;
  report.constant = uniform_constant(stat, cache);

  const int exact_top = std::min(exact_cutoff, n_max);
  std::vector<ExactRational> values(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= exact_top; ++m) values[m] = exact_value(stat, m, cache);

  const bool canonical = exact_cutoff == ceiling_of(stat, cache);
  std::vector<ExactRational> weights(static_cast<std::size_t>(n_max) + 1);
  for (int l = 1; l <= n_max; ++l) weights[l] = weight(stat, l, cache);
  const int k_top = std::min(k_max, n_max);
  std::vector<std::vector<ExactRational>> s_tables;
  if (n_max > exact_top)
    for (int k = 2; k <= k_top; ++k)
      s_tables.push_back(s_small_cycles_table(k, n_max, cache));

  for (int n = 1; n <= n_max; ++n) {
    BoundRecord rec;
    rec.n = n;
    if (n <= exact_top) {
      rec.value = values[n];
      rec.method = BoundMethod::Exact;
    } else {
      const int k_hi = std::min(n, k_max);
      // tail[k] = sum_{l=k}^n w(l) v(n-l), accumulated from l = n downward.
      ExactRational tail = 0;
      std::optional<ExactRational> best;
      int best_k = 0;
      std::vector<ExactRational> tails(static_cast<std::size_t>(k_hi) + 1);
      for (int l = n; l >= 2; --l) {
        tail += weights[l] * values[n - l];
        if (l <= k_hi) tails[l] = tail;
      }
      for (int k = 2; k <= k_hi; ++k) {
        const ExactRational& s = s_tables[k - 2][n];
        ExactRational candidate = s * s + tails[k];
        if (!best || candidate < *best) {
          best = std::move(candidate);
          best_k = k;
        }
      }
      rec.value = *best;
      rec.method = BoundMethod::Recursive;
      rec.chosen_k = best_k;
      values[n] = rec.value;
      if (canonical) cache.put_bound(stat, rec);
    }
    ExactRational scaled = rec.value * n * n;
    if (n == 1 || scaled > report.max_scaled) {
      report.max_scaled = scaled;
      report.argmax_n = n;
    }
    if (scaled > report.constant && report.passed) {
      report.passed = false;
      report.first_failure = n;
      report.failure_best_k = rec.chosen_k;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

MonotonicityReport nsk_monotonicity_check(int k, int n_lo, int n_hi,
                                          StatsCache& cache) {
  require(k >= 2, "nsk_monotonicity_check: k must be >= 2");
  require(n_lo >= k - 1, "nsk_monotonicity_check: need n_lo >= k - 1");
  MonotonicityReport report{k, n_lo, n_hi, true, std::nullopt};
  if (n_hi < n_lo) return report;
  auto s = s_small_cycles_table(k, n_hi + 1, cache);
  for (int n = n_lo; n <= n_hi; ++n) {
    if (n * s[n] < (n + 1) * s[n + 1]) {
      report.holds = false;
      report.first_violation = n;
      break;
    }
  }
  return report;
}

SmallCyclesReport small_cycles_inequalities(int k, int n, StatsCache& cache) {
  require(k >= 2 && n >= 0, "small_cycles_inequalities: need k >= 2, n >= 0");
  SmallCyclesReport report;
  report.k = k;
  report.n = n;
  report.t = n / (k - 1);
  report.s = s_small_cycles(k, n, cache);
  report.factorial_bound =
      ExactRational(1, factorial(static_cast<unsigned long>(report.t)));
  report.factorial_bound.canonicalize();
  report.exp_bound_lo =
      report.t == 0 ? ExactRational(1)
                    : power(ExactRational(e_bounds().lo / report.t),
                            static_cast<unsigned long>(report.t));
  report.factorial_holds = report.s <= report.factorial_bound;
  report.exp_holds = report.s <= report.exp_bound_lo;
  return report;
}

PfracReport pfrac_inequality_check(int n, int k) {
  require(k > 0 && 2 * k < n, "pfrac_inequality_check: need 0 < k < n/2");
  PfracReport report;
  report.n = n;
  report.k = k;
  report.lhs = 0;
  for (int l = (n + 1) / 2; l <= n - k - 1; ++l) {
    BigInt d = BigInt(l) * (n - l);
    report.lhs += ExactRational(1, d * d);
  }
  report.lhs.canonicalize();
  const BigInt n3 = BigInt(n) * n * n;
  ExactRational log_lo = log_bounds(make_rational(n, k)).lo;
  report.rhs_lo =
      ExactRational(1, BigInt(n) * n * k) + 2 * log_lo / ExactRational(n3);
  report.rhs_lo.canonicalize();
  report.holds = report.lhs <= report.rhs_lo;
  return report;
}

namespace {

RationalInterval a_interval(Statistic stat, int n_cut, StatsCache& cache) {
  require(n_cut >= 1, "interval: n_cut must be >= 1");
  ExactRational lo = 0;
  for (int m = 0; m <= n_cut; ++m) lo += exact_value(stat, m, cache);
  ExactRational hi = lo + uniform_constant(stat, cache) / n_cut;
  return {lo, hi};
}

}  // namespace

RationalInterval a_kappa_interval(int n_cut, StatsCache& cache) {
  return a_interval(Statistic::Kappa, n_cut, cache);
}

RationalInterval a_rho_interval(int n_cut, StatsCache& cache) {
  return a_interval(Statistic::Rho, n_cut, cache);
}

ProofChainReport theorem_proof_constants(ProofChain which, StatsCache& cache) {
  ProofChainReport report;
  report.which = which;
  if (which == ProofChain::UniformKappa) {
    // k = 15, base n = 300, n s_15(n) <= 60 s_15(60).
    ExactRational ns = 60 * s_small_cycles(15, 60, cache);
    ExactRational partial = 0;
    for (int m = 0; m <= 15; ++m) partial += kappa_sn(m, cache);
    const ExactRational ratio = make_rational(300, 285);
    report.constant = kappa_constant(cache);
    const ExactRational log_hi = log_bounds(ExactRational(20)).hi;
    ExactRational bracket = make_rational(2, 15) + 4 * log_hi / 300 +
                            make_rational(300 * 300, 15 * 15 * 285 * 285);
    report.summands = {ns * ns, ratio * ratio * partial,
                       report.constant * bracket};
    report.reference = {"0.03639", "4.36294", "0.97718"};
    report.total = report.summands[0] + report.summands[1] + report.summands[2];
    report.closes = report.total < report.constant;
  } else {
    // k = 30, base n = 180, R(l) = 1 + 2/l + c/l^2 >= l r(l).
    ExactRational ns = 180 * s_small_cycles(30, 180, cache);
    ExactRational partial = 0;
    for (int m = 0; m <= 30; ++m) partial += rho_sn(m, cache);
    const ExactRational c_hi = regular_tail_constant().hi;
    auto big_r = [&](int l) -> ExactRational {
      return 1 + make_rational(2, l) + c_hi / (l * l);
    };
    const ExactRational ratio = make_rational(180, 150);
    report.constant = rho_constant(cache);
    const ExactRational log_hi = log_bounds(ExactRational(6)).hi;
    ExactRational bracket = make_rational(2, 30) + 4 * log_hi / 180 +
                            make_rational(180 * 180, 30 * 30 * 150 * 150);
    ExactRational r150 = big_r(150);
    ExactRational r30 = big_r(30);
    report.summands = {ns * ns, ratio * ratio * r150 * r150 * partial,
                       r30 * r30 * report.constant * bracket};
    report.reference = {"0.00001", "9.21704", "2.10126"};
    report.total = report.summands[0] + report.summands[1] + report.summands[2];
    report.closes = report.total <= report.constant;
  }
  for (auto& s : report.summands) s.canonicalize();
  return report;
}

}  // namespace conjprob
