#include "conjprob/suites.hpp"

#include "conjprob/catalog.hpp"
#include "conjprob/commuting_classes.hpp"
#include "conjprob/errors.hpp"
#include "conjprob/partitions.hpp"
#include "conjprob/permutation.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace conjprob {

Suite parse_suite(std::string_view name) {
  static const std::pair<std::string_view, Suite> names[] = {
      {"all", Suite::All},         {"lemma19", Suite::Lemma19},
      {"lemma21", Suite::Lemma21}, {"gaps", Suite::Gaps},
      {"frobenius", Suite::Frobenius}, {"oracles", Suite::Oracles},
      {"remarks", Suite::Remarks}, {"asymptotics", Suite::Asymptotics}};
  for (const auto& [n, s] : names)
    if (n == name) return s;
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Lemma19: return "lemma19";
    case Suite::Lemma21: return "lemma21";
    case Suite::Gaps: return "gaps";
    case Suite::Frobenius: return "frobenius";
    case Suite::Oracles: return "oracles";
    case Suite::Remarks: return "remarks";
    case Suite::Asymptotics: return "asymptotics";
  }
  return "all";
}

namespace {

ExactRational q(std::string_view text) { return parse_rational(text); }

ExactRational from_size(std::size_t v) { return ExactRational(BigInt(std::to_string(v))); }

std::string profile_string(const std::vector<std::size_t>& profile) {
  std::string out = "{";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(profile[i]);
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Collects entries, timing each claim and converting exceptions to failures.
class Runner {
 public:
  Runner(const SuiteOptions& options, StatsCache& cache)
      : options_(options), cache_(cache) {}

  const SuiteOptions& options() const { return options_; }
  StatsCache& cache() { return cache_; }
  unsigned digits() const { return options_.digits; }

  void progress(std::string_view what) const {
    if (options_.progress) options_.progress(what);
  }

  template <class F>
  void claim(const std::string& id, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    ReportEntry entry;
    try {
      entry = f();
    } catch (const std::exception& e) {
      entry = ReportEntry{};
      entry.status = Status::Fail;
      entry.detail = std::string("error: ") + e.what();
    }
    entry.claim = id;
    entry.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    entries_.push_back(std::move(entry));
  }

  ReportEntry compare(const ExactRational& lhs, std::string_view rel,
                      const ExactRational& rhs, std::string detail = {}) const {
    ReportEntry e = compare_entry({}, lhs, rel, rhs, options_.digits);
    e.detail = std::move(detail);
    return e;
  }

  // Sweep with a violation count as its exact value.
  ReportEntry violations(std::size_t count, std::string detail) const {
    return compare(from_size(count), "==", ExactRational(0), std::move(detail));
  }

  std::vector<ReportEntry> take() { return std::move(entries_); }

 private:
  const SuiteOptions& options_;
  StatsCache& cache_;
  std::vector<ReportEntry> entries_;
};

// min over n in [lo, hi] of n s_k(n) - (n+1) s_k(n+1).
ExactRational monotone_margin(int k, int lo, int hi, StatsCache& cache) {
  const auto s = s_small_cycles_table(k, hi + 1, cache);
  ExactRational best;
  for (int n = lo; n <= hi; ++n) {
    ExactRational d = n * s[static_cast<std::size_t>(n)] -
                      (n + 1) * s[static_cast<std::size_t>(n + 1)];
    if (n == lo || d < best) best = d;
  }
  return best;
}

ReportEntry chain_entry(const Runner& run, const UniformBoundReport& r) {
  std::string detail = "n <= " + std::to_string(r.n_max) + ", exact cutoff " +
                       std::to_string(r.exact_cutoff) + ", max at n = " +
                       std::to_string(r.argmax_n);
  if (r.first_failure)
    detail += "; first failure n = " + std::to_string(*r.first_failure) +
              " (best k = " + std::to_string(r.failure_best_k.value_or(0)) + ")";
  return run.compare(r.max_scaled, "<=", r.constant, detail);
}

// Smallest valid k for the lower branch no smaller than floor(3n/4).
int lower_k(int n) { return std::max(3 * n / 4, n / 2 + 1); }

void lemma19(Runner& run) {
  StatsCache& c = run.cache();
  const auto& o = run.options();
  run.progress("uniform kappa bound chain");
  run.claim("lemma19.i", [&] {
    return chain_entry(run, verify_uniform_bound(Statistic::Kappa, o.kappa_n_max,
                                                 o.kappa_cutoff, c));
  });
  run.claim("lemma19.ii", [&] {
    return run.compare(60 * s_small_cycles(15, 60, c), "==",
                       q("158929798034197186400893117108816122671/"
                         "833175235266670978029768442202788608000"),
                       "60 s_15(60)");
  });
  run.claim("lemma19.iii", [&] {
    auto r = nsk_monotonicity_check(15, 14, 60, c);
    ReportEntry e = run.compare(monotone_margin(15, 14, 60, c), ">=", ExactRational(0),
                                "min of n s_15(n) - (n+1) s_15(n+1), 14 <= n <= 60");
    if (!r.holds) e.status = Status::Fail;
    return e;
  });
  run.claim("lemma19.iv", [&] {
    ExactRational sum = 0;
    for (int m = 0; m <= 15; ++m) sum += kappa_sn(m, c);
    return run.compare(sum, "==",
                       q("4675865182689145531283/1187508508836249600000"),
                       "sum of kappa(S_m), 0 <= m <= 15");
  });
  run.claim("lemma19.v", [&] {
    return run.compare(kappa_constant(c), "==",
                       q("314540139254371141/57360633200640000"),
                       "13^2 kappa(S_13)");
  });
}

void lemma21(Runner& run) {
  StatsCache& c = run.cache();
  const auto& o = run.options();
  run.progress("exact rho(S_n)");
  run.claim("lemma21.v", [&] {
    return run.compare(rho_constant(c), "==", q("5805523/508032"), "10^2 rho(S_10)");
  });
  run.claim("lemma21.iv", [&] {
    ExactRational sum = 0;
    CommuteCache commute(30);
    for (int m = 0; m <= 30; ++m) {
      run.progress("rho(S_" + std::to_string(m) + ")");
      sum += rho_sn(m, c, commute);
    }
    return run.compare(sum, "<", q("6.11806"), "sum of rho(S_m), 0 <= m <= 30");
  });
  run.progress("uniform rho bound chain");
  run.claim("lemma21.i", [&] {
    return chain_entry(run, verify_uniform_bound(Statistic::Rho, o.rho_n_max,
                                                 o.rho_cutoff, c));
  });
  run.claim("lemma21.ii", [&] {
    return run.compare(180 * s_small_cycles(30, 180, c), "<", q("0.00247"),
                       "180 s_30(180)");
  });
  run.claim("lemma21.iii", [&] {
    auto r = nsk_monotonicity_check(30, 29, 180, c);
    ReportEntry e = run.compare(monotone_margin(30, 29, 180, c), ">=", ExactRational(0),
                                "min of n s_30(n) - (n+1) s_30(n+1), 29 <= n <= 180");
    if (!r.holds) e.status = Status::Fail;
    return e;
  });
}

void proof_chain(Runner& run, ProofChain which, const std::string& id) {
  StatsCache& c = run.cache();
  const bool kappa = which == ProofChain::UniformKappa;
  static const char* kappa_ref[] = {"0.03639", "4.36294", "0.97718"};
  static const char* rho_ref[] = {"0.00001", "9.21704", "2.10126"};
  ProofChainReport chain;
  run.claim(id, [&] {
    chain = theorem_proof_constants(which, c);
    return run.compare(chain.total, kappa ? "<" : "<=", chain.constant,
                       "total of the three summands");
  });
  const ExactRational unit = make_rational(1, 100000);
  for (int i = 0; i < 3; ++i) {
    run.claim(id + ".s" + std::to_string(i + 1), [&] {
      if (chain.summands.size() != 3) throw std::runtime_error("chain not computed");
      const ExactRational rounded =
          round_to_decimal(chain.summands[static_cast<std::size_t>(i)], 5, Rounding::HalfUp);
      const char* ref = (kappa ? kappa_ref : rho_ref)[i];
      return run.compare(rounded, "<=", q(ref) + unit,
                         std::string("summand rounded to 5 places vs ") + ref +
                             " + 0.00001; exact " +
                             to_fraction_string(chain.summands[static_cast<std::size_t>(i)]));
    });
  }
}

void asymptotics(Runner& run) {
  StatsCache& c = run.cache();
  const auto& o = run.options();
  run.claim("thm4.max13", [&] {
    StatsCache local;
    auto r = verify_uniform_bound(Statistic::Kappa, 13, 13, local);
    return run.compare(r.max_scaled, "==", kappa_constant(local),
                       "max of n^2 kappa(S_n), n <= 13, attained at n = " +
                           std::to_string(r.argmax_n));
  });
  run.progress("proof-constant chains");
  proof_chain(run, ProofChain::UniformKappa, "thm4.chain");
  proof_chain(run, ProofChain::UniformRho, "thm6.chain");

  RationalInterval ak, ar;
  run.claim("thm5.a_kappa.lo", [&] {
    ak = a_kappa_interval(o.kappa_cutoff, c);
    return run.compare(ak.lo, "<=", q("4.263403514152669"),
                       "partial sum to n = " + std::to_string(o.kappa_cutoff));
  });
  run.claim("thm5.a_kappa.hi", [&] {
    return run.compare(q("4.263403514152669"), "<=", ak.hi,
                       "partial sum plus C_kappa / n_cut");
  });
  run.claim("a_rho.lo", [&] {
    ar = a_rho_interval(std::min(o.rho_cutoff, 30), c);
    return run.compare(ar.lo, ">", q("6.1"), "partial sum of rho(S_n)");
  });
  run.claim("a_rho.hi", [&] {
    return run.compare(ar.hi, "<", q("6.5"), "partial sum plus C_rho / n_cut");
  });
  run.claim("cor.4265", [&] {
    return run.compare(ak.lo / ar.hi, ">=", make_rational(42, 65),
                       "lo(A_kappa) / hi(A_rho)");
  });

  run.progress("regular-permutation bounds");
  run.claim("lemma15", [&] {
    auto r = regular_bounds_check(o.regular_l_max);
    std::string detail = "1/l <= r(l) <= 1/l + 2/l^2 + c/l^3, l <= " +
                         std::to_string(o.regular_l_max);
    if (r.first_violation) detail += "; violated at l = " + std::to_string(*r.first_violation);
    return run.violations(r.holds ? 0 : 1, detail);
  });

  run.claim("prop13", [&] {
    std::size_t bad = 0;
    for (int k = 2; k <= 30; ++k)
      for (int n = 0; n <= 200; ++n) bad += !small_cycles_inequalities(k, n, c).factorial_holds;
    return run.violations(bad, "s_k(n) <= 1/t!, 2 <= k <= 30, n <= 200");
  });
  run.claim("cor13", [&] {
    std::size_t bad = 0;
    for (int k = 2; k <= 30; ++k)
      for (int n = 0; n <= 200; ++n) bad += !small_cycles_inequalities(k, n, c).exp_holds;
    return run.violations(bad, "s_k(n) <= (e/t)^t, 2 <= k <= 30, n <= 200");
  });
  run.claim("sk.decreasing", [&] {
    std::size_t bad = 0;
    for (int k = 2; k <= 30; ++k) {
      const auto s = s_small_cycles_table(k, 200, c);
      for (std::size_t n = 0; n + 1 < s.size(); ++n) bad += s[n + 1] > s[n];
    }
    return run.violations(bad, "s_k(n+1) <= s_k(n), 2 <= k <= 30, n < 200");
  });
  run.claim("lemma10", [&] {
    std::vector<std::pair<int, int>> cases{{100, 15}, {300, 39}, {31, 15}};
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<int> pick_n(5, 400);
    while (cases.size() < 23) {
      const int n = pick_n(rng);
      std::uniform_int_distribution<int> pick_k(1, (n - 1) / 2);
      cases.emplace_back(n, pick_k(rng));
    }
    std::size_t bad = 0;
    for (auto [n, k] : cases) bad += !pfrac_inequality_check(n, k).holds;
    return run.violations(bad, "three named and 20 sampled (n, k)");
  });

  run.claim("prop14.sandwich", [&] {
    std::size_t bad = 0;
    for (int n = 1; n <= 60; ++n) {
      const ExactRational exact = kappa_sn(n, c);
      bad += kappa_lower_bound(n, lower_k(n), c) > exact;
      for (int k = 2; k <= n; ++k) bad += kappa_upper_bound(n, k, c) < exact;
    }
    return run.violations(bad, "lower <= kappa(S_n) <= upper for every valid k, n <= 60");
  });
  run.claim("prop18.sandwich", [&] {
    std::size_t bad = 0;
    for (int n = 1; n <= 25; ++n) {
      const ExactRational exact = rho_sn(n, c);
      bad += rho_lower_bound(n, lower_k(n), c) > exact;
      for (int k = 2; k <= n; ++k) bad += rho_upper_bound(n, k, c) < exact;
    }
    return run.violations(bad, "lower <= rho(S_n) <= upper for every valid k, n <= 25");
  });
  run.claim("thm5.finite", [&] {
    std::size_t bad = 0;
    for (int n = 1; n <= 60; ++n) {
      const int k = lower_k(n);
      ExactRational partial = 0;
      for (int m = 0; m <= n - k; ++m) partial += kappa_sn(m, c);
      bad += n * n * kappa_lower_bound(n, k, c) < partial;
    }
    return run.violations(bad, "n^2 lower(n, 3n/4) >= partial sums, n <= 60");
  });
}

void gaps(Runner& run) {
  for (const auto& name : standard_catalog()) {
    const FiniteGroup g = catalog_group(name);
    run.claim("thm1." + name, [&] {
      const auto r = verify_lower_gap(g);
      const ExactRational inv_order = make_rational(BigInt(1), BigInt(std::to_string(g.order())));
      if (r.abelian) return run.compare(r.kappa, "==", inv_order, "abelian: kappa = 1/|G|");
      ReportEntry e = run.compare(r.kappa, r.center_index == 4 ? "==" : ">", r.bound,
                                  "kappa vs 7/(4|G|), |G:Z| = " + std::to_string(r.center_index));
      if (!r.passed) e.status = Status::Fail;
      return e;
    });
    run.claim("thm3." + name, [&] {
      const auto r = verify_upper_gap(g);
      const bool listed = g.order() <= 4 || r.family_listed;
      ReportEntry e = run.compare(r.kappa, listed ? ">=" : "<", make_rational(1, 4),
                                  "family " + to_string(r.family) + ", profile " +
                                      profile_string(r.profile) + ", case " +
                                      std::to_string(r.centralizer_case));
      if (!r.passed) e.status = Status::Fail;
      return e;
    });
    const auto upper = verify_upper_gap(g);
    if (upper.at_least_quarter && g.order() > 4)
      run.claim("prop8." + name, [&] {
        return run.compare(ExactRational(upper.centralizer_case), ">=", ExactRational(1),
                           "centralizer profile " + profile_string(upper.profile) +
                               " matches case " + std::to_string(upper.centralizer_case));
      });
    if (g.family() == GroupFamily::GeneralizedDihedral)
      run.claim("prop11." + name, [&] {
        const auto order = static_cast<std::int64_t>(g.order());
        return run.compare(kappa_g(g), "==",
                           make_rational(1, 4) + make_rational(1, order) -
                               make_rational(1, order * order),
                           "kappa = 1/4 + 1/|G| - 1/|G|^2");
      });
  }
  for (const auto& [a, b] : isoclinic_pairs())
    run.claim("thm2." + a + "~" + b, [&] {
      const auto r = verify_isoclinism_invariant(a, b);
      return run.compare(r.scaled_left, "==", r.scaled_right, "kappa(G)|G| = kappa(H)|H|");
    });
  run.claim("psl27.kappa", [&] {
    const FiniteGroup g = catalog_group("psl27");
    const auto table = conjugacy_table(g);
    const auto profile = centralizer_profile(table);
    const std::vector<std::size_t> expected{3, 4, 7, 7, 8, 168};
    ReportEntry e = run.compare(kappa_g(g, table), "==", q("3247/14112"),
                                "profile " + profile_string(profile));
    if (profile != expected) e.status = Status::Fail;
    return e;
  });
}

std::vector<int> elements_of(const FiniteGroup& g, const std::vector<std::string>& cycles) {
  std::vector<int> gens;
  for (const auto& text : cycles) {
    auto e = g.find(parse_cycles(text, g.degree()));
    if (!e) throw PreconditionError("element " + text + " not in group");
    gens.push_back(*e);
  }
  return generated_subgroup(g, gens);
}

void frobenius(Runner& run) {
  for (const char* name : {"s3", "c7:c3", "c5:c4"})
    run.claim(std::string("lemma6.") + name, [&] {
      const FiniteGroup g = catalog_group(name);
      const auto parts = natural_frobenius_parts(g);
      const auto r = verify_frobenius_formula(g, parts.kernel, parts.complement);
      return run.compare(r.kappa, "==", r.formula,
                         "|K| = " + std::to_string(parts.kernel.size()) +
                             ", |H| = " + std::to_string(parts.complement.size()));
    });
  struct Family { int p, m, q; };
  for (auto f : {Family{7, 1, 3}, Family{7, 2, 3}, Family{5, 1, 4}, Family{5, 2, 4},
                 Family{3, 1, 2}, Family{3, 2, 2}, Family{3, 3, 2}, Family{3, 4, 2}})
    run.claim("frobenius_limit.c" + std::to_string(f.p) + "^" + std::to_string(f.m) +
                  ":c" + std::to_string(f.q),
              [&] {
                const auto r = frobenius_limit_point_check(f.p, f.m, f.q);
                return run.compare(r.kappa, "==", r.formula, "kappa(K^m : H) closed form");
              });
  struct Case { const char* group; const char* label; std::vector<std::string> normal; };
  const std::vector<Case> cases{
      {"s4", "v4", {"(1 2)(3 4)", "(1 3)(2 4)"}},
      {"a4", "v4", {"(1 2)(3 4)", "(1 3)(2 4)"}},
      {"s4", "a4", {"(1 2 3)", "(1 2 4)"}},
      {"s3", "c3", {"(1 2 3)"}},
      {"q8", "z", {}},
      {"d8", "z", {}},
      {"d8xc3", "c3", {"(5 6 7)"}},
      {"c7:c3", "c7", {"(1 2 3 4 5 6 7)"}},
  };
  for (const auto& cs : cases)
    run.claim(std::string("lemma5.") + cs.group + "/" + cs.label, [&] {
      const FiniteGroup g = catalog_group(cs.group);
      const auto normal = cs.normal.empty() ? g.center() : elements_of(g, cs.normal);
      const auto r = verify_quotient_monotone(g, normal);
      return run.compare(r.kappa, "<", r.kappa_quotient,
                         "kappa(G) < kappa(G/N), |G/N| = " + std::to_string(r.quotient_order));
    });
}

void oracles(Runner& run) {
  StatsCache& c = run.cache();
  run.progress("commute matrices against brute force");
  for (int n = 1; n <= 7; ++n)
    run.claim("oracle.commute.n" + std::to_string(n), [&] {
      CommuteCache cache(n);
      const auto fast = commute_matrix(n, cache);
      const auto slow = brute_force_commute_matrix(n);
      std::size_t bad = 0;
      for (std::size_t i = 0; i < fast.size(); ++i)
        for (std::size_t j = 0; j < fast.size(); ++j) bad += fast[i][j] != slow[i][j];
      return run.violations(bad, std::to_string(fast.size()) + " classes, all ordered pairs");
    });
  run.claim("lemma17.symmetry_padding", [&] {
    std::size_t bad = 0;
    for (int n = 1; n <= 7; ++n) {
      const auto parts = all_partitions(n);
      for (const auto& a : parts)
        for (const auto& b : parts) {
          const bool ab = classes_commute(a, b);
          bad += ab != classes_commute(b, a);
          if (a == b) bad += !ab;
          if (!ab) continue;
          for (int pad = 1; n + pad <= 7; ++pad)
            for (const auto& nu : all_partitions(pad)) {
              auto extend = [&](const CycleType& t) {
                std::vector<int> v(t.parts().begin(), t.parts().end());
                v.insert(v.end(), nu.parts().begin(), nu.parts().end());
                return CycleType(v);
              };
              bad += !classes_commute(extend(a), extend(b));
            }
        }
    }
    return run.violations(bad, "symmetry, reflexivity and padding, n <= 7");
  });
  for (int n = 1; n <= 7; ++n) {
    const std::string sn = "s" + std::to_string(n);
    run.claim("oracle.kappa_g." + sn, [&] {
      return run.compare(kappa_g(catalog_group(sn)), "==", kappa_sn(n, c), "kappa_g(S_n) vs kappa_sn");
    });
    run.claim("oracle.rho_g." + sn, [&] {
      return run.compare(rho_g(catalog_group(sn)), "==", rho_sn(n, c), "rho_g(S_n) vs rho_sn");
    });
  }
  run.claim("oracle.kappa_enumerated", [&] {
    std::size_t bad = 0;
    for (int n = 0; n <= 40; ++n) bad += kappa_sn_enumerated(n) != kappa_sn(n, c);
    return run.violations(bad, "grouped sum vs partition enumeration, n <= 40");
  });
  run.claim("oracle.class_equation", [&] {
    std::size_t bad = 0;
    for (int n = 0; n <= 40; ++n) {
      ExactRational sum = 0;
      PartitionStream stream(n);
      while (stream.next())
        sum += make_rational(BigInt(1), centralizer_order(stream.parts()));
      bad += sum != 1;
    }
    return run.violations(bad, "sum of 1/z(lambda) = 1, n <= 40");
  });
  run.claim("oracle.partition_count", [&] {
    std::size_t bad = 0;
    for (int n = 0; n <= 60; ++n) {
      std::uint64_t count = 0;
      PartitionStream stream(n);
      while (stream.next()) ++count;
      bad += BigInt(std::to_string(count)) != count_partitions(n);
    }
    return run.violations(bad, "enumeration count = p(n), n <= 60");
  });
  run.claim("oracle.centralizer", [&] {
    std::size_t bad = 0;
    for (int n = 1; n <= 7; ++n)
      for (const auto& t : all_partitions(n)) {
        const Perm sigma = perm_of_type(t);
        std::uint64_t count = 0;
        for_each_permutation(n, [&](const Perm& p) { count += commute(sigma, p); });
        bad += BigInt(std::to_string(count)) != centralizer_order(t);
      }
    return run.violations(bad, "z(lambda) vs centralizer count in S_n, n <= 7");
  });
  run.claim("oracle.small_cycles", [&] {
    std::size_t bad = 0;
    for (int k = 2; k <= 10; ++k)
      for (int n = 0; n <= 40; ++n) bad += s_small_cycles(k, n, c) != s_small_cycles_oracle(k, n);
    return run.violations(bad, "recurrence vs partition sum, 2 <= k <= 10, n <= 40");
  });
  run.claim("oracle.r_regular", [&] {
    std::size_t bad = 0;
    for (int l = 1; l <= 8; ++l) {
      std::uint64_t count = 0;
      for_each_permutation(l, [&](const Perm& p) { count += is_regular(p); });
      bad += r_regular(l, c) * factorial(static_cast<unsigned long>(l)) !=
             ExactRational(BigInt(std::to_string(count)));
    }
    return run.violations(bad, "l! r(l) vs regular count, l <= 8");
  });
  for (int n = 1; n <= 7; ++n)
    run.claim("lemma4.n" + std::to_string(n), [&] {
      return run.violations(cycle_statistics_check(n).holds ? 0 : 1,
                            "cycle statistics by exhaustive count");
    });
  for (int n = 1; n <= 7; ++n)
    run.claim("prop16.n" + std::to_string(n), [&] {
      std::size_t bad = 0;
      for (int l = 1; l <= n; ++l) bad += !regular_subset_probability_check(n, l).holds;
      return run.violations(bad, "regular on a fixed l-set, 1 <= l <= n");
    });
  for (const auto& name : standard_catalog()) {
    run.claim("oracle.cp." + name, [&] {
      const FiniteGroup g = catalog_group(name);
      if (g.order() > 500) {
        ReportEntry e = info_entry({}, cp_g(g), "order above 500, count skipped", run.digits());
        return e;
      }
      return run.compare(cp_g(g), "==", cp_g_counted(g), "k(G)/|G| vs counted pairs");
    });
  }
}

void remarks(Runner& run) {
  for (const auto& name : standard_catalog()) {
    const FiniteGroup g = catalog_group(name);
    RemarksReport r;
    run.claim("remarks." + name, [&] {
      r = remarks_suite(g);
      ReportEntry e = run.compare(r.rho, ">=", r.kappa,
                                  "abelian " + yes_no(r.abelian) + ", 2-Engel " +
                                      yes_no(r.two_engel) + ", rho = cp " +
                                      yes_no(r.rho == r.cp) + ", rho = kappa " +
                                      yes_no(r.rho_equals_kappa));
      if (!r.passed) e.status = Status::Fail;
      return e;
    });
    run.claim("remarks.integrality." + name, [&] {
      return info_entry({}, r.scaled_rho,
                        std::string("|G| rho(G) integer: ") + yes_no(r.scaled_rho_integer),
                        run.digits());
    });
  }
  for (const char* name : {"d8xc3", "d8xc5", "q8xc3", "q8xc5", "s3xs3", "s3xc2", "a4xc2",
                           "d8xc2", "s4xs3", "a5xc3"})
    run.claim(std::string("remarks.product.") + name, [&] {
      ExactRational product = 1;
      for (const auto& f : product_factors(name)) product *= kappa_g(catalog_group(f));
      return run.compare(kappa_g(catalog_group(name)), "==", product,
                         "kappa(G x H) = kappa(G) kappa(H)");
    });
}

}  // namespace

std::vector<ReportEntry> run_suite(Suite suite, const SuiteOptions& options,
                                   StatsCache& cache) {
  Runner run(options, cache);
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Lemma19) lemma19(run);
  if (all || suite == Suite::Lemma21) lemma21(run);
  if (all || suite == Suite::Asymptotics) asymptotics(run);
  if (all || suite == Suite::Gaps) gaps(run);
  if (all || suite == Suite::Frobenius) frobenius(run);
  if (all || suite == Suite::Oracles) oracles(run);
  if (all || suite == Suite::Remarks) remarks(run);
  return run.take();
}

Table sn_table(Statistic stat, int n_max, unsigned digits, bool cumulative,
               StatsCache& cache) {
  const std::string name = to_string(stat);
  Table t;
  t.name = name + "_sn";
  t.columns = {"n", name, name + "_decimal", "n2_" + name};
  if (cumulative) t.columns.insert(t.columns.end(), {"cumulative", "cumulative_decimal"});
  ExactRational running = 1;  // the m = 0 term
  CommuteCache commute(std::max(1, std::min(n_max, kMaxCommuteWeight)));
  for (int n = 1; n <= n_max; ++n) {
    const ExactRational v = stat == Statistic::Kappa ? kappa_sn(n, cache)
                                                     : rho_sn(n, cache, commute);
    running += v;
    std::vector<std::string> row{std::to_string(n), to_fraction_string(v),
                                 to_decimal(v, digits, Rounding::HalfUp),
                                 to_fraction_string(n * n * v)};
    if (cumulative) {
      row.push_back(to_fraction_string(running));
      row.push_back(to_decimal(running, digits, Rounding::HalfUp));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table group_table(const FiniteGroup& g, unsigned digits, bool invariants) {
  Table t;
  t.name = "group";
  t.columns = {"property", "value", "decimal"};
  const auto table = conjugacy_table(g);
  auto add = [&](std::string key, std::string value, std::string decimal = {}) {
    t.rows.push_back({std::move(key), std::move(value), std::move(decimal)});
  };
  auto add_q = [&](std::string key, const ExactRational& v) {
    add(std::move(key), to_fraction_string(v), to_decimal(v, digits, Rounding::HalfUp));
  };
  if (!g.name().empty()) add("name", g.name());
  add("order", std::to_string(g.order()));
  add("class_count", std::to_string(table.class_count));
  add("centralizer_profile", profile_string(centralizer_profile(table)));
  add_q("kappa", kappa_g(g, table));
  add_q("rho", rho_g(g, table));
  add_q("cp", cp_g(g, table));
  if (invariants) {
    std::vector<std::size_t> sizes = table.class_sizes;
    add("class_sizes", profile_string(sizes));
    add("center_order", std::to_string(g.center().size()));
    add("abelian", yes_no(g.is_abelian()));
    add("two_engel", yes_no(is_two_engel(g)));
    add("family", to_string(g.family()));
    const auto lower = verify_lower_gap(g);
    add_q("lower_gap_bound", lower.bound);
    add("lower_gap", lower.passed ? "pass" : "fail");
    const auto upper = verify_upper_gap(g);
    add("upper_gap_case", std::to_string(upper.centralizer_case));
    add("upper_gap", upper.passed ? "pass" : "fail");
    add_q("order_times_rho", rho_g(g, table) * from_size(g.order()));
  }
  return t;
}

}  // namespace conjprob
