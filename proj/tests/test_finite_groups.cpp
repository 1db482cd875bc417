#include <doctest.h>

#include "conjprob/catalog.hpp"
#include "conjprob/commuting_classes.hpp"
#include "conjprob/errors.hpp"
#include "conjprob/finite_groups.hpp"
#include "conjprob/sym_probabilities.hpp"

#include <algorithm>
#include <set>

using namespace conjprob;

namespace {

std::vector<int> subgroup_from(const FiniteGroup& g,
                               std::initializer_list<const char*> cycles) {
  std::vector<int> gens;
  for (const char* c : cycles) gens.push_back(*g.find(parse_cycles(c, g.degree())));
  return generated_subgroup(g, gens);
}

// Conjugacy class of x by conjugating with every element.
std::set<int> class_of(const FiniteGroup& g, int x) {
  std::set<int> cls;
  for (int h = 0; h < static_cast<int>(g.order()); ++h) cls.insert(g.conjugate(x, h));
  return cls;
}

ExactRational kappa_by_pairs(const FiniteGroup& g) {
  long hits = 0;
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    hits += static_cast<long>(class_of(g, x).size());
  long n = static_cast<long>(g.order());
  return make_rational(hits, n * n);
}

// Ordered pairs (x, y) for which some conjugate of y commutes with x.
ExactRational rho_by_pairs(const FiniteGroup& g) {
  int n = static_cast<int>(g.order());
  long hits = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int h : class_of(g, y))
        if (g.mul(x, h) == g.mul(h, x)) {
          ++hits;
          break;
        }
  return make_rational(hits, static_cast<long>(n) * n);
}

int g_pow(const FiniteGroup& g, int k) {
  int x = 0;
  for (int i = 0; i < k; ++i) x = g.mul(x, g.generators()[0]);
  return x;
}

}  // namespace

TEST_CASE("closure orders") {
  CHECK(FiniteGroup::from_generators(3, {parse_cycles("(1 2 3)", 3),
                                         parse_cycles("(1 2)", 3)})
            .order() == 6);
  CHECK(FiniteGroup::from_generators(5, {parse_cycles("(1 2 3 4 5)", 5),
                                         parse_cycles("(2 3 5 4)", 5)})
            .order() == 20);
  CHECK(catalog_group("psl27").order() == 168);
  CHECK(catalog_group("psl27").degree() == 8);
  CHECK(catalog_group("s6").order() == 720);
  CHECK(catalog_group("a5").order() == 60);
  CHECK(catalog_group("dih(c3xc3)").order() == 18);
  CHECK(catalog_group("c5^2:c4").order() == 100);
  CHECK_THROWS_AS(FiniteGroup::from_generators(3, {{0, 0, 1}}), PreconditionError);
  CHECK_THROWS_AS(FiniteGroup::from_generators(8, {parse_cycles("(1 2 3 4 5 6 7 8)", 8),
                                                   parse_cycles("(1 2)", 8)},
                                               1000),
                  ResourceLimitError);
}

TEST_CASE("group axioms on table groups") {
  for (const char* name : {"s4", "q8", "d8xc3", "c7:c3"}) {
    FiniteGroup g = catalog_group(name);
    int n = static_cast<int>(g.order());
    for (int a = 0; a < n; ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
      for (int b = 0; b < n; b += 3)
        for (int c = 0; c < n; c += 5)
          CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("Cayley table validation") {
  std::vector<std::vector<int>> c3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK(FiniteGroup::from_cayley_table(c3).order() == 3);
  // Latin square with identity but not associative (order-5 loop).
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(loop), PreconditionError);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1, 1}}), PreconditionError);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}), PreconditionError);
}

TEST_CASE("conjugacy tables") {
  FiniteGroup c6 = catalog_group("c6");
  auto t = conjugacy_table(c6);
  CHECK(t.class_count == 6);
  for (auto s : t.class_sizes) CHECK(s == 1);

  auto p = conjugacy_table(catalog_group("psl27"));
  CHECK(centralizer_profile(p) == std::vector<std::size_t>{3, 4, 7, 7, 8, 168});

  FiniteGroup s4 = catalog_group("s4");
  auto q = conjugacy_table(s4);
  std::multiset<std::size_t> sizes(q.class_sizes.begin(), q.class_sizes.end());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});

  for (const std::string& name : standard_catalog()) {
    FiniteGroup g = catalog_group(name);
    auto tab = conjugacy_table(g);
    CAPTURE(name);
    CHECK(tab.class_sizes[0] == 1);
    CHECK(tab.reps[0] == 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < tab.class_count; ++i) {
      total += tab.class_sizes[i];
      CHECK(tab.class_sizes[i] * tab.centralizer_orders[i] == g.order());
      for (int gen : g.generators())
        CHECK(tab.class_of[static_cast<std::size_t>(g.conjugate(tab.reps[i], gen))] ==
              static_cast<int>(i));
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("kappa, rho and cp against pair counts") {
  for (const char* name : {"s3", "d8", "q8", "a4", "d10", "c7:c3", "c5:c4",
                           "dih(c5)", "s4", "c3^2:c2"}) {
    FiniteGroup g = catalog_group(name);
    CAPTURE(name);
    CHECK(kappa_g(g) == kappa_by_pairs(g));
    CHECK(rho_g(g) == rho_by_pairs(g));
    CHECK(cp_g(g) == cp_g_counted(g));
  }
}

TEST_CASE("symmetric groups agree with the partition formulas, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    FiniteGroup g = catalog_group("s" + std::to_string(n));
    CAPTURE(n);
    CHECK(kappa_g(g) == kappa_sn(n));
    CHECK(rho_g(g) == rho_sn(n));
  }
}

TEST_CASE("named values") {
  CHECK(kappa_g(catalog_group("psl27")) == make_rational(3247, 14112));
  CHECK(kappa_g(catalog_group("d8")) == make_rational(7, 32));
  CHECK(kappa_g(catalog_group("q8")) == make_rational(7, 32));
  CHECK(kappa_g(catalog_group("a4")) == make_rational(7, 24));
  CHECK(kappa_g(catalog_group("a5")) == make_rational(457, 1800));
  CHECK(kappa_g(catalog_group("s4")) == make_rational(73, 288));
  CHECK(kappa_g(catalog_group("c7:c3")) == make_rational(13, 49));
  CHECK(rho_g(catalog_group("s3")) == make_rational(2, 3));
  CHECK(rho_g(catalog_group("c9")) == 1);
  // Q8 is 2-Engel, so rho equals cp = 5/8 (not kappa = 7/32).
  CHECK(rho_g(catalog_group("q8")) == make_rational(5, 8));
  CHECK(cp_g(catalog_group("d8")) == make_rational(5, 8));
  CHECK(cp_g(catalog_group("s3")) == make_rational(1, 2));
  CHECK(cp_g(catalog_group("c10")) == 1);
  for (int n : {1, 2, 5, 12}) {
    FiniteGroup c = catalog_group("c" + std::to_string(n));
    CHECK(kappa_g(c) == make_rational(1, n));
  }
}

TEST_CASE("kappa >= 1/k(G), equality iff abelian") {
  for (const std::string& name : standard_catalog()) {
    FiniteGroup g = catalog_group(name);
    auto t = conjugacy_table(g);
    ExactRational inv_k = make_rational(1, static_cast<std::int64_t>(t.class_count));
    CAPTURE(name);
    CHECK(kappa_g(g, t) >= inv_k);
    CHECK((kappa_g(g, t) == inv_k) == g.is_abelian());
  }
}

TEST_CASE("subgroups and quotients") {
  FiniteGroup s4 = catalog_group("s4");
  auto v4 = subgroup_from(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(v4.size() == 4);
  CHECK(is_normal_subgroup(s4, v4));
  FiniteGroup s3 = quotient_group(s4, v4);
  CHECK(s3.order() == 6);
  auto t = conjugacy_table(s3);
  std::multiset<std::size_t> sizes(t.class_sizes.begin(), t.class_sizes.end());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  std::vector<int> trivial{0};
  FiniteGroup copy = quotient_group(s4, trivial);
  CHECK(copy.order() == 24);
  CHECK(kappa_g(copy) == kappa_g(s4));

  FiniteGroup q8 = catalog_group("q8");
  auto z = q8.center();
  CHECK(z.size() == 2);
  FiniteGroup q = quotient_group(q8, z);
  CHECK(q.order() == 4);
  CHECK(q.is_abelian());

  auto h = subgroup_from(s4, {"(1 2)"});
  CHECK(is_subgroup(s4, h));
  CHECK_FALSE(is_normal_subgroup(s4, h));
  CHECK_THROWS_AS(quotient_group(s4, h), PreconditionError);
  std::vector<int> not_sub{0, 1};
  if (!is_subgroup(s4, not_sub)) CHECK_THROWS_AS(quotient_group(s4, not_sub), PreconditionError);

  FiniteGroup sub = subgroup_group(s4, v4);
  CHECK(sub.order() == 4);
  CHECK(sub.is_abelian());
}

TEST_CASE("direct products multiply kappa") {
  FiniteGroup d8 = catalog_group("d8");
  FiniteGroup c3 = catalog_group("c3");
  FiniteGroup p = direct_product(d8, c3);
  CHECK(p.order() == 24);
  CHECK(kappa_g(p) == kappa_g(d8) * kappa_g(c3));
  FiniteGroup t = direct_product(FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}), d8);
  CHECK(t.order() == 16);
  CHECK(kappa_g(t) == kappa_g(d8) / 2);
}

TEST_CASE("center index and 2-Engel") {
  CHECK(center_index(catalog_group("d8")) == 4);
  CHECK(center_index(catalog_group("q8xc5")) == 4);
  CHECK(center_index(catalog_group("s3")) == 6);
  CHECK(is_two_engel(catalog_group("q8")));
  CHECK(is_two_engel(catalog_group("c6")));
  CHECK_FALSE(is_two_engel(catalog_group("s3")));
}

TEST_CASE("lower gap") {
  auto d8 = verify_lower_gap(catalog_group("d8"));
  CHECK(d8.passed);
  CHECK(d8.equality);
  CHECK(d8.center_index == 4);
  auto s3 = verify_lower_gap(catalog_group("s3"));
  CHECK(s3.passed);
  CHECK_FALSE(s3.equality);
  CHECK(s3.kappa == make_rational(7, 18));
  CHECK(s3.bound == make_rational(7, 24));
  auto d8c5 = verify_lower_gap(catalog_group("d8xc5"));
  CHECK(d8c5.equality);
  CHECK(d8c5.passed);
  auto c4 = verify_lower_gap(catalog_group("c4"));
  CHECK(c4.abelian);
  CHECK(c4.passed);
}

TEST_CASE("upper gap") {
  auto a4 = verify_upper_gap(catalog_group("a4"));
  CHECK(a4.passed);
  CHECK(a4.at_least_quarter);
  CHECK(a4.centralizer_case == 2);
  auto a5 = verify_upper_gap(catalog_group("a5"));
  CHECK(a5.passed);
  CHECK(a5.kappa == make_rational(457, 1800));
  auto dih9 = verify_upper_gap(catalog_group("dih(c9)"));
  CHECK(dih9.passed);
  REQUIRE(dih9.dihedral_formula.has_value());
  CHECK(*dih9.dihedral_formula);
  CHECK(dih9.kappa == make_rational(1, 4) + make_rational(1, 18) - make_rational(1, 324));
  auto s4 = verify_upper_gap(catalog_group("s4"));
  CHECK(s4.passed);
  auto d8 = verify_upper_gap(catalog_group("d8"));
  CHECK(d8.passed);
  CHECK_FALSE(d8.at_least_quarter);
  for (int a : {3, 5, 7, 9, 15}) {
    auto r = verify_upper_gap(catalog_group("dih(c" + std::to_string(a) + ")"));
    CHECK(r.passed);
    CHECK(r.dihedral_formula.value_or(false));
  }
}

TEST_CASE("Frobenius formula") {
  for (const char* name : {"s3", "c7:c3", "c5:c4", "a4", "c3^2:c2"}) {
    FiniteGroup g = catalog_group(name);
    auto parts = natural_frobenius_parts(g);
    auto r = verify_frobenius_formula(g, parts.kernel, parts.complement);
    CAPTURE(name);
    CHECK(r.passed);
    CHECK(r.kappa == r.formula);
  }
  FiniteGroup s3 = catalog_group("s3");
  auto parts = natural_frobenius_parts(s3);
  CHECK(verify_frobenius_formula(s3, parts.kernel, parts.complement).kappa ==
        make_rational(7, 18));
  FiniteGroup f21 = catalog_group("c7:c3");
  auto p21 = natural_frobenius_parts(f21);
  CHECK(verify_frobenius_formula(f21, p21.kernel, p21.complement).kappa ==
        make_rational(13, 49));
  // A complement that commutes with the kernel is rejected.
  FiniteGroup c6 = catalog_group("c6");
  std::vector<int> k3 = generated_subgroup(c6, std::vector<int>{g_pow(c6, 2)});
  std::vector<int> h2 = generated_subgroup(c6, std::vector<int>{g_pow(c6, 3)});
  CHECK_THROWS_AS(verify_frobenius_formula(c6, k3, h2), PreconditionError);
}

TEST_CASE("quotient monotonicity") {
  FiniteGroup s4 = catalog_group("s4");
  auto v4 = subgroup_from(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto a = verify_quotient_monotone(s4, v4);
  CHECK(a.passed);
  CHECK(a.kappa == make_rational(73, 288));
  CHECK(a.kappa_quotient == make_rational(7, 18));

  FiniteGroup q8 = catalog_group("q8");
  auto b = verify_quotient_monotone(q8, q8.center());
  CHECK(b.passed);
  CHECK(b.kappa_quotient == make_rational(1, 4));

  FiniteGroup a4 = catalog_group("a4");
  auto v = subgroup_from(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto c = verify_quotient_monotone(a4, v);
  CHECK(c.passed);
  CHECK(c.kappa_quotient == make_rational(1, 3));
}

TEST_CASE("isoclinism invariant on listed pairs") {
  for (auto [l, r] : isoclinic_pairs()) {
    auto rep = verify_isoclinism_invariant(l, r);
    CAPTURE(l);
    CHECK(rep.passed);
    CHECK(rep.scaled_left == make_rational(7, 4));
    CHECK(rep.scaled_right == make_rational(7, 4));
  }
  CHECK(verify_isoclinism_invariant("s3", "s3").passed);
  CHECK_THROWS_AS(verify_isoclinism_invariant("s3", "c6"), PreconditionError);
}

TEST_CASE("remarks") {
  auto q8 = remarks_suite(catalog_group("q8"));
  CHECK(q8.passed);
  CHECK(q8.two_engel);
  CHECK(q8.rho == q8.cp);
  auto s3 = remarks_suite(catalog_group("s3"));
  CHECK(s3.passed);
  CHECK_FALSE(s3.two_engel);
  CHECK(s3.rho == make_rational(2, 3));
  CHECK(s3.rho > s3.kappa);
  CHECK(s3.scaled_rho == 4);
  CHECK(s3.scaled_rho_integer);
  auto d7 = remarks_suite(catalog_group("dih(c7)"));
  CHECK(d7.passed);
  CHECK(d7.rho > d7.kappa);
  CHECK(d7.kappa == make_rational(1, 4) + make_rational(1, 14) - make_rational(1, 196));
  for (const std::string& name : standard_catalog()) {
    FiniteGroup g = catalog_group(name);
    CAPTURE(name);
    CHECK(remarks_suite(g).passed);
    CHECK(rho_g(g) >= kappa_g(g));
  }
  std::vector<FiniteGroup> factors{catalog_group("s3"), catalog_group("c2")};
  auto prod = remarks_suite(catalog_group("s3xc2"), factors);
  REQUIRE(prod.product_multiplicative.has_value());
  CHECK(*prod.product_multiplicative);
}

TEST_CASE("Frobenius limit-point identity") {
  for (auto [p, m, q] : {std::tuple{3, 1, 2}, std::tuple{3, 2, 2}, std::tuple{5, 1, 4},
                         std::tuple{5, 2, 2}, std::tuple{7, 1, 3}, std::tuple{7, 2, 3}}) {
    auto r = frobenius_limit_point_check(p, m, q);
    CHECK(r.passed);
    CHECK(r.kappa == r.formula);
  }
}

TEST_CASE("catalog names") {
  CHECK(catalog_group("D8").order() == 8);
  CHECK(catalog_group(" c 5 ").order() == 5);
  CHECK(catalog_group("d2").order() == 2);
  CHECK(catalog_group("d4").is_abelian());
  CHECK(catalog_group("s3xs3").order() == 36);
  CHECK(product_factors("d8xc3") == std::vector<std::string>{"d8", "c3"});
  CHECK(product_factors("dih(c3xc3)") == std::vector<std::string>{"dih(c3xc3)"});
  CHECK(catalog_group("dih(c3xc3)").family() == GroupFamily::GeneralizedDihedral);
  CHECK(catalog_group("a4").family() == GroupFamily::A4);
  CHECK(catalog_group("c12").family() == GroupFamily::Abelian);
  for (const char* bad : {"x5", "s9", "dih(c4)", "c0", "c7:c4", "", "d7"})
    CHECK_THROWS_AS(catalog_group(bad), PreconditionError);
  CHECK(standard_catalog().size() >= 30);
}
