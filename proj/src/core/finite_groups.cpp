#include "conjprob/finite_groups.hpp"

#include "conjprob/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace conjprob {

std::string to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::Other: return "other";
    case GroupFamily::Abelian: return "abelian";
    case GroupFamily::GeneralizedDihedral: return "generalized-dihedral";
    case GroupFamily::A4: return "A4";
    case GroupFamily::S4: return "S4";
    case GroupFamily::A5: return "A5";
    case GroupFamily::FrobeniusC7C3: return "C7:C3";
  }
  return "other";
}

std::size_t FiniteGroup::PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// Construction

FiniteGroup FiniteGroup::from_generators(int degree, std::vector<Perm> gens,
                                         std::size_t cap) {
  if (degree < 1) throw PreconditionError("degree must be >= 1");
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw PreconditionError("generator is not a permutation of degree " +
                              std::to_string(degree));
  FiniteGroup group;
  group.degree_ = degree;
  group.perms_.push_back(identity_perm(degree));
  group.index_.emplace(group.perms_.back(), 0);
  std::vector<int> gen_elements;
  for (std::size_t head = 0; head < group.perms_.size(); ++head) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Perm next = compose(group.perms_[head], gens[j]);
      auto [it, inserted] =
          group.index_.emplace(next, static_cast<int>(group.perms_.size()));
      if (inserted) {
        if (group.perms_.size() >= cap)
          throw ResourceLimitError("closure exceeds the cap of " +
                                   std::to_string(cap) + " elements");
        group.perms_.push_back(std::move(next));
      }
    }
  }
  group.order_ = group.perms_.size();
  for (const auto& g : gens) gen_elements.push_back(group.index_.at(g));
  group.finish(GroupOrigin::Generators);
  // Keep the caller's generators (minus the identity) as the generating set.
  group.generators_.clear();
  for (int e : gen_elements)
    if (e != 0 && std::find(group.generators_.begin(), group.generators_.end(),
                            e) == group.generators_.end())
      group.generators_.push_back(e);
  return group;
}

FiniteGroup group_from_generators(int degree, std::vector<Perm> generators,
                                  std::size_t cap) {
  return FiniteGroup::from_generators(degree, std::move(generators), cap);
}

FiniteGroup FiniteGroup::from_cayley_table(
    const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw PreconditionError("Cayley table is empty");
  if (n > 4096) throw ResourceLimitError("Cayley table larger than 4096");
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw PreconditionError("Cayley table row " + std::to_string(a) +
                              " has the wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw PreconditionError("Cayley table entry out of range");
      table[a * n + b] = v;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[a] != static_cast<int>(a) || table[a * n] != static_cast<int>(a))
      throw PreconditionError("element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_seen[table[a * n + b]]++ || col_seen[table[b * n + a]]++)
        throw PreconditionError("Cayley table is not a Latin square");
    }
  }
  FiniteGroup group = from_trusted_table(std::move(table), n,
                                         GroupOrigin::CayleyTable);
  // Light's test: (x g) y == x (g y) for every generator g suffices.
  for (int g : group.generators_)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const int xi = static_cast<int>(x), yi = static_cast<int>(y);
        if (group.mul(group.mul(xi, g), yi) != group.mul(xi, group.mul(g, yi)))
          throw PreconditionError("Cayley table is not associative");
      }
  return group;
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<int> table,
                                            std::size_t order,
                                            GroupOrigin origin) {
  FiniteGroup group;
  group.order_ = order;
  group.table_ = std::move(table);
  group.finish(origin);
  return group;
}

void FiniteGroup::finish(GroupOrigin origin) {
  origin_ = origin;
  if (table_.empty() && order_ <= kTableLimit) {
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        table_[a * order_ + b] =
            multiply_slow(static_cast<int>(a), static_cast<int>(b));
  }
  inverse_.assign(order_, -1);
  for (std::size_t a = 0; a < order_; ++a) {
    if (inverse_[a] >= 0) continue;
    if (has_permutations()) {
      int b = index_.at(conjprob::inverse(perms_[a]));
      inverse_[a] = b;
      inverse_[static_cast<std::size_t>(b)] = static_cast<int>(a);
    } else {
      for (std::size_t b = 0; b < order_; ++b)
        if (mul(static_cast<int>(a), static_cast<int>(b)) == 0) {
          inverse_[a] = static_cast<int>(b);
          break;
        }
    }
  }
  // Greedy generating set: add the first element outside the span so far.
  generators_.clear();
  std::vector<char> in_span(order_, 0);
  in_span[0] = 1;
  std::size_t covered = 1;
  for (std::size_t e = 1; e < order_ && covered < order_; ++e) {
    if (in_span[e]) continue;
    generators_.push_back(static_cast<int>(e));
    auto span = generated_subgroup(*this, generators_);
    for (int x : span) in_span[static_cast<std::size_t>(x)] = 1;
    covered = span.size();
  }
}

int FiniteGroup::multiply_slow(int a, int b) const {
  return index_.at(compose(perms_[static_cast<std::size_t>(a)],
                           perms_[static_cast<std::size_t>(b)]));
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * order_ +
                  static_cast<std::size_t>(b)];
  return multiply_slow(a, b);
}

int FiniteGroup::commutator(int a, int b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

const Perm& FiniteGroup::permutation(int element) const {
  if (!has_permutations())
    throw PreconditionError("group has no permutation representation");
  return perms_.at(static_cast<std::size_t>(element));
}

std::optional<int> FiniteGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (mul(generators_[i], generators_[j]) !=
          mul(generators_[j], generators_[i]))
        return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < order_; ++x) {
    const int xi = static_cast<int>(x);
    bool central = std::all_of(generators_.begin(), generators_.end(),
                               [&](int g) { return mul(xi, g) == mul(g, xi); });
    if (central) out.push_back(xi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy and probabilities

ConjugacyTable conjugacy_table(const FiniteGroup& g) {
  ConjugacyTable t;
  const std::size_t n = g.order();
  t.class_of.assign(n, -1);
  std::vector<int> queue;
  for (std::size_t x = 0; x < n; ++x) {
    if (t.class_of[x] >= 0) continue;
    const int cls = static_cast<int>(t.class_count++);
    t.reps.push_back(static_cast<int>(x));
    queue.assign(1, static_cast<int>(x));
    t.class_of[x] = cls;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int gen : g.generators()) {
        int y = g.conjugate(queue[head], gen);
        if (t.class_of[static_cast<std::size_t>(y)] < 0) {
          t.class_of[static_cast<std::size_t>(y)] = cls;
          queue.push_back(y);
        }
      }
    t.class_sizes.push_back(queue.size());
    t.centralizer_orders.push_back(n / queue.size());
  }
  return t;
}

std::vector<std::size_t> centralizer_profile(const ConjugacyTable& t) {
  auto out = t.centralizer_orders;
  std::sort(out.begin(), out.end());
  return out;
}

ExactRational kappa_g(const FiniteGroup&, const ConjugacyTable& t) {
  ExactRational total = 0;
  for (std::size_t c : t.centralizer_orders)
    total += ExactRational(1, BigInt(std::to_string(c)) * c);
  total.canonicalize();
  return total;
}

ExactRational kappa_g(const FiniteGroup& g) {
  return kappa_g(g, conjugacy_table(g));
}

ExactRational rho_g(const FiniteGroup& g, const ConjugacyTable& t) {
  const std::size_t n = g.order();
  BigInt pairs = 0;  // sum of |C||D| over commuting ordered pairs
  std::vector<char> meets(t.class_count);
  for (std::size_t c = 0; c < t.class_count; ++c) {
    std::fill(meets.begin(), meets.end(), 0);
    const int rep = t.reps[c];
    for (std::size_t y = 0; y < n; ++y) {
      const int yi = static_cast<int>(y);
      if (g.mul(rep, yi) == g.mul(yi, rep)) meets[t.class_of[y]] = 1;
    }
    for (std::size_t d = 0; d < t.class_count; ++d)
      if (meets[d])
        pairs += BigInt(std::to_string(t.class_sizes[c])) * t.class_sizes[d];
  }
  BigInt order(std::to_string(n));
  return make_rational(pairs, order * order);
}

ExactRational rho_g(const FiniteGroup& g) { return rho_g(g, conjugacy_table(g)); }

ExactRational cp_g(const FiniteGroup& g, const ConjugacyTable& t) {
  return make_rational(static_cast<std::int64_t>(t.class_count),
                       static_cast<std::int64_t>(g.order()));
}

ExactRational cp_g(const FiniteGroup& g) { return cp_g(g, conjugacy_table(g)); }

ExactRational cp_g_counted(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (g.mul(ai, bi) == g.mul(bi, ai)) ++count;
    }
  BigInt order(std::to_string(n));
  return make_rational(BigInt(std::to_string(count)), order * order);
}

// ---------------------------------------------------------------------------
// Subgroups

std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    std::span<const int> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> elements{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (int s : gens) {
      int y = g.mul(elements[head], s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        elements.push_back(y);
      }
    }
  std::sort(elements.begin(), elements.end());
  return elements;
}

namespace {

std::vector<char> membership(const FiniteGroup& g, std::span<const int> elements) {
  std::vector<char> in(g.order(), 0);
  for (int x : elements) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.order())
      throw PreconditionError("element index out of range");
    in[static_cast<std::size_t>(x)] = 1;
  }
  return in;
}

}  // namespace

bool is_subgroup(const FiniteGroup& g, std::span<const int> elements) {
  if (elements.empty()) return false;
  auto in = membership(g, elements);
  if (!in[0]) return false;
  for (int a : elements)
    for (int b : elements)
      if (!in[static_cast<std::size_t>(g.mul(a, g.inv(b)))]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const int> elements) {
  if (!is_subgroup(g, elements)) return false;
  auto in = membership(g, elements);
  for (int x : elements)
    for (int s : g.generators())
      if (!in[static_cast<std::size_t>(g.conjugate(x, s))]) return false;
  return true;
}

FiniteGroup subgroup_group(const FiniteGroup& g, std::span<const int> elements) {
  if (!is_subgroup(g, elements))
    throw PreconditionError("elements do not form a subgroup");
  std::vector<int> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = local[static_cast<std::size_t>(g.mul(sorted[a], sorted[b]))];
  return FiniteGroup::from_trusted_table(std::move(table), n,
                                         GroupOrigin::Subgroup);
}

FiniteGroup quotient_group(const FiniteGroup& g, std::span<const int> normal) {
  if (!is_subgroup(g, normal))
    throw PreconditionError("quotient: N is not a subgroup");
  if (!is_normal_subgroup(g, normal))
    throw PreconditionError("quotient: N is not normal");
  // Cosets numbered by their smallest element, the identity coset first.
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int k : normal) coset_of[static_cast<std::size_t>(g.mul(static_cast<int>(x), k))] = id;
  }
  const std::size_t q = reps.size();
  std::vector<int> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = coset_of[static_cast<std::size_t>(g.mul(reps[a], reps[b]))];
  return FiniteGroup::from_trusted_table(std::move(table), q,
                                         GroupOrigin::Quotient);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.has_permutations() && b.has_permutations()) {
    const int da = a.degree(), db = b.degree();
    std::vector<Perm> gens;
    for (int s : a.generators()) {
      Perm p = identity_perm(da + db);
      const Perm& src = a.permutation(s);
      for (int i = 0; i < da; ++i) p[i] = src[i];
      gens.push_back(std::move(p));
    }
    for (int s : b.generators()) {
      Perm p = identity_perm(da + db);
      const Perm& src = b.permutation(s);
      for (int i = 0; i < db; ++i) p[da + i] = da + src[i];
      gens.push_back(std::move(p));
    }
    FiniteGroup out = FiniteGroup::from_generators(da + db, std::move(gens));
    out.origin_ = GroupOrigin::Product;
    return out;
  }
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > 4096) throw ResourceLimitError("direct product table too large");
  std::vector<int> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int left = a.mul(static_cast<int>(x / nb), static_cast<int>(y / nb));
      const int right = b.mul(static_cast<int>(x % nb), static_cast<int>(y % nb));
      table[x * n + y] = static_cast<int>(static_cast<std::size_t>(left) * nb +
                                          static_cast<std::size_t>(right));
    }
  return FiniteGroup::from_trusted_table(std::move(table), n,
                                         GroupOrigin::Product);
}

bool is_two_engel(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int xi = static_cast<int>(x);
      if (g.commutator(xi, g.commutator(xi, static_cast<int>(y))) != 0)
        return false;
    }
  return true;
}

std::size_t center_index(const FiniteGroup& g) {
  return g.order() / g.center().size();
}

// ---------------------------------------------------------------------------
// Verifiers

LowerGapReport verify_lower_gap(const FiniteGroup& g) {
  LowerGapReport r;
  const auto order = static_cast<std::int64_t>(g.order());
  r.kappa = kappa_g(g);
  r.bound = make_rational(7, 4 * order);
  r.abelian = g.is_abelian();
  r.center_index = center_index(g);
  r.equality = r.kappa == r.bound;
  if (r.abelian)
    r.passed = r.kappa == make_rational(1, order);
  else
    r.passed = r.kappa >= r.bound && (r.equality == (r.center_index == 4));
  return r;
}

namespace {

int classify_profile(const std::vector<std::size_t>& c) {
  auto at = [&](std::size_t i) -> std::size_t { return i < c.size() ? c[i] : 0; };
  if (at(0) == 2) return 1;
  if (at(0) == 3 && at(1) == 3) return 2;
  if (at(0) == 3 && at(1) == 4 && at(2) == 4) return 3;
  if (at(0) == 3 && at(1) == 4 && at(2) == 5 && at(3) == 5) return 4;
  return 0;
}

bool listed_family(GroupFamily f) {
  return f == GroupFamily::GeneralizedDihedral || f == GroupFamily::A4 ||
         f == GroupFamily::S4 || f == GroupFamily::A5 ||
         f == GroupFamily::FrobeniusC7C3;
}

}  // namespace

UpperGapReport verify_upper_gap(const FiniteGroup& g) {
  UpperGapReport r;
  const auto table = conjugacy_table(g);
  const auto order = static_cast<std::int64_t>(g.order());
  r.kappa = kappa_g(g, table);
  r.at_least_quarter = r.kappa >= make_rational(1, 4);
  r.profile = centralizer_profile(table);
  r.centralizer_case = classify_profile(r.profile);
  r.family = g.family();
  r.family_listed = listed_family(r.family);
  if (r.family == GroupFamily::GeneralizedDihedral)
    r.dihedral_formula = r.kappa == make_rational(1, 4) + make_rational(1, order) -
                                        make_rational(1, order * order);
  r.passed = true;
  if (r.at_least_quarter && order > 4 && r.centralizer_case == 0) r.passed = false;
  if (order > 4 && r.at_least_quarter != r.family_listed) r.passed = false;
  if (r.dihedral_formula && !*r.dihedral_formula) r.passed = false;
  return r;
}

FrobeniusReport verify_frobenius_formula(const FiniteGroup& g,
                                         std::span<const int> kernel,
                                         std::span<const int> complement) {
  if (!is_normal_subgroup(g, kernel))
    throw PreconditionError("Frobenius: kernel is not a normal subgroup");
  if (!is_subgroup(g, complement))
    throw PreconditionError("Frobenius: complement is not a subgroup");
  if (kernel.size() * complement.size() != g.order())
    throw PreconditionError("Frobenius: |K||H| != |G|");
  auto in_kernel = membership(g, kernel);
  for (int h : complement)
    if (h != 0 && in_kernel[static_cast<std::size_t>(h)])
      throw PreconditionError("Frobenius: K and H meet non-trivially");
  for (int h : complement) {
    if (h == 0) continue;
    for (int k : kernel)
      if (k != 0 && g.mul(h, k) == g.mul(k, h))
        throw PreconditionError(
            "Frobenius: a non-identity element of H centralizes part of K");
  }
  FrobeniusReport r;
  const FiniteGroup kg = subgroup_group(g, kernel);
  const FiniteGroup hg = subgroup_group(g, complement);
  r.kappa = kappa_g(g);
  r.kappa_kernel = kappa_g(kg);
  r.kappa_complement = kappa_g(hg);
  const BigInt order_g(std::to_string(g.order()));
  const BigInt order_k(std::to_string(kg.order()));
  const BigInt order_h(std::to_string(hg.order()));
  r.formula = ExactRational(1, order_g * order_g) +
              (r.kappa_kernel - ExactRational(1, order_k * order_k)) /
                  ExactRational(order_h) +
              (r.kappa_complement - ExactRational(1, order_h * order_h));
  r.formula.canonicalize();
  r.passed = r.kappa == r.formula;
  return r;
}

FrobeniusParts natural_frobenius_parts(const FiniteGroup& g) {
  if (!g.has_permutations())
    throw PreconditionError("natural Frobenius parts need a permutation group");
  FrobeniusParts parts;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Perm& p = g.permutation(static_cast<int>(x));
    int fixed = 0;
    for (int i = 0; i < g.degree(); ++i) fixed += p[i] == i;
    if (p[0] == 0) parts.complement.push_back(static_cast<int>(x));
    if (x == 0 || fixed == 0) parts.kernel.push_back(static_cast<int>(x));
  }
  return parts;
}

QuotientMonotoneReport verify_quotient_monotone(const FiniteGroup& g,
                                                std::span<const int> normal) {
  if (normal.size() < 2)
    throw PreconditionError("quotient monotonicity needs a non-trivial N");
  QuotientMonotoneReport r;
  const FiniteGroup q = quotient_group(g, normal);
  r.kappa = kappa_g(g);
  r.kappa_quotient = kappa_g(q);
  r.quotient_order = q.order();
  r.passed = r.kappa < r.kappa_quotient;
  return r;
}

RemarksReport remarks_suite(const FiniteGroup& g,
                            std::span<const FiniteGroup> factors) {
  RemarksReport r;
  const auto table = conjugacy_table(g);
  r.abelian = g.is_abelian();
  r.kappa = kappa_g(g, table);
  r.rho = rho_g(g, table);
  r.rho_one_iff_abelian = (r.rho == 1) == r.abelian;
  r.cp = cp_g(g, table);
  r.two_engel = is_two_engel(g);
  r.rho_cp_iff_engel = (r.rho == r.cp) == r.two_engel;
  r.rho_equals_kappa = r.rho == r.kappa;
  r.rho_at_least_kappa = r.rho >= r.kappa;
  r.scaled_rho = r.rho * ExactRational(BigInt(std::to_string(g.order())));
  r.scaled_rho_integer = is_integer(r.scaled_rho);
  if (!factors.empty()) {
    ExactRational product = 1;
    for (const auto& f : factors) product *= kappa_g(f);
    r.product_multiplicative = product == r.kappa;
  }
  r.passed = r.rho_one_iff_abelian && r.rho_cp_iff_engel &&
             r.rho_at_least_kappa &&
             r.product_multiplicative.value_or(true);
  return r;
}

}  // namespace conjprob
