#pragma once

// Small finite groups given by permutation generators or a Cayley table,
// their conjugacy classes, and the probabilities kappa, rho and cp.

#include "conjprob/permutation.hpp"
#include "conjprob/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace conjprob {

enum class GroupOrigin { Generators, CayleyTable, Quotient, Subgroup, Product };

/// Groups the upper-gap classification names explicitly; Other covers every
/// group not known to be in one of them.
enum class GroupFamily {
  Other,
  Abelian,
  GeneralizedDihedral,  // A : C_2 with A abelian of odd order, C_2 inverting
  A4,
  S4,
  A5,
  FrobeniusC7C3,
};

std::string to_string(GroupFamily family);

/// Elements are indices 0..order-1, 0 the identity. For generator groups the
/// indices follow breadth-first order from the identity, generators applied
/// in the order given.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultClosureCap = 100000;
  /// Groups up to this order keep a full multiplication table.
  static constexpr std::size_t kTableLimit = 2048;

  /// Closure of the generators, each a bijection of {0..degree-1}. Throws
  /// PreconditionError on an invalid permutation and ResourceLimitError when
  /// the closure exceeds `cap` elements.
  static FiniteGroup from_generators(int degree, std::vector<Perm> generators,
                                     std::size_t cap = kDefaultClosureCap);

  /// table[a][b] = a * b. Requires element 0 to be the identity, a Latin
  /// square, and associativity (verified with Light's test over a
  /// generating set, which is exhaustive).
  static FiniteGroup from_cayley_table(
      const std::vector<std::vector<int>>& table);

  std::size_t order() const { return order_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }
  int commutator(int a, int b) const;  // a^-1 b^-1 a b

  GroupOrigin origin() const { return origin_; }
  bool has_permutations() const { return !perms_.empty(); }
  int degree() const { return degree_; }
  const Perm& permutation(int element) const;
  std::optional<int> find(const Perm& p) const;

  /// Element indices of a generating set.
  std::span<const int> generators() const { return generators_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  GroupFamily family() const { return family_; }
  void set_family(GroupFamily family) { family_ = family; }

  bool is_abelian() const;
  std::vector<int> center() const;

 private:
  FiniteGroup() = default;
  void finish(GroupOrigin origin);  // inverses, table, generators
  int multiply_slow(int a, int b) const;

  struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept;
  };

  std::size_t order_ = 0;
  int degree_ = 0;
  GroupOrigin origin_ = GroupOrigin::Generators;
  std::vector<Perm> perms_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> table_;  // order_^2 when order_ <= kTableLimit
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::string name_;
  GroupFamily family_ = GroupFamily::Other;

  // Table already known to describe a group with 0 as identity.
  static FiniteGroup from_trusted_table(std::vector<int> table,
                                        std::size_t order, GroupOrigin origin);

  friend FiniteGroup subgroup_group(const FiniteGroup&, std::span<const int>);
  friend FiniteGroup quotient_group(const FiniteGroup&, std::span<const int>);
  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&);
};

FiniteGroup group_from_generators(int degree, std::vector<Perm> generators,
                                  std::size_t cap = FiniteGroup::kDefaultClosureCap);

struct ConjugacyTable {
  std::size_t class_count = 0;
  std::vector<int> class_of;                // element -> class index
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> centralizer_orders;
  std::vector<int> reps;                    // class 0 is {identity}
};

ConjugacyTable conjugacy_table(const FiniteGroup& g);

/// Centralizer orders in increasing order (c_1(G) <= c_2(G) <= ...).
std::vector<std::size_t> centralizer_profile(const ConjugacyTable& t);

/// sum_i 1 / |C_G(g_i)|^2 over class representatives.
ExactRational kappa_g(const FiniteGroup& g, const ConjugacyTable& t);
ExactRational kappa_g(const FiniteGroup& g);

/// Sum of |C||D| / |G|^2 over ordered pairs of classes that commute; D meets
/// the centralizer of a fixed representative of C.
ExactRational rho_g(const FiniteGroup& g, const ConjugacyTable& t);
ExactRational rho_g(const FiniteGroup& g);

/// k(G) / |G|.
ExactRational cp_g(const FiniteGroup& g, const ConjugacyTable& t);
ExactRational cp_g(const FiniteGroup& g);
/// Commuting pairs counted directly, divided by |G|^2.
ExactRational cp_g_counted(const FiniteGroup& g);

std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    std::span<const int> generators);
bool is_subgroup(const FiniteGroup& g, std::span<const int> elements);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const int> elements);

/// The elements as a group in their own right (Cayley table, identity
/// first, remaining elements in increasing index order).
FiniteGroup subgroup_group(const FiniteGroup& g, std::span<const int> elements);

/// Cosets of a normal subgroup N. Throws PreconditionError when N is not a
/// subgroup or not normal.
FiniteGroup quotient_group(const FiniteGroup& g, std::span<const int> normal);

/// Permutation groups combine on disjoint points; otherwise a Cayley table
/// with element (a, b) at index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// [x, [x, g]] = 1 for all x, g.
bool is_two_engel(const FiniteGroup& g);

/// |G : Z(G)|.
std::size_t center_index(const FiniteGroup& g);

// ---------------------------------------------------------------------------
// Verifiers

struct LowerGapReport {
  ExactRational kappa;
  ExactRational bound;  // 7 / (4 |G|)
  bool abelian = false;
  std::size_t center_index = 0;
  bool equality = false;
  bool passed = false;
};

/// Abelian: kappa = 1/|G|. Otherwise kappa >= 7/(4|G|), with equality exactly
/// when |G : Z(G)| = 4.
LowerGapReport verify_lower_gap(const FiniteGroup& g);

struct UpperGapReport {
  ExactRational kappa;
  bool at_least_quarter = false;
  std::vector<std::size_t> profile;
  int centralizer_case = 0;  // 1..4 for the four admissible profiles, else 0
  GroupFamily family = GroupFamily::Other;
  bool family_listed = false;
  std::optional<bool> dihedral_formula;  // kappa == 1/4 + 1/|G| - 1/|G|^2
  bool passed = false;
};

/// When kappa >= 1/4 and |G| > 4 the profile must be one of c_1 = 2;
/// c_1 = c_2 = 3; c_1 = 3, c_2 = c_3 = 4; c_1 = 3, c_2 = 4, c_3 = c_4 = 5.
/// Above order 4, kappa >= 1/4 must coincide with membership of a listed
/// family (the family tag comes from the catalog), and generalized dihedral
/// groups must satisfy the closed form.
UpperGapReport verify_upper_gap(const FiniteGroup& g);

struct FrobeniusReport {
  ExactRational kappa;    // kappa(G) from the class equation
  ExactRational formula;  // 1/|G|^2 + (kappa(K) - 1/|K|^2)/|H| + kappa(H) - 1/|H|^2
  ExactRational kappa_kernel;
  ExactRational kappa_complement;
  bool passed = false;
};

/// Requires G = KH, K normal, K and H meeting trivially, and no non-identity
/// element of H commuting with a non-identity element of K; throws
/// PreconditionError otherwise.
FrobeniusReport verify_frobenius_formula(const FiniteGroup& g,
                                         std::span<const int> kernel,
                                         std::span<const int> complement);

/// For a permutation group acting as a Frobenius group on its points: the
/// stabilizer of point 0 and the fixed-point-free elements with 1.
struct FrobeniusParts {
  std::vector<int> kernel;
  std::vector<int> complement;
};
FrobeniusParts natural_frobenius_parts(const FiniteGroup& g);

struct QuotientMonotoneReport {
  ExactRational kappa;
  ExactRational kappa_quotient;
  std::size_t quotient_order = 0;
  bool passed = false;
};

/// kappa(G) < kappa(G/N) for a non-trivial normal N.
QuotientMonotoneReport verify_quotient_monotone(const FiniteGroup& g,
                                                std::span<const int> normal);

struct RemarksReport {
  bool abelian = false;
  ExactRational kappa;
  ExactRational rho;
  bool rho_one_iff_abelian = false;
  ExactRational cp;
  bool two_engel = false;
  bool rho_cp_iff_engel = false;
  bool rho_equals_kappa = false;  // reported only
  bool rho_at_least_kappa = false;
  ExactRational scaled_rho;  // |G| rho(G), reported only
  bool scaled_rho_integer = false;
  std::optional<bool> product_multiplicative;  // when factors are supplied
  bool passed = false;
};

/// rho = 1 iff abelian; rho >= kappa; rho = cp iff 2-Engel (every
/// centralizer is then normal); |G| rho integrality and rho = kappa as
/// observations; kappa(A x B) = kappa(A) kappa(B) when g = A x B is supplied
/// with its factors.
RemarksReport remarks_suite(const FiniteGroup& g,
                            std::span<const FiniteGroup> factors = {});

}  // namespace conjprob
