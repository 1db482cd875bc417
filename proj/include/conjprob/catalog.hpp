#pragma once

// Named groups built from permutation generators.
//
//   c<n>            cyclic of order n
//   v4              Klein four-group
//   d<2n>           dihedral of order 2n (d2 = c2, d4 = v4)
//   q8              quaternion group
//   s<n>, a<n>      symmetric and alternating groups, n <= 8
//   dih(<A>)        generalized dihedral A : C_2, A a product of odd cyclics
//   c<p>^<m>:c<q>   affine group F_p^m : C_q, scalars of order q (m defaults
//                   to 1), e.g. c7:c3, c5:c4, c3^2:c2
//   psl27           PSL(2,7) on the projective line over F_7
//   <G>x<H>         direct product of catalog members

#include "conjprob/finite_groups.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conjprob {

/// Throws PreconditionError for an unknown or malformed name.
FiniteGroup catalog_group(std::string_view name);

/// Top-level factors of a product name ("d8xc3" -> {"d8", "c3"}); a single
/// name when the group is not a product.
std::vector<std::string> product_factors(std::string_view name);

/// Members exercised by the verification suites.
std::vector<std::string> standard_catalog();

/// Pairs asserted to be isoclinic: (D8, Q8) and their products with abelian
/// groups.
std::vector<std::pair<std::string, std::string>> isoclinic_pairs();

struct IsoclinismReport {
  std::string left;
  std::string right;
  ExactRational scaled_left;   // kappa(G) |G|
  ExactRational scaled_right;  // kappa(H) |H|
  bool passed = false;
};

/// kappa(G)|G| = kappa(H)|H| for a listed pair (or G = H). Throws
/// PreconditionError for any other pair.
IsoclinismReport verify_isoclinism_invariant(std::string_view left,
                                             std::string_view right);

struct LimitPointReport {
  int p = 0;
  int m = 0;
  int q = 0;
  ExactRational kappa;    // kappa(C_p^m : C_q)
  ExactRational formula;  // 1/|G|^2 + kappa(K)^m/|H| - 1/(|H||K|^{2m}) + kappa(H) - 1/|H|^2
  bool passed = false;
};

/// Frobenius family G_m = C_p^m : C_q with K = C_p, H = C_q; q | p - 1.
LimitPointReport frobenius_limit_point_check(int p, int m, int q);

}  // namespace conjprob
