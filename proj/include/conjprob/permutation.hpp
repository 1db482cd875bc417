#pragma once

// Permutations of {0, ..., d-1} stored as image vectors. Composition is
// left to right: (a * b)(x) = b(a(x)).

#include "conjprob/partitions.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conjprob {

using Perm = std::vector<int>;

Perm identity_perm(int degree);
Perm compose(std::span<const int> a, std::span<const int> b);
Perm inverse(std::span<const int> a);
bool is_permutation(std::span<const int> a);
bool commute(std::span<const int> a, std::span<const int> b);
CycleType cycle_type(std::span<const int> a);
/// All cycles of equal length (the identity on zero points counts).
bool is_regular(std::span<const int> a);

/// Canonical permutation of the given cycle type: consecutive points, cycle
/// by cycle in the order of the parts.
Perm perm_of_type(const CycleType& type);

/// Cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)"; "()" for identity.
Perm parse_cycles(std::string_view text, int degree);
std::string format_cycles(std::span<const int> a);

/// Calls f on every permutation of {0..degree-1} in lexicographic order.
template <class F>
void for_each_permutation(int degree, F&& f);

}  // namespace conjprob

#include <algorithm>
#include <numeric>

namespace conjprob {

template <class F>
void for_each_permutation(int degree, F&& f) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  do {
    f(static_cast<const Perm&>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace conjprob
