#pragma once

// Rational enclosures of the irrational constants that appear in the
// bounds: e, natural logarithms, and c = e^3 / (1 - e/3).

#include "conjprob/rational.hpp"

namespace conjprob {

struct RationalInterval {
  ExactRational lo;
  ExactRational hi;

  bool contains(const ExactRational& x) const { return lo <= x && x <= hi; }
};

/// [2718281828/10^9, 2718281829/10^9].
RationalInterval e_bounds();

/// lo <= log(x) <= hi for x > 0, with hi - lo < 2^-precision_bits.
/// Computed from the atanh series after reduction to [1, 2).
RationalInterval log_bounds(const ExactRational& x,
                            unsigned precision_bits = 128);

/// Enclosure of c = e^3 / (1 - e/3) from the rational bounds on e.
RationalInterval regular_tail_constant();

}  // namespace conjprob
