#include "conjprob/certified.hpp"

#include <stdexcept>

namespace conjprob {

namespace {

// Rounds outward onto the dyadic grid 2^-bits to keep operand sizes bounded.
ExactRational dyadic_floor(const ExactRational& q, unsigned bits) {
  BigInt scaled = q.get_num() << bits;
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  return make_rational(out, BigInt(1) << bits);
}

ExactRational dyadic_ceil(const ExactRational& q, unsigned bits) {
  BigInt scaled = q.get_num() << bits;
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  return make_rational(out, BigInt(1) << bits);
}

// log(y) for 1 <= y <= 2 via 2 * atanh(u), u = (y - 1)/(y + 1) in [0, 1/3].
// Powers of u are tracked on both sides of the dyadic grid.
RationalInterval log_near_one(const ExactRational& y, unsigned bits) {
  const ExactRational u = (y - 1) / (y + 1);
  const ExactRational u2 = u * u;
  const unsigned work = bits + 16;
  const unsigned terms = work / 3 + 2;  // 9^-terms < 2^-work
  ExactRational sum_lo = 0;
  ExactRational sum_hi = 0;
  ExactRational pow_lo = u;  // lower/upper enclosure of u^(2j+1)
  ExactRational pow_hi = u;
  unsigned j = 0;
  for (; j < terms; ++j) {
    sum_lo += dyadic_floor(pow_lo / (2 * j + 1), work);
    sum_hi += dyadic_ceil(pow_hi / (2 * j + 1), work);
    pow_lo = dyadic_floor(pow_lo * u2, work + 8);
    pow_hi = dyadic_ceil(pow_hi * u2, work + 8);
  }
  // sum_{i >= j} u^(2i+1)/(2i+1) <= u^(2j+1) / ((2j+1)(1 - u^2)).
  const ExactRational tail = pow_hi / ((2 * j + 1) * (1 - u2));
  return {dyadic_floor(2 * sum_lo, bits), dyadic_ceil(2 * (sum_hi + tail), bits)};
}

}  // namespace

RationalInterval e_bounds() {
  return {make_rational(2718281828, 1000000000),
          make_rational(2718281829, 1000000000)};
}

RationalInterval log_bounds(const ExactRational& x, unsigned precision_bits) {
  if (x <= 0) throw std::invalid_argument("log of a non-positive rational");
  const unsigned bits = precision_bits + 8;
  // x = 2^k * y with 1 <= y < 2.
  long k = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
  ExactRational y = x;
  if (k > 0) y /= ExactRational(BigInt(1) << k);
  if (k < 0) y *= ExactRational(BigInt(1) << -k);
  while (y < 1) {
    y *= 2;
    --k;
  }
  while (y >= 2) {
    y /= 2;
    ++k;
  }
  RationalInterval ly = log_near_one(y, bits);
  if (k == 0) return ly;
  RationalInterval l2 = log_near_one(ExactRational(2), bits);
  RationalInterval out;
  if (k > 0) {
    out.lo = ly.lo + k * l2.lo;
    out.hi = ly.hi + k * l2.hi;
  } else {
    out.lo = ly.lo + k * l2.hi;
    out.hi = ly.hi + k * l2.lo;
  }
  return out;
}

RationalInterval regular_tail_constant() {
  auto [e_lo, e_hi] = e_bounds();
  auto c = [](const ExactRational& e) -> ExactRational {
    return e * e * e / (1 - e / 3);
  };
  return {c(e_lo), c(e_hi)};
}

}  // namespace conjprob
