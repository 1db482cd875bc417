#include "conjprob/rational.hpp"

#include <stdexcept>

namespace conjprob {

std::string to_fraction_string(const ExactRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
      throw std::invalid_argument("malformed denominator in '" +
                                  std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                  "'");
    return make_rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || !all_digits(frac_part))
      throw std::invalid_argument("malformed decimal '" + std::string(text) +
                                  "'");
    BigInt whole(std::string(int_part) + std::string(frac_part), 10);
    BigInt scale = power(BigInt(10), frac_part.size());
    return make_rational(negative ? BigInt(-whole) : whole, scale);
  }
  return ExactRational(parse_integer(text));
}

ExactRational round_to_decimal(const ExactRational& q, unsigned digits,
                               Rounding mode) {
  BigInt scale = power(BigInt(10), digits);
  BigInt scaled_num = q.get_num() * scale;
  const BigInt& den = q.get_den();
  BigInt result;
  switch (mode) {
    case Rounding::Down:
      mpz_fdiv_q(result.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::Up:
      mpz_cdiv_q(result.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::HalfUp: {
      // |x| + 1/2, truncated, sign restored.
      BigInt abs_num = abs(scaled_num);
      BigInt twice = 2 * abs_num + den;
      BigInt twice_den = 2 * den;
      mpz_fdiv_q(result.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
      if (scaled_num < 0) result = -result;
      break;
    }
  }
  return make_rational(result, scale);
}

std::string to_decimal(const ExactRational& q, unsigned digits,
                       Rounding mode) {
  ExactRational r = round_to_decimal(q, digits, mode);
  BigInt scaled = r.get_num() * (power(BigInt(10), digits) / r.get_den());
  bool negative = scaled < 0;
  std::string body = BigInt(abs(scaled)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - digits);
  }
  return out;
}

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

ExactRational power(const ExactRational& base, unsigned long exponent) {
  ExactRational r(power(base.get_num(), exponent),
                  power(base.get_den(), exponent));
  return r;  // already coprime
}

bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

}  // namespace conjprob
