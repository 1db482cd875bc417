#include "conjprob/catalog.hpp"

#include "conjprob/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace conjprob {

namespace {

[[noreturn]] void unknown(std::string_view name) {
  throw PreconditionError("unknown catalog group '" + std::string(name) + "'");
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    unknown(whole);
  return value;
}

FiniteGroup cyclic(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return group_from_generators(n, {p});
}

FiniteGroup dihedral(int order) {
  const int n = order / 2;
  Perm rotation(static_cast<std::size_t>(n)), reflection(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return group_from_generators(n, {rotation, reflection});
}

FiniteGroup symmetric(int n) {
  if (n <= 1) return group_from_generators(1, {});
  Perm swap = identity_perm(n), cycle(static_cast<std::size_t>(n));
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return group_from_generators(n, {swap, cycle});
}

FiniteGroup alternating(int n) {
  if (n <= 2) return group_from_generators(std::max(n, 1), {});
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm p = identity_perm(n);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return group_from_generators(n, gens);
}

// Points are tuples in Z_{n_1} x ... x Z_{n_r}, numbered in mixed radix.
struct Lattice {
  std::vector<int> moduli;
  int size() const {
    return std::accumulate(moduli.begin(), moduli.end(), 1, std::multiplies<>());
  }
  std::vector<int> coords(int x) const {
    std::vector<int> c(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      c[i] = x % moduli[i];
      x /= moduli[i];
    }
    return c;
  }
  int index(const std::vector<int>& c) const {
    int x = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) x = x * moduli[i] + c[i];
    return x;
  }
  template <class F>
  Perm map(F f) const {
    Perm p(static_cast<std::size_t>(size()));
    for (int x = 0; x < size(); ++x) {
      auto c = coords(x);
      f(c);
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ((c[i] % moduli[i]) + moduli[i]) % moduli[i];
      p[x] = index(c);
    }
    return p;
  }
  std::vector<Perm> translations() const {
    std::vector<Perm> out;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      out.push_back(map([i](std::vector<int>& c) { ++c[i]; }));
    return out;
  }
};

FiniteGroup generalized_dihedral(std::string_view inner, std::string_view whole) {
  Lattice lattice;
  for (const auto& factor : product_factors(inner)) {
    if (factor.size() < 2 || factor[0] != 'c') unknown(whole);
    const int n = parse_int(std::string_view(factor).substr(1), whole);
    if (n < 3 || n % 2 == 0) unknown(whole);
    lattice.moduli.push_back(n);
  }
  auto gens = lattice.translations();
  gens.push_back(lattice.map([](std::vector<int>& c) {
    for (int& v : c) v = -v;
  }));
  return group_from_generators(lattice.size(), gens);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Element of order exactly q in the multiplicative group of F_p.
int scalar_of_order(int p, int q) {
  for (int a = 1; a < p; ++a) {
    int x = 1, ord = 0;
    do {
      x = x * a % p;
      ++ord;
    } while (x != 1);
    if (ord == q) return a;
  }
  return 0;
}

FiniteGroup affine(int p, int m, int q, std::string_view whole) {
  if (!is_prime(p) || m < 1 || q < 2 || (p - 1) % q != 0) unknown(whole);
  Lattice lattice{std::vector<int>(static_cast<std::size_t>(m), p)};
  if (lattice.size() > 5000) throw ResourceLimitError("affine group too large");
  const int w = scalar_of_order(p, q);
  auto gens = lattice.translations();
  gens.push_back(lattice.map([w](std::vector<int>& c) {
    for (int& v : c) v *= w;
  }));
  return group_from_generators(lattice.size(), gens);
}

FiniteGroup psl27() {
  // Points 0..6 are F_7, point 7 is infinity.
  Perm shift(8), invert(8);
  for (int x = 0; x < 7; ++x) shift[x] = (x + 1) % 7;
  shift[7] = 7;
  invert[0] = 7;
  invert[7] = 0;
  for (int x = 1; x < 7; ++x) {
    int inv = 1;
    while (inv * x % 7 != 1) ++inv;
    invert[x] = (7 - inv) % 7;
  }
  return group_from_generators(8, {shift, invert});
}

FiniteGroup quaternion() {
  return group_from_generators(
      8, {parse_cycles("(1 2 3 4)(5 6 7 8)", 8),
          parse_cycles("(1 5 3 7)(2 8 4 6)", 8)});
}

FiniteGroup atom(std::string_view name) {
  if (name == "v4")
    return group_from_generators(
        4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  if (name == "q8") return quaternion();
  if (name == "psl27") return psl27();
  if (name.starts_with("dih(") && name.ends_with(")"))
    return generalized_dihedral(name.substr(4, name.size() - 5), name);
  if (name.size() < 2) unknown(name);
  if (const auto colon = name.find(':'); colon != std::string_view::npos) {
    // c<p>[^<m>]:c<q>
    std::string_view left = name.substr(0, colon), right = name.substr(colon + 1);
    if (left.empty() || left[0] != 'c' || right.size() < 2 || right[0] != 'c')
      unknown(name);
    left.remove_prefix(1);
    int m = 1;
    if (const auto caret = left.find('^'); caret != std::string_view::npos) {
      m = parse_int(left.substr(caret + 1), name);
      left = left.substr(0, caret);
    }
    return affine(parse_int(left, name), m, parse_int(right.substr(1), name), name);
  }
  const char kind = name[0];
  const int n = parse_int(name.substr(1), name);
  switch (kind) {
    case 'c':
      if (n < 1 || n > 100000) unknown(name);
      return n == 1 ? group_from_generators(1, {}) : cyclic(n);
    case 'd':
      if (n < 2 || n % 2 || n > 200000) unknown(name);
      if (n == 2) return cyclic(2);
      if (n == 4) return atom("v4");
      return dihedral(n);
    case 's':
      if (n < 1 || n > 8) unknown(name);
      return symmetric(n);
    case 'a':
      if (n < 1 || n > 8) unknown(name);
      return alternating(n);
    default:
      unknown(name);
  }
}

GroupFamily atom_family(std::string_view name) {
  if (name == "a4") return GroupFamily::A4;
  if (name == "s4") return GroupFamily::S4;
  if (name == "a5") return GroupFamily::A5;
  if (name == "c7:c3") return GroupFamily::FrobeniusC7C3;
  if (name == "s3" || name.starts_with("dih(")) return GroupFamily::GeneralizedDihedral;
  if (name.starts_with("d") && name.size() > 1 && name[1] != 'i') {
    const int order = std::stoi(std::string(name.substr(1)));
    if (order >= 6 && (order / 2) % 2 == 1) return GroupFamily::GeneralizedDihedral;
  }
  if (name.starts_with("c") && name.ends_with(":c2")) {
    // Scalars of order 2 act as inversion on F_p^m.
    const auto caret = name.find('^');
    const auto colon = name.find(':');
    const int p = std::stoi(std::string(name.substr(1, std::min(caret, colon) - 1)));
    if (p % 2 == 1) return GroupFamily::GeneralizedDihedral;
  }
  return GroupFamily::Other;
}

std::string lowercase(std::string_view name) {
  std::string out(name);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            out.end());
  return out;
}

}  // namespace

std::vector<std::string> product_factors(std::string_view name) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (name[i] == 'x' && depth == 0) {
      out.emplace_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(name.substr(start));
  return out;
}

FiniteGroup catalog_group(std::string_view raw) {
  const std::string name = lowercase(raw);
  if (name.empty()) unknown(raw);
  const auto factors = product_factors(name);
  for (const auto& f : factors)
    if (f.empty()) unknown(raw);
  FiniteGroup group = atom(factors.front());
  group.set_family(atom_family(factors.front()));
  for (std::size_t i = 1; i < factors.size(); ++i) {
    group = direct_product(group, atom(factors[i]));
    group.set_family(GroupFamily::Other);
  }
  if (group.is_abelian()) group.set_family(GroupFamily::Abelian);
  group.set_name(name);
  return group;
}

std::vector<std::string> standard_catalog() {
  return {"c1",       "c2",        "c3",       "c4",        "c5",
          "c6",       "v4",        "c2xc2xc2", "d8",        "d10",
          "d12",      "q8",        "s3",       "s4",        "s5",
          "s6",       "a4",        "a5",       "a6",        "c7:c3",
          "c5:c4",    "psl27",     "dih(c3)",  "dih(c5)",   "dih(c7)",
          "dih(c9)",  "dih(c3xc3)", "dih(c15)", "c7^2:c3",  "c5^2:c4",
          "c3^2:c2",  "c3^3:c2",   "d8xc2",    "d8xc3",     "d8xc5",
          "q8xc3",    "q8xc5",     "s3xc2",    "s3xs3",     "a4xc2"};
}

std::vector<std::pair<std::string, std::string>> isoclinic_pairs() {
  return {{"d8", "q8"},       {"d8", "d8xc2"},    {"d8", "d8xc3"},
          {"d8", "d8xc5"},    {"q8", "q8xc3"},    {"q8", "q8xc5"},
          {"d8xc3", "q8xc3"}, {"d8xc5", "q8xc5"}, {"d8xc2", "q8xc5"}};
}

IsoclinismReport verify_isoclinism_invariant(std::string_view left,
                                             std::string_view right) {
  IsoclinismReport r;
  r.left = lowercase(left);
  r.right = lowercase(right);
  const auto pairs = isoclinic_pairs();
  const bool listed =
      r.left == r.right ||
      std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
        return (p.first == r.left && p.second == r.right) ||
               (p.first == r.right && p.second == r.left);
      });
  if (!listed)
    throw PreconditionError("(" + r.left + ", " + r.right +
                            ") is not a catalogued isoclinic pair");
  const FiniteGroup g = catalog_group(r.left), h = catalog_group(r.right);
  r.scaled_left = kappa_g(g) * ExactRational(BigInt(std::to_string(g.order())));
  r.scaled_right = kappa_g(h) * ExactRational(BigInt(std::to_string(h.order())));
  r.passed = r.scaled_left == r.scaled_right;
  return r;
}

LimitPointReport frobenius_limit_point_check(int p, int m, int q) {
  LimitPointReport r;
  r.p = p;
  r.m = m;
  r.q = q;
  const std::string name = "c" + std::to_string(p) + "^" + std::to_string(m) +
                           ":c" + std::to_string(q);
  const FiniteGroup g = catalog_group(name);
  const FiniteGroup k = catalog_group("c" + std::to_string(p));
  const FiniteGroup h = catalog_group("c" + std::to_string(q));
  r.kappa = kappa_g(g);
  const BigInt order_g(std::to_string(g.order()));
  const BigInt order_h(q);
  const BigInt k_pow = power(BigInt(p), static_cast<unsigned long>(m));
  r.formula = make_rational(BigInt(1), order_g * order_g) +
              power(kappa_g(k), static_cast<unsigned long>(m)) / ExactRational(order_h) -
              make_rational(BigInt(1), order_h * k_pow * k_pow) + kappa_g(h) -
              make_rational(BigInt(1), order_h * order_h);
  r.passed = r.kappa == r.formula;
  return r;
}

}  // namespace conjprob
