#include "conjprob/permutation.hpp"

#include "conjprob/errors.hpp"

#include <stdexcept>

namespace conjprob {

Perm identity_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(std::span<const int> a, std::span<const int> b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm inverse(std::span<const int> a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

bool is_permutation(std::span<const int> a) {
  std::vector<char> seen(a.size(), 0);
  for (int x : a) {
    if (x < 0 || static_cast<std::size_t>(x) >= a.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool commute(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

CycleType cycle_type(std::span<const int> a) {
  std::vector<char> seen(a.size(), 0);
  std::vector<int> parts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

bool is_regular(std::span<const int> a) {
  auto type = cycle_type(a);
  auto parts = type.parts();
  return parts.empty() || parts.front() == parts.back();
}

Perm perm_of_type(const CycleType& type) {
  Perm p(static_cast<std::size_t>(type.n()));
  int start = 0;
  for (int len : type.parts()) {
    for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
    start += len;
  }
  return p;
}

Perm parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  Perm p = identity_perm(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw std::invalid_argument("unexpected character in cycle notation");
      long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw std::invalid_argument("point exceeds degree");
        ++i;
      }
      if (v < 1) throw std::invalid_argument("points are numbered from 1");
      int point = static_cast<int>(v - 1);
      if (used[point])
        throw std::invalid_argument("point repeated in cycle notation");
      used[point] = 1;
      cycle.push_back(point);
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      p[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::string format_cycles(std::span<const int> a) {
  std::string out;
  std::vector<char> seen(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) {
      seen[j] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace conjprob
