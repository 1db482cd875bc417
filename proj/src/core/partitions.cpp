#include "conjprob/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace conjprob {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
    n_ += p;
  }
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<int> parts;
  int current = -1;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
      if (current > 1'000'000)
        throw std::invalid_argument("partition part too large");
    } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '\t') {
      if (current >= 0) parts.push_back(current);
      current = -1;
    } else {
      throw std::invalid_argument("unexpected character in partition '" +
                                  std::string(text) + "'");
    }
  }
  if (current >= 0) parts.push_back(current);
  return CycleType(std::move(parts));
}

int CycleType::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

namespace {

void put_varint(std::string& out, std::uint64_t v) {
  do {
    unsigned char byte = v & 0x7f;
    v >>= 7;
    if (v != 0) byte |= 0x80;
    out.push_back(static_cast<char>(byte));
  } while (v != 0);
}

std::uint64_t get_varint(std::string_view& in) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    if (in.empty() || shift > 56)
      throw std::invalid_argument("truncated partition encoding");
    auto byte = static_cast<unsigned char>(in.front());
    in.remove_prefix(1);
    v |= std::uint64_t(byte & 0x7f) << shift;
    if ((byte & 0x80) == 0) return v;
    shift += 7;
  }
}

}  // namespace

std::string CycleType::encode() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    put_varint(out, static_cast<std::uint64_t>(parts_[i]));
    put_varint(out, j - i);
    i = j;
  }
  return out;
}

CycleType CycleType::decode(std::string_view bytes) {
  std::vector<int> parts;
  int previous = 0;
  while (!bytes.empty()) {
    auto part = get_varint(bytes);
    auto mult = get_varint(bytes);
    if (part == 0 || mult == 0 || (previous != 0 && part >= std::uint64_t(previous)))
      throw std::invalid_argument("non-canonical partition encoding");
    parts.insert(parts.end(), mult, static_cast<int>(part));
    previous = static_cast<int>(part);
  }
  return CycleType(std::move(parts));
}

std::string CycleType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

PartitionStream::PartitionStream(int n) : PartitionStream(n, 1, n) {}

PartitionStream::PartitionStream(int n, int min_leading, int max_leading)
    : parts_(static_cast<std::size_t>(std::max(n, 1)), 1),
      n_(n),
      min_leading_(std::max(min_leading, 1)),
      max_leading_(std::min(max_leading, n)) {
  if (n < 0) throw std::invalid_argument("partition weight must be >= 0");
  if (n > 0 && min_leading_ > max_leading_) done_ = true;
}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ == 0) {
      length_ = 0;
      return true;
    }
    // Greedy first partition with leading part max_leading_.
    int remaining = n_;
    length_ = 0;
    while (remaining > 0) {
      int part = std::min(max_leading_, remaining);
      parts_[length_++] = part;
      remaining -= part;
    }
    last_big_ = 0;
    for (std::size_t i = 0; i < length_; ++i)
      if (parts_[i] > 1) last_big_ = i;
    return true;
  }
  if (n_ == 0 || parts_[0] == 1) {
    done_ = true;
    return false;
  }
  successor();
  if (parts_[0] < min_leading_) {
    done_ = true;
    return false;
  }
  return true;
}

// Zoghbi-Stojmenovic successor in reverse lexicographic order.
void PartitionStream::successor() {
  std::size_t h = last_big_;
  if (parts_[h] == 2) {
    parts_[h] = 1;
    parts_[length_] = 1;
    ++length_;
    if (h > 0) last_big_ = h - 1;
    return;
  }
  int r = parts_[h] - 1;
  int t = static_cast<int>(length_ - h);  // units freed: 1 from x[h] + trailing ones
  parts_[h] = r;
  while (t >= r) {
    ++h;
    parts_[h] = r;
    t -= r;
  }
  if (t == 0) {
    length_ = h + 1;
  } else {
    length_ = h + 2;
    parts_[h + 1] = t;
    if (t > 1) ++h;
  }
  last_big_ = h;
  // When r == 1 there is no part > 1 left; parts_[0] == 1 stops the stream.
}

std::vector<CycleType> all_partitions(int n) {
  std::vector<CycleType> out;
  PartitionStream stream(n);
  while (stream.next()) out.push_back(stream.value());
  return out;
}

std::vector<BigInt> partition_counts(int n_max) {
  if (n_max < 0) throw std::invalid_argument("partition weight must be >= 0");
  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      int g2 = k * (3 * k + 1) / 2;
      const bool plus = (k % 2) == 1;
      BigInt term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (plus)
        total += term;
      else
        total -= term;
    }
    p[n] = total;
  }
  return p;
}

BigInt count_partitions(int n) { return partition_counts(n).back(); }

BigInt centralizer_order(std::span<const int> parts) {
  BigInt z = 1;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned long>(j - i);
    z *= power(BigInt(parts[i]), mult) * factorial(mult);
    i = j;
  }
  return z;
}

BigInt centralizer_order(const CycleType& lambda) {
  return centralizer_order(lambda.parts());
}

PartitionRanker::PartitionRanker(int max_n)
    : max_n_(max_n),
      table_(static_cast<std::size_t>(max_n + 1) * (max_n + 1), 0) {
  if (max_n < 0 || max_n > 400)
    throw std::invalid_argument("ranker weight out of range");
  const auto w = static_cast<std::size_t>(max_n + 1);
  for (std::size_t k = 0; k < w; ++k) table_[k] = 1;  // n = 0
  for (std::size_t n = 1; n < w; ++n) {
    table_[n * w] = 0;
    for (std::size_t k = 1; k < w; ++k) {
      std::uint64_t v = table_[n * w + k - 1];
      if (k <= n) v += table_[(n - k) * w + k];
      table_[n * w + k] = v;
    }
  }
}

std::uint64_t PartitionRanker::restricted(int n, int max_part) const {
  if (n < 0) return 0;
  max_part = std::min(max_part, n);
  if (max_part < 0) return 0;
  return table_[static_cast<std::size_t>(n) * (max_n_ + 1) + max_part];
}

std::uint64_t PartitionRanker::rank(std::span<const int> parts) const {
  int remaining = 0;
  for (int p : parts) remaining += p;
  int cap = remaining;
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) {
      remaining -= parts[i];
      continue;
    }
    r += restricted(remaining, cap) - restricted(remaining, parts[i]);
    cap = parts[i];
    remaining -= parts[i];
  }
  return r;
}

std::uint64_t PartitionRanker::rank_multiplicities(
    std::span<const std::uint8_t> mult, int n) const {
  int remaining = n;
  int cap = n;
  std::uint64_t r = 0;
  for (int size = std::min<int>(n, static_cast<int>(mult.size()) - 1);
       size >= 1 && remaining > 0; --size) {
    if (mult[size] == 0) continue;
    r += restricted(remaining, cap) - restricted(remaining, size);
    cap = size;
    remaining -= size * mult[size];
  }
  return r;
}

}  // namespace conjprob
