#pragma once

// Integer partitions as cycle types of permutations.

#include "conjprob/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conjprob {

/// A partition of n, parts weakly decreasing and positive. Encodes the
/// conjugacy class of S_n made of permutations with these cycle lengths.
class CycleType {
 public:
  CycleType() = default;

  /// Accepts parts in any order; throws std::invalid_argument on a part < 1.
  explicit CycleType(std::vector<int> parts);

  /// Parses "(3,1,1)", "3,1,1", "3 1 1" or "()" for the empty partition.
  static CycleType parse(std::string_view text);

  int n() const { return n_; }
  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const;

  /// Run-length (part, multiplicity) pairs in decreasing part order, each
  /// number written as a LEB128 varint. Injective on valid partitions.
  std::string encode() const;
  static CycleType decode(std::string_view bytes);

  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend std::strong_ordering operator<=>(const CycleType& a,
                                          const CycleType& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Streams the partitions of n in reverse lexicographic order, largest part
/// first: (n), (n-1,1), (n-2,2), (n-2,1,1), ... Uses O(n) memory. A stream
/// may be restricted to a band of leading parts so that the enumeration can
/// be split across workers; each band is an independent cursor.
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  PartitionStream(int n, int min_leading, int max_leading);

  /// Advances to the next partition; false once the stream is exhausted.
  /// The first call positions on the first partition.
  bool next();

  std::span<const int> parts() const {
    return std::span<const int>(parts_.data(), length_);
  }
  CycleType value() const {
    return CycleType(std::vector<int>(parts().begin(), parts().end()));
  }

 private:
  void successor();

  std::vector<int> parts_;
  std::size_t length_ = 0;
  std::size_t last_big_ = 0;  // index of the last part > 1
  int n_;
  int min_leading_;
  int max_leading_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<CycleType> all_partitions(int n);

/// p(n) from Euler's pentagonal-number recurrence (no enumeration).
BigInt count_partitions(int n);
std::vector<BigInt> partition_counts(int n_max);

/// |C_{S_n}(sigma)| for sigma of cycle type lambda: prod_i i^{m_i} m_i!.
BigInt centralizer_order(const CycleType& lambda);
BigInt centralizer_order(std::span<const int> parts);

/// Position of a partition in the reverse lexicographic order of
/// PartitionStream, computed from a table of restricted partition counts.
class PartitionRanker {
 public:
  explicit PartitionRanker(int max_n);

  int max_n() const { return max_n_; }
  std::uint64_t count(int n) const { return restricted(n, n); }
  /// Partitions of n with every part <= max_part.
  std::uint64_t restricted(int n, int max_part) const;

  std::uint64_t rank(std::span<const int> parts) const;
  /// Same rank from a multiplicity vector (mult[i] = number of parts equal
  /// to i, index 0 unused) of a partition of n.
  std::uint64_t rank_multiplicities(std::span<const std::uint8_t> mult,
                                    int n) const;

 private:
  int max_n_;
  std::vector<std::uint64_t> table_;  // (max_n+1)^2, row = n, column = part cap
};

}  // namespace conjprob
