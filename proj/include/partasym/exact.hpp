#pragma once

// Exact partition counts p(n) in big-integer arithmetic.

#include "partasym/numerics.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace partasym {

/// Arbitrary-precision non-negative integer holding an exact count.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(BigInt v) : value_(std::move(v)) {
    if (value_ < 0) throw DomainError("BigCount: negative value");
  }

  static BigCount from_string(std::string_view digits) {
    if (digits.empty()) throw DomainError("BigCount: empty string");
    for (char c : digits) {
      if (c < '0' || c > '9') throw DomainError("BigCount: not a non-negative decimal integer: " + std::string(digits));
    }
    return BigCount(BigInt(std::string(digits)));
  }

  const BigInt& value() const noexcept { return value_; }
  std::string to_string() const { return value_.str(); }

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend bool operator<(const BigCount& a, const BigCount& b) { return a.value_ < b.value_; }
  friend bool operator<=(const BigCount& a, const BigCount& b) { return a.value_ <= b.value_; }

 private:
  BigInt value_{0};
};

/// Dense prefix p(0), p(1), ..., p(n_max).
class PartitionTable {
 public:
  explicit PartitionTable(std::vector<BigCount> entries) : entries_(std::move(entries)) {}

  std::size_t max_n() const noexcept { return entries_.size() - 1; }
  std::size_t size() const noexcept { return entries_.size(); }
  const BigCount& operator[](std::size_t k) const { return entries_[k]; }
  const BigCount& at(std::size_t k) const { return entries_.at(k); }
  const std::vector<BigCount>& entries() const noexcept { return entries_; }

 private:
  std::vector<BigCount> entries_;
};

inline constexpr std::uint64_t kDefaultTableCap = 1'000'000;
inline constexpr std::uint64_t kBruteforceLimit = 60;

/// Euler's pentagonal-number recurrence
///   p(m) = sum_{k>=1} (-1)^{k+1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)],
/// evaluated once for every m <= n_max.
inline PartitionTable partition_table(std::uint64_t n_max, std::uint64_t cap = kDefaultTableCap) {
  if (n_max > cap) {
    throw ResourceLimitError("partition_table: n_max " + std::to_string(n_max) +
                             " exceeds cap " + std::to_string(cap));
  }
  std::vector<BigInt> p(n_max + 1);
  p[0] = 1;
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    BigInt acc = 0;
    for (std::uint64_t k = 1;; ++k) {
      const std::uint64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::uint64_t g2 = g1 + k;  // k(3k+1)/2
      if (k % 2 == 1) {
        acc += p[m - g1];
        if (g2 <= m) acc += p[m - g2];
      } else {
        acc -= p[m - g1];
        if (g2 <= m) acc -= p[m - g2];
      }
    }
    p[m] = std::move(acc);
  }
  std::vector<BigCount> entries;
  entries.reserve(p.size());
  for (auto& v : p) entries.emplace_back(std::move(v));
  return PartitionTable(std::move(entries));
}

inline BigCount partition_exact(std::uint64_t n, std::uint64_t cap = kDefaultTableCap) {
  return partition_table(n, cap)[n];
}

namespace detail {
inline std::uint64_t count_with_largest_part_at_most(std::uint64_t n, std::uint64_t largest) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t part = std::min(n, largest); part >= 1; --part) {
    total += count_with_largest_part_at_most(n - part, part);
  }
  return total;
}
}  // namespace detail

/// Counts partitions by walking every non-increasing sequence explicitly.
/// Exponential in n; only meant as an independent check for small n.
inline BigCount partition_bruteforce(std::uint64_t n) {
  if (n > kBruteforceLimit) {
    throw InputTooLargeError("partition_bruteforce: n > " + std::to_string(kBruteforceLimit));
  }
  return BigCount(detail::count_with_largest_part_at_most(n, n));
}

}  // namespace partasym
