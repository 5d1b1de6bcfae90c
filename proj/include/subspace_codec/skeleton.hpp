#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subspace_codec {

/// Binary vector of length n <= 64 marking pivot columns.  Position 0 is the
/// leftmost bit and the most significant one, so integer order on `mask()`
/// is lexicographic order on the bitstring.
class IdentifyingVector {
 public:
  static constexpr std::size_t kMaxLength = 64;

  IdentifyingVector() = default;

  IdentifyingVector(std::size_t length, std::uint64_t mask) : length_(length), mask_(mask) {
    if (length == 0 || length > kMaxLength) throw std::invalid_argument("identifying vector length out of range");
    if (length < 64 && (mask >> length) != 0) throw std::invalid_argument("mask wider than length");
  }

  static IdentifyingVector parse(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxLength) throw std::invalid_argument("identifying vector length out of range");
    std::uint64_t mask = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("identifying vector must be a bitstring");
      mask = (mask << 1) | std::uint64_t(c == '1');
    }
    return IdentifyingVector(bits.size(), mask);
  }

  static IdentifyingVector from_positions(std::size_t length, std::span<const std::size_t> ones) {
    std::uint64_t mask = 0;
    for (auto i : ones) {
      if (i >= length) throw std::invalid_argument("pivot position outside vector");
      mask |= std::uint64_t{1} << (length - 1 - i);
    }
    return IdentifyingVector(length, mask);
  }

  std::size_t length() const { return length_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(mask_)); }

  bool operator[](std::size_t i) const { return (mask_ >> (length_ - 1 - i)) & 1; }

  /// Positions of the ones, increasing.
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < length_; ++i)
      if ((*this)[i]) out.push_back(i);
    return out;
  }

  std::size_t first_one() const {
    if (mask_ == 0) throw std::invalid_argument("zero identifying vector");
    return length_ - static_cast<std::size_t>(std::bit_width(mask_));
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if ((*this)[i]) s[i] = '1';
    return s;
  }

  friend bool operator==(const IdentifyingVector&, const IdentifyingVector&) = default;
  friend std::strong_ordering operator<=>(const IdentifyingVector& a, const IdentifyingVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  std::size_t length_ = 0;
  std::uint64_t mask_ = 0;
};

inline std::size_t hamming_distance(const IdentifyingVector& a, const IdentifyingVector& b) {
  if (a.length() != b.length()) throw std::invalid_argument("hamming distance needs equal lengths");
  return static_cast<std::size_t>(std::popcount(a.mask() ^ b.mask()));
}

inline constexpr std::uint64_t kMaxScan = 50'000'000;

/// All weight-k vectors of length n in decreasing lexicographic order,
/// starting from 1^k 0^(n-k).  Throws std::length_error past kMaxScan vectors.
inline std::vector<IdentifyingVector> constant_weight_vectors(std::size_t n, std::size_t k) {
  if (n == 0 || n > IdentifyingVector::kMaxLength || k > n) throw std::invalid_argument("need 0 < k <= n <= 64");
  std::uint64_t count = 1;
  for (std::size_t i = 1; i <= std::min(k, n - k); ++i) {
    count = count * (n - std::min(k, n - k) + i) / i;
    if (count > kMaxScan) throw std::length_error("too many constant-weight vectors to scan");
  }
  std::vector<IdentifyingVector> out;
  out.reserve(count);
  if (k == 0) {
    out.emplace_back(n, 0);
    return out;
  }
  // Gosper's hack enumerates increasing masks; walk it and reverse.
  std::uint64_t v = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = (n == 64) ? 0 : (std::uint64_t{1} << n);
  while (true) {
    out.emplace_back(n, v);
    if (k == n) break;
    const std::uint64_t t = v | (v - 1);
    const std::uint64_t next = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v || (limit != 0 && next >= limit)) break;
    v = next;
  }
  return {out.rbegin(), out.rend()};
}

/// Greedy scan over the weight-k vectors in decreasing lexicographic order;
/// `accept(candidate, kept)` decides whether the candidate is kept.
template <class Accept>
std::vector<IdentifyingVector> lexicode_with_predicate(std::size_t n, std::size_t k, Accept&& accept) {
  std::vector<IdentifyingVector> kept;
  for (const auto& w : constant_weight_vectors(n, k))
    if (accept(w, std::span<const IdentifyingVector>(kept))) kept.push_back(w);
  return kept;
}

/// Constant-weight lexicode with minimum Hamming distance d.
inline std::vector<IdentifyingVector> constant_weight_lexicode(std::size_t n, std::size_t k, std::size_t d) {
  if (k == 0 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  return lexicode_with_predicate(n, k, [d](const IdentifyingVector& w, std::span<const IdentifyingVector> kept) {
    for (const auto& u : kept)
      if (hamming_distance(w, u) < d) return false;
    return true;
  });
}

}  // namespace subspace_codec
