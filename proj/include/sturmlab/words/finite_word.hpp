#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sturmlab::words {

/// A packed 0/1 string anchored at `origin` in Z. Bits are stored LSB-first in
/// 64-bit words; bits past size() are always zero.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::size_t length, std::int64_t origin = 0);

  /// Parses an ASCII 0/1 string. Throws std::invalid_argument on other characters.
  static FiniteWord from_string(std::string_view s, std::int64_t origin = 0);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::int64_t origin() const { return origin_; }
  void set_origin(std::int64_t o) { origin_ = o; }
  std::int64_t last() const { return origin_ + static_cast<std::int64_t>(length_) - 1; }

  int operator[](std::size_t i) const { return static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1u); }
  /// Symbol at absolute position n in [origin, last].
  int at(std::int64_t n) const { return (*this)[static_cast<std::size_t>(n - origin_)]; }
  void set(std::size_t i, int v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) bits_[i >> 6] |= m; else bits_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { bits_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void push_back(int v);

  const std::vector<std::uint64_t>& bits() const { return bits_; }

  std::size_t popcount() const;
  /// len <= 64 bits starting at i, bit j of the result = symbol i + j.
  std::uint64_t extract(std::size_t i, std::size_t len) const;
  FiniteWord slice(std::size_t pos, std::size_t len) const;
  FiniteWord reversed() const;

  std::string to_string() const;

  friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
    return a.length_ == b.length_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const FiniteWord& a, const FiniteWord& b) {
    return a.to_string() < b.to_string();
  }

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t length_ = 0;
  std::int64_t origin_ = 0;
};

}  // namespace sturmlab::words
