#include "sturmlab/words/finite_word.hpp"

#include <bit>
#include <stdexcept>

namespace sturmlab::words {

FiniteWord::FiniteWord(std::size_t length, std::int64_t origin)
    : bits_((length + 63) / 64, 0), length_(length), origin_(origin) {}

FiniteWord FiniteWord::from_string(std::string_view s, std::int64_t origin) {
  FiniteWord w(s.size(), origin);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      w.set(i, 1);
    } else if (s[i] != '0') {
      throw std::invalid_argument("word must consist of '0' and '1', got '" + std::string(s) + "'");
    }
  }
  return w;
}

void FiniteWord::push_back(int v) {
  if ((length_ & 63) == 0) bits_.push_back(0);
  ++length_;
  set(length_ - 1, v);
}

std::size_t FiniteWord::popcount() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::uint64_t FiniteWord::extract(std::size_t i, std::size_t len) const {
  if (len == 0) return 0;
  const std::size_t w = i >> 6;
  const unsigned b = static_cast<unsigned>(i & 63);
  std::uint64_t v = bits_[w] >> b;
  if (b != 0 && w + 1 < bits_.size()) v |= bits_[w + 1] << (64 - b);
  return len == 64 ? v : (v & ((std::uint64_t{1} << len) - 1));
}

FiniteWord FiniteWord::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > length_) throw std::out_of_range("FiniteWord::slice out of range");
  FiniteWord out(len, origin_ + static_cast<std::int64_t>(pos));
  for (std::size_t i = 0; i < len; i += 64) {
    const std::size_t n = len - i < 64 ? len - i : 64;
    out.bits_[i >> 6] = extract(pos + i, n);
  }
  return out;
}

FiniteWord FiniteWord::reversed() const {
  FiniteWord out(length_, origin_);
  for (std::size_t i = 0; i < length_; ++i) out.set(length_ - 1 - i, (*this)[i]);
  return out;
}

std::string FiniteWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

}  // namespace sturmlab::words
