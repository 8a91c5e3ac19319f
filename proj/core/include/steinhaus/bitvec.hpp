#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace steinhaus {

// Fixed-length bit vector over GF(2). Bits are packed little-endian into
// 64-bit words; bits at positions >= size() are kept zero at all times so
// whole-word operations (xor, popcount, compare) need no masking.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), w_(word_count(len), 0) {}

  static BitVec unit(std::size_t len, std::size_t i) {
    BitVec v(len);
    v.set(i, 1);
    return v;
  }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  int get(std::size_t i) const {
    return static_cast<int>((w_[i >> 6] >> (i & 63)) & 1u);
  }

  void set(std::size_t i, int bit) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (bit)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }

  // Parity of the AND with another vector of the same length; this is the
  // GF(2) dot product.
  int dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  // v[t] ^ v[t+1] for t < size()-1; the Pascal-rule step that produces the
  // next row of a Steinhaus triangle. Result is one bit shorter.
  BitVec adjacent_xor() const {
    BitVec r(len_ == 0 ? 0 : len_ - 1);
    for (std::size_t k = 0; k < r.w_.size(); ++k) {
      std::uint64_t hi = (k + 1 < w_.size()) ? w_[k + 1] : 0;
      r.w_[k] = w_[k] ^ ((w_[k] >> 1) | (hi << 63));
    }
    r.clear_tail();
    return r;
  }

  // Calls fn(index) for every set bit, in ascending index order.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        fn((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.len_ == b.len_ && a.w_ == b.w_;
  }

  friend bool operator<(const BitVec& a, const BitVec& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.w_ < b.w_;
  }

 private:
  static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

  void clear_tail() {
    if (len_ & 63) w_.back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace steinhaus
