#pragma once

#include <cstddef>
#include <string>

#include "steinhaus/bitvec.hpp"

namespace steinhaus {

// Generating sequence s = (a_1, ..., a_L) of a Steinhaus matrix of size L+1.
// The empty sequence is valid and generates the 1x1 zero matrix.
class BinarySequence {
 public:
  BinarySequence() = default;
  explicit BinarySequence(BitVec bits) : bits_(std::move(bits)) {}
  explicit BinarySequence(std::size_t len) : bits_(len) {}

  std::size_t size() const { return bits_.size(); }

  // 0-based access: bit(t) is a_{t+1}.
  int bit(std::size_t t) const { return bits_.get(t); }
  void set_bit(std::size_t t, int v) { bits_.set(t, v); }

  const BitVec& bits() const { return bits_; }

  // "1100" with a_1 first; also "0xC:4" (hex value, explicit bit length,
  // a_1 = most significant of the stated length). Throws std::invalid_argument.
  static BinarySequence parse(const std::string& text);

  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;
  friend bool operator<(const BinarySequence& a, const BinarySequence& b) {
    return a.bits_ < b.bits_;
  }

 private:
  BitVec bits_;
};

}  // namespace steinhaus
