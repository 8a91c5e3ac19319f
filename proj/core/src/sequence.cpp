#include "steinhaus/sequence.hpp"

#include <stdexcept>

namespace steinhaus {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

BinarySequence parse_hex(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("hex sequence needs an explicit bit length, e.g. 0xC:4");
  const std::string digits = text.substr(2, colon - 2);
  const std::string len_str = text.substr(colon + 1);
  if (digits.empty() || len_str.empty())
    throw std::invalid_argument("malformed hex sequence: " + text);

  std::size_t len = 0;
  for (char c : len_str) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed bit length in: " + text);
    len = len * 10 + static_cast<std::size_t>(c - '0');
    if (len > (1u << 20)) throw std::invalid_argument("bit length out of range");
  }
  if (digits.size() * 4 < len)
    throw std::invalid_argument("hex value shorter than stated bit length");

  // digits encode bits a_1 .. a_len, a_1 most significant
  BinarySequence seq(len);
  std::size_t bitpos = digits.size() * 4;  // one past the msb
  for (char c : digits) {
    const int d = hex_digit(c);
    if (d < 0) throw std::invalid_argument("invalid hex digit in: " + text);
    for (int b = 3; b >= 0; --b) {
      --bitpos;
      const int bit = (d >> b) & 1;
      if (bitpos >= len) {
        if (bit) throw std::invalid_argument("hex value wider than stated bit length");
      } else {
        seq.set_bit(len - 1 - bitpos, bit);
      }
    }
  }
  return seq;
}

}  // namespace

BinarySequence BinarySequence::parse(const std::string& text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) return parse_hex(text);
  BinarySequence seq(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    if (text[t] == '1')
      seq.set_bit(t, 1);
    else if (text[t] != '0')
      throw std::invalid_argument("sequence must be over {0,1}: " + text);
  }
  return seq;
}

}  // namespace steinhaus
