#include "planegraph/edge_set.hpp"

#include <stdexcept>

namespace planegraph {

std::string EdgeSet::to_hex(int bits) const {
  const int digits = bits <= 0 ? 1 : (bits + 3) / 4;
  std::string out(static_cast<std::size_t>(digits), '0');
  static constexpr char kHex[] = "0123456789abcdef";
  for (int d = 0; d < digits; ++d) {
    const int lo = 4 * d;
    unsigned nibble = 0;
    for (int b = 0; b < 4 && lo + b < kCapacity; ++b) nibble |= static_cast<unsigned>(test(lo + b)) << b;
    out[static_cast<std::size_t>(digits - 1 - d)] = kHex[nibble];
  }
  return out;
}

EdgeSet EdgeSet::from_hex(std::string_view hex) {
  if (hex.empty()) throw std::invalid_argument("empty edge-set hex string");
  EdgeSet e;
  const int digits = static_cast<int>(hex.size());
  for (int d = 0; d < digits; ++d) {
    const char c = hex[static_cast<std::size_t>(digits - 1 - d)];
    unsigned nibble = 0;
    if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
    else throw std::invalid_argument("bad hex digit in edge set");
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1U)) continue;
      if (4 * d + b >= kCapacity) throw std::invalid_argument("edge-set hex string too long");
      e.set(4 * d + b);
    }
  }
  return e;
}

}  // namespace planegraph
