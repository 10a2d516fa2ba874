#include "circlab/graph6.hpp"

#include <stdexcept>
#include <string>

namespace circlab {

namespace {

[[noreturn]] void fail(const std::string& what, size_t offset) {
  throw std::invalid_argument("graph6: " + what + " at byte " + std::to_string(offset));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) fail("empty string", 0);
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) fail("truncated input", pos);
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) fail("byte outside 63..126", pos);
    ++pos;
    return c - 63;
  };
  int n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    ++pos;
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  if (n > kWordBits) fail("order exceeds vertex cap", 0);
  Graph g(n);
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if ((acc >> 5) & 1) g.add_edge(row, col);
      acc = (acc << 1) & 63;
      --nbits;
    }
  }
  if (acc != 0) fail("nonzero padding bits beyond triangle", pos - 1);
  if (pos != s.size()) fail("trailing bytes", pos);
  return g;
}

}  // namespace circlab
