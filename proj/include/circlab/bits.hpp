#pragma once

#include <cstdint>

namespace circlab {

#if defined(CIRCLAB_WIDE_VERTEX_SETS)
using vword = unsigned __int128;
#else
using vword = std::uint64_t;
#endif

constexpr int kWordBits = static_cast<int>(sizeof(vword) * 8);

constexpr vword vbit(int i) { return vword{1} << i; }

// Mask of the n lowest bits. n may equal kWordBits.
constexpr vword low_mask(int n) {
  return n >= kWordBits ? ~vword{0} : (vword{1} << n) - 1;
}

inline int popcount(vword w) {
#if defined(CIRCLAB_WIDE_VERTEX_SETS)
  return __builtin_popcountll(static_cast<std::uint64_t>(w)) +
         __builtin_popcountll(static_cast<std::uint64_t>(w >> 64));
#else
  return __builtin_popcountll(w);
#endif
}

// Index of the least significant set bit. w must be nonzero.
inline int lowest_bit(vword w) {
#if defined(CIRCLAB_WIDE_VERTEX_SETS)
  std::uint64_t lo = static_cast<std::uint64_t>(w);
  if (lo) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(w >> 64));
#else
  return __builtin_ctzll(w);
#endif
}

template <typename F>
inline void for_each_bit(vword w, F&& f) {
  while (w) {
    int i = lowest_bit(w);
    w &= w - 1;
    f(i);
  }
}

}  // namespace circlab
