#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace circlab {

// 128-bit unsigned counter with overflow-checked arithmetic. Subgraph counts
// overflow 64 bits well inside the supported order range, so every count in
// the library flows through this type.
class Count {
 public:
  constexpr Count() : v_(0) {}
  constexpr Count(unsigned long long v) : v_(v) {}

  static Count raw(unsigned __int128 v) {
    Count c;
    c.v_ = v;
    return c;
  }

  unsigned __int128 value() const { return v_; }

  bool fits_u64() const { return v_ <= ~std::uint64_t{0}; }
  std::uint64_t as_u64() const {
    if (!fits_u64()) throw std::overflow_error("count exceeds 64 bits");
    return static_cast<std::uint64_t>(v_);
  }

  Count& operator+=(const Count& o) {
    if (__builtin_add_overflow(v_, o.v_, &v_))
      throw std::overflow_error("count overflow (add)");
    return *this;
  }
  Count& operator*=(const Count& o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_))
      throw std::overflow_error("count overflow (mul)");
    return *this;
  }
  Count& operator-=(const Count& o) {
    if (o.v_ > v_) throw std::overflow_error("count underflow (sub)");
    v_ -= o.v_;
    return *this;
  }

  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }
  friend Count operator-(Count a, const Count& b) { return a -= b; }

  friend bool operator==(const Count& a, const Count& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Count& a, const Count& b) { return a.v_ != b.v_; }
  friend bool operator<(const Count& a, const Count& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Count& a, const Count& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Count& a, const Count& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Count& a, const Count& b) { return a.v_ >= b.v_; }

  std::string str() const {
    if (v_ == 0) return "0";
    std::string s;
    unsigned __int128 v = v_;
    while (v) {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
  }

 private:
  unsigned __int128 v_;
};

// C(n, k) with checked arithmetic. Negative arguments and k > n give 0.
inline Count binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Count{0};
  if (k > n - k) k = n - k;
  Count r{1};
  for (long long i = 1; i <= k; ++i) {
    r *= Count{static_cast<unsigned long long>(n - k + i)};
    // Division is exact at every step: r holds C(n-k+i, i) * i! / i!.
    r = Count::raw(r.value() / static_cast<unsigned __int128>(i));
  }
  return r;
}

}  // namespace circlab
