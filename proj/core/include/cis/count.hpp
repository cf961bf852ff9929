#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cis {

// Nonnegative CIS count. Backed by 128-bit arithmetic: every count of a graph
// of order <= 32 is below 2^32, and the closed-form bounds stay far below
// 2^127. Arithmetic that would leave [0, 2^128) throws Error(Overflow).
class Count {
 public:
  __extension__ using Rep = unsigned __int128;

  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
  static constexpr Count from_rep(Rep v) {
    Count c;
    c.value_ = v;
    return c;
  }

  constexpr Rep rep() const { return value_; }
  // Throws Overflow when the value does not fit.
  std::uint64_t to_u64() const;
  std::string to_string() const;

  Count& operator+=(Count o);
  Count& operator-=(Count o);
  Count& operator*=(Count o);
  friend Count operator+(Count a, Count b) { return a += b; }
  friend Count operator-(Count a, Count b) { return a -= b; }
  friend Count operator*(Count a, Count b) { return a *= b; }

  friend constexpr bool operator==(Count a, Count b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(Count a, Count b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : a.value_ > b.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  Rep value_ = 0;
};

// 2^k, checked.
Count pow2(int k);
Count binom2(std::int64_t n);
Count power(Count base, int exp);

std::ostream& operator<<(std::ostream& os, Count c);

}  // namespace cis
