#include "cis/count.hpp"

#include <algorithm>
#include <ostream>

#include "cis/error.hpp"

namespace cis {

std::uint64_t Count::to_u64() const {
  if (value_ > Rep(UINT64_MAX)) throw Error(ErrorKind::Overflow, "count exceeds 64 bits");
  return static_cast<std::uint64_t>(value_);
}

std::string Count::to_string() const {
  if (value_ == 0) return "0";
  std::string out;
  for (Rep v = value_; v > 0; v /= 10) out.push_back(static_cast<char>('0' + int(v % 10)));
  std::reverse(out.begin(), out.end());
  return out;
}

Count& Count::operator+=(Count o) {
  if (__builtin_add_overflow(value_, o.value_, &value_)) {
    throw Error(ErrorKind::Overflow, "count addition overflow");
  }
  return *this;
}

Count& Count::operator-=(Count o) {
  if (o.value_ > value_) throw Error(ErrorKind::Overflow, "count subtraction below zero");
  value_ -= o.value_;
  return *this;
}

Count& Count::operator*=(Count o) {
  if (__builtin_mul_overflow(value_, o.value_, &value_)) {
    throw Error(ErrorKind::Overflow, "count multiplication overflow");
  }
  return *this;
}

Count pow2(int k) {
  if (k < 0 || k > 127) throw Error(ErrorKind::Overflow, "2^" + std::to_string(k) + " out of range");
  return Count::from_rep(Count::Rep{1} << k);
}

Count binom2(std::int64_t n) {
  if (n < 2) return Count{};
  return Count::from_rep((Count::Rep(n) * Count::Rep(n - 1)) / 2);
}

Count power(Count base, int exp) {
  Count out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::ostream& operator<<(std::ostream& os, Count c) { return os << c.to_string(); }

}  // namespace cis
