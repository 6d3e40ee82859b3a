#pragma once
#include "core/intutil.hpp"

namespace cyclact {

// Exact rational on __int128. Magnitudes stay tiny in this code base
// (small basis sizes, entries of symplectic matrices of finite order);
// denominators are normalized at every operation.
struct Rat {
  __int128 num = 0, den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(__int128 n, __int128 d) : num(n), den(d) { norm(); }

  static __int128 g128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
  void norm() {
    if (den == 0) fail("Arithmetic", "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    __int128 g = g128(num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  bool zero() const { return num == 0; }
  bool integral() const { return den == 1; }
  i64 to_i64() const {
    if (den != 1) fail("Arithmetic", "non-integer rational");
    if (num > INT64_MAX || num < INT64_MIN) fail("Overflow", "rational too large");
    return (i64)num;
  }
  Rat operator+(const Rat &o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat &o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat &o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(const Rat &o) const {
    if (o.num == 0) fail("Arithmetic", "division by zero");
    return Rat(num * o.den, den * o.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  bool operator==(const Rat &o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat &o) const { return !(*this == o); }
};

} // namespace cyclact
