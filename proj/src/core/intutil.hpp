#pragma once
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclact {

using i64 = long long;

class Error : public std::runtime_error {
public:
  Error(std::string name, std::string msg)
      : std::runtime_error(msg), name_(std::move(name)) {}
  const std::string &name() const { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void fail(const std::string &name, const std::string &msg) {
  throw Error(name, msg);
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail("Overflow", "integer overflow in multiply");
  return r;
}

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail("Overflow", "integer overflow in add");
  return r;
}

inline i64 mod_norm(i64 a, i64 m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

// extended gcd: returns g, sets x,y with a*x + b*y = g
inline i64 egcd(i64 a, i64 b, i64 &x, i64 &y) {
  if (b == 0) { x = (a >= 0) ? 1 : -1; y = 0; return a >= 0 ? a : -a; }
  i64 x1, y1;
  i64 g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline i64 mod_inverse(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 x, y;
  a = mod_norm(a, m);
  i64 g = egcd(a, m, x, y);
  if (g != 1) fail("NotInvertible", "residue not invertible");
  return mod_norm(x, m);
}

} // namespace cyclact
