#pragma once
// Checked 64-bit integer arithmetic. All algebra in this library runs on
// int64 with mandatory overflow detection: a wrapped product in a basis
// change would silently corrupt every downstream invariant, so any overflow
// throws instead. Workloads are k <= 8 with small entries; 64 bits is ample
// headroom, the checks are the safety net for adversarial inputs.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace su2b {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Arithmetic left the representable range.
struct OverflowError : Error {
  OverflowError() : Error("integer overflow in exact arithmetic") {}
};
// An operation's stated precondition was violated by the caller.
struct PreconditionError : Error {
  using Error::Error;
};
// Malformed user input (files, flags); maps to CLI exit code 2.
struct InputError : Error {
  using Error::Error;
};
// A configured resource limit was exceeded; maps to CLI exit code 3.
struct ResourceLimitError : Error {
  using Error::Error;
};

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

// Canonical representative of a mod m in [0, m); m > 0.
inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// Balanced representative of a mod m in (-m/2, m/2].
inline i64 mod_balanced(i64 a, i64 m) {
  i64 r = mod_floor(a, m);
  return r > m / 2 ? r - m : r;
}

// Binomial C(a,2) = a(a-1)/2 extended to every integer, so C(-1,2) = 1.
// The sign convention is forced by (-i4) o nu = nu + nu'.
inline i64 choose2(i64 a) {
  i64 p = checked_mul(a, checked_sub(a, 1));
  return p / 2;
}

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

namespace detail {
// 128-bit checked intermediates for the places where exact 64-bit values
// provably cancel but the partial sums do not fit (matrix products, Bareiss
// minors, Smith elimination).
using i128 = __int128;

inline i128 abs128(i128 a) { return a < 0 ? -a : a; }

inline i128 add128(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline i128 mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline i64 narrow128(i128 a) {
  if (a > i128(INT64_MAX) || a < i128(INT64_MIN)) throw OverflowError{};
  return i64(a);
}
}  // namespace detail

}  // namespace su2b
