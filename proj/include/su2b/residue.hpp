#pragma once
// Canonical residue classes for the ambient torsion groups Z/24{nu},
// Z/12{nu'}, Z/3{y}, Z/2, and the divisor-of-24 invariants sigma, lambda.

#include <compare>
#include <initializer_list>
#include <vector>

#include "checked.hpp"

namespace su2b {

template <int M>
class Residue {
  static_assert(M == 2 || M == 3 || M == 4 || M == 8 || M == 12 || M == 24,
                "modulus outside the groups this library uses");
  i64 v_ = 0;  // canonical, in [0, M)

 public:
  constexpr Residue() = default;
  Residue(i64 x) : v_(mod_floor(x, M)) {}  // NOLINT: implicit by design

  i64 value() const { return v_; }
  static constexpr int modulus() { return M; }

  Residue operator+(Residue o) const { return Residue(v_ + o.v_); }
  Residue operator-(Residue o) const { return Residue(v_ - o.v_); }
  Residue operator-() const { return Residue(-v_); }
  Residue operator*(Residue o) const { return Residue(v_ * o.v_); }
  Residue& operator+=(Residue o) { return *this = *this + o; }
  Residue& operator-=(Residue o) { return *this = *this - o; }
  Residue& operator*=(Residue o) { return *this = *this * o; }
  friend Residue operator*(i64 a, Residue r) { return Residue(mod_floor(a, M) * r.v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_odd() const { return v_ % 2 == 1; }

  auto operator<=>(const Residue&) const = default;
};

using R2 = Residue<2>;
using R3 = Residue<3>;
using R12 = Residue<12>;
using R24 = Residue<24>;

// A divisor of 24 regarded as a value of sigma or lambda. Internally one of
// {1,2,3,4,6,8,12,24}; 24 is the class of 0 in Z/24 and displays as 0.
class Div24 {
  i64 d_ = 24;

 public:
  constexpr Div24() = default;
  explicit Div24(i64 raw) : d_(gcd_i64(mod_floor(raw, 24), 24)) {
    if (d_ == 0) d_ = 24;
  }
  static Div24 from_divisor(i64 d) {
    if (d <= 0 || 24 % d != 0) throw PreconditionError("not a divisor of 24");
    Div24 r;
    r.d_ = d;
    return r;
  }

  i64 divisor() const { return d_; }              // in {1,...,24}
  i64 display() const { return d_ == 24 ? 0 : d_; }  // reported value
  bool is_even() const { return d_ % 2 == 0; }
  bool divides(Div24 o) const { return o.d_ % d_ == 0; }

  auto operator<=>(const Div24&) const = default;
};

// gcd of the listed stable classes and 24; empty list means the zero class,
// reported as 24 (displayed 0).
inline Div24 gcd_with_modulus(const std::vector<R24>& values) {
  i64 g = 24;
  for (const auto& v : values) g = gcd_i64(g, v.value());
  return Div24::from_divisor(g == 0 ? 24 : g);
}

}  // namespace su2b
