#pragma once

// Small cdga's shared by the unit tests.

#include "pathring/cdga.hpp"

namespace pathring::testing {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

/// Q·1
inline CDGA trivial_algebra() { return CDGA::Builder().basis(0, {"1"}).unit("1").build(); }

/// Q ⊕ Q{w0, w1}: closed degree-1 generators with zero products; the de Rham
/// model of P^1 minus {0, 1, ∞}.
inline CDGA punctured_line_model() {
  return CDGA::Builder().basis(0, {"1"}).basis(1, {"w0", "w1"}).unit("1").build();
}

/// Q ⊕ Q e with |e| = 2, e·e = 0.
inline CDGA sphere_model() { return CDGA::Builder().basis(0, {"1"}).basis(2, {"e"}).unit("1").build(); }

/// Degree 0 spanned by 1 and an idempotent e; models two points.
inline CDGA two_point_algebra() {
  return CDGA::Builder().basis(0, {"1", "e"}).unit("1").product("e", "e", {{"e", q(1)}}).build();
}

/// Degree 0: 1, x; degree 1: w, v with dx = v, all other products zero.
/// H^1 is spanned by w; v is exact.
inline CDGA exact_direction_model() {
  return CDGA::Builder()
      .basis(0, {"1", "x"})
      .basis(1, {"w", "v"})
      .unit("1")
      .d("x", {{"v", q(1)}})
      .build();
}

/// Q[x]/(x^3) ⊗ Λ(y) / (x^2 y), dx = y: acyclic, with nilpotent degree 0.
inline CDGA nilpotent_acyclic() {
  return CDGA::Builder()
      .basis(0, {"1", "x", "xx"})
      .basis(1, {"y", "xy"})
      .unit("1")
      .d("x", {{"y", q(1)}})
      .d("xx", {{"xy", q(2)}})
      .product("x", "x", {{"xx", q(1)}})
      .product("x", "y", {{"xy", q(1)}})
      .build();
}

/// Exterior algebra on two closed degree-1 generators a, b with ab = t.
inline CDGA torus_model() {
  return CDGA::Builder()
      .basis(0, {"1"})
      .basis(1, {"a", "b"})
      .basis(2, {"t"})
      .unit("1")
      .product("a", "b", {{"t", q(1)}})
      .build();
}

}  // namespace pathring::testing
