#pragma once

#include <compare>
#include <string>

#include "bicyclic/inductive_set.hpp"

namespace bicyclic {

/// An element (i, j, [b)) of the bicyclic extension. The set component is
/// stored directly rather than as an index, so the bare product below is
/// defined on all of B_omega x {nonempty inductive sets}; membership in a
/// particular family is checked by BicyclicExtension.
struct Elem {
  Int i = 0;
  Int j = 0;
  InductiveSet set;

  constexpr Elem() = default;
  constexpr Elem(Int i_, Int j_, InductiveSet s) : i(i_), j(j_), set(s) {
    if (i_ < 0 || j_ < 0) throw DomainError("element coordinates must be nonnegative");
  }
  constexpr Elem(Int i_, Int j_, Int base) : Elem(i_, j_, InductiveSet(base)) {}

  constexpr Int base() const noexcept { return set.base(); }

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

std::string to_string(const Elem& x);

/// A pair of the plain bicyclic monoid on omega x omega.
struct BicyclicPair {
  Int i = 0;
  Int j = 0;
  friend constexpr auto operator<=>(const BicyclicPair&, const BicyclicPair&) = default;
};

/// Two-case bicyclic product.
inline BicyclicPair mul_bicyclic(BicyclicPair a, BicyclicPair b) {
  if (a.j <= b.i) return {checked_add(checked_sub(a.i, a.j), b.i), b.j};
  return {a.i, checked_add(checked_sub(a.j, b.i), b.j)};
}

// The two branches of the product. Each is the correct product under its
// own guard (x.j <= y.i and x.j >= y.i respectively); they coincide when
// x.j == y.i.

inline Elem product_when_le(const Elem& x, const Elem& y) {
  return Elem(checked_add(checked_sub(x.i, x.j), y.i), y.j,
              intersect_shifted(x.set, checked_sub(x.j, y.i), y.set));
}

inline Elem product_when_ge(const Elem& x, const Elem& y) {
  return Elem(x.i, checked_add(checked_sub(x.j, y.i), y.j),
              intersect_shifted(y.set, checked_sub(y.i, x.j), x.set));
}

/// Product of two elements, without family membership checks.
inline Elem product(const Elem& x, const Elem& y) {
  return x.j <= y.i ? product_when_le(x, y) : product_when_ge(x, y);
}

inline Elem inverse(const Elem& x) { return Elem(x.j, x.i, x.set); }

}  // namespace bicyclic
