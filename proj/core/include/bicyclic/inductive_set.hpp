#pragma once

#include <algorithm>
#include <compare>

#include "bicyclic/checked_int.hpp"

namespace bicyclic {

/// A nonempty inductive subset [n) = {x in omega : x >= n}, stored by its
/// base point n. Every nonempty inductive subset of omega has this form.
class InductiveSet {
 public:
  constexpr InductiveSet() = default;
  constexpr explicit InductiveSet(Int base) : base_(base) {
    if (base < 0) throw DomainError("inductive set base must be nonnegative");
  }

  constexpr Int base() const noexcept { return base_; }
  constexpr bool contains(Int x) const noexcept { return x >= base_; }

  friend constexpr auto operator<=>(InductiveSet, InductiveSet) = default;

 private:
  Int base_ = 0;
};

/// (d + a) ∩ b for inductive a, b and any integer shift d. The shifted set
/// may start below zero; intersecting with b clamps it back into omega.
inline InductiveSet intersect_shifted(InductiveSet a, Int d, InductiveSet b) {
  return InductiveSet(std::max(checked_add(a.base(), d), b.base()));
}

}  // namespace bicyclic
