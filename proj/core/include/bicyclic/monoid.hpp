#pragma once

#include "bicyclic/element.hpp"
#include "bicyclic/family.hpp"

namespace bicyclic {

/// B_omega^F over a fixed family. All operations validate that operands
/// belong to the family (DomainError) and that products resolve to a member
/// (FamilyError, which means the family itself is broken).
class BicyclicExtension {
 public:
  explicit BicyclicExtension(Family family = Family::canonical());

  const Family& family() const noexcept { return family_; }

  /// (0, 0, [0)).
  Elem identity() const noexcept { return Elem(0, 0, InductiveSet(0)); }

  bool contains(const Elem& x) const noexcept { return family_.contains(x.set); }
  void require(const Elem& x) const;

  Elem mul(const Elem& x, const Elem& y) const;
  Elem inverse(const Elem& x) const;

  /// x * x == x, evaluated through mul.
  bool is_idempotent(const Elem& x) const;

  /// s <= t in the natural partial order, i.e. s == t * (s^-1 * s).
  bool leq_natural(const Elem& s, const Elem& t) const;

 private:
  Family family_;
};

}  // namespace bicyclic
