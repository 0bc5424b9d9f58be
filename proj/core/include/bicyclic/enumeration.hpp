#pragma once

#include <cstddef>
#include <vector>

#include "bicyclic/endomorphism.hpp"
#include "bicyclic/family.hpp"

namespace bicyclic {

/// The finite slice {(i, j, F) : 0 <= i, j <= bound, F in family}.
class Truncation {
 public:
  Truncation(Int bound, Family family = Family::canonical());

  Int bound() const noexcept { return bound_; }
  const Family& family() const noexcept { return family_; }
  std::size_t size() const noexcept;
  bool contains(const Elem& x) const noexcept;

  /// Ordered by set index, then i, then j.
  std::vector<Elem> elements() const;

 private:
  Int bound_;
  Family family_;
};

/// All alpha_{k,p} for 1 <= k <= kmax, then all beta_{k,p} for
/// 2 <= k <= kmax, each ordered by (k, p). There are kmax^2 of them.
std::vector<InjEndo> enumerate_endos(Int kmax);

}  // namespace bicyclic
