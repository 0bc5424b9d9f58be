#include "bicyclic/enumeration.hpp"

#include <utility>

namespace bicyclic {

Truncation::Truncation(Int bound, Family family) : bound_(bound), family_(std::move(family)) {
  if (bound < 0) throw DomainError("truncation bound must be nonnegative");
}

std::size_t Truncation::size() const noexcept {
  const auto side = static_cast<std::size_t>(bound_ + 1);
  return side * side * family_.size();
}

bool Truncation::contains(const Elem& x) const noexcept {
  return x.i <= bound_ && x.j <= bound_ && family_.contains(x.set);
}

std::vector<Elem> Truncation::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (InductiveSet s : family_.sets()) {
    for (Int i = 0; i <= bound_; ++i) {
      for (Int j = 0; j <= bound_; ++j) out.emplace_back(i, j, s);
    }
  }
  return out;
}

std::vector<InjEndo> enumerate_endos(Int kmax) {
  if (kmax < 1) throw DomainError("kmax must be at least 1");
  std::vector<InjEndo> out;
  out.reserve(static_cast<std::size_t>(kmax * kmax));
  for (Int k = 1; k <= kmax; ++k) {
    for (Int p = 0; p < k; ++p) out.push_back(InjEndo::alpha(k, p));
  }
  for (Int k = 2; k <= kmax; ++k) {
    for (Int p = 1; p < k; ++p) out.push_back(InjEndo::beta(k, p));
  }
  return out;
}

}  // namespace bicyclic
