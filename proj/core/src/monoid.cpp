#include "bicyclic/monoid.hpp"

#include <utility>

namespace bicyclic {

std::string to_string(const Elem& x) {
  return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + "," +
         std::to_string(x.base()) + ")";
}

BicyclicExtension::BicyclicExtension(Family family) : family_(std::move(family)) {}

void BicyclicExtension::require(const Elem& x) const {
  if (!contains(x)) {
    throw DomainError("element " + to_string(x) + " is not over family " + family_.to_string());
  }
}

Elem BicyclicExtension::mul(const Elem& x, const Elem& y) const {
  require(x);
  require(y);
  Elem r = product(x, y);
  if (!contains(r)) {
    throw FamilyError("product " + to_string(r) + " leaves family " + family_.to_string());
  }
  return r;
}

Elem BicyclicExtension::inverse(const Elem& x) const {
  require(x);
  return bicyclic::inverse(x);
}

bool BicyclicExtension::is_idempotent(const Elem& x) const { return mul(x, x) == x; }

bool BicyclicExtension::leq_natural(const Elem& s, const Elem& t) const {
  return mul(t, mul(inverse(s), s)) == s;
}

}  // namespace bicyclic
