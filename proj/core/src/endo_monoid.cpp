#include "bicyclic/endo_monoid.hpp"

#include "bicyclic/enumeration.hpp"

namespace bicyclic {

namespace {

void require_kmax_at_least_two(Int kmax) {
  if (kmax < 2) throw DomainError("kmax must be at least 2");
}

}  // namespace

std::vector<InjEndo> find_idempotents(Int kmax) {
  std::vector<InjEndo> out;
  for (const InjEndo& e : enumerate_endos(kmax)) {
    if (compose(e, e) == e) out.push_back(e);
  }
  return out;
}

bool check_cancellative_S_alpha(Int kmax) {
  require_kmax_at_least_two(kmax);
  std::vector<InjEndo> alphas;
  for (const InjEndo& e : enumerate_endos(kmax)) {
    if (is_in_S_alpha(e)) alphas.push_back(e);
  }
  for (const InjEndo& a : alphas) {
    for (const InjEndo& b : alphas) {
      for (const InjEndo& c : alphas) {
        if (b == c) continue;
        if (compose(a, b) == compose(a, c)) return false;
        if (compose(b, a) == compose(c, a)) return false;
      }
    }
  }
  return true;
}

bool check_ideal_S_beta(Int kmax) {
  require_kmax_at_least_two(kmax);
  const auto all = enumerate_endos(kmax);
  for (const InjEndo& b : all) {
    if (!is_in_S_beta(b)) continue;
    for (const InjEndo& e : all) {
      if (!is_in_S_beta(compose(e, b)) || !is_in_S_beta(compose(b, e))) return false;
    }
  }
  return true;
}

}  // namespace bicyclic
