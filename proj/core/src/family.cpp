#include "bicyclic/family.hpp"

#include <algorithm>

#include "bicyclic/errors.hpp"

namespace bicyclic {

Family::Family(std::vector<Int> bases) {
  if (bases.empty()) throw FamilyError("family must be nonempty");
  std::sort(bases.begin(), bases.end());
  if (std::adjacent_find(bases.begin(), bases.end()) != bases.end()) {
    throw FamilyError("family bases must be distinct");
  }
  if (bases.front() < 0) throw FamilyError("family bases must be nonnegative");
  if (bases.front() != 0) throw FamilyError("family must contain [0)");
  sets_.reserve(bases.size());
  for (Int b : bases) sets_.emplace_back(b);

  for (InductiveSet f1 : sets_) {
    for (InductiveSet f2 : sets_) {
      for (Int n = 0; n <= max_base(); ++n) {
        InductiveSet meet(std::max(f1.base(), std::max<Int>(f2.base() - n, 0)));
        if (!contains(meet)) {
          throw FamilyError("family is not omega-closed: [" + std::to_string(f1.base()) +
                            ") ∩ (-" + std::to_string(n) + " + [" + std::to_string(f2.base()) +
                            ")) = [" + std::to_string(meet.base()) + ") is missing");
        }
      }
    }
  }
}

const Family& Family::canonical() {
  static const Family instance({0, 1});
  return instance;
}

std::optional<std::size_t> Family::index_of(InductiveSet s) const noexcept {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

bool Family::is_canonical() const noexcept {
  return sets_.size() == 2 && sets_[0].base() == 0 && sets_[1].base() == 1;
}

std::string Family::to_string() const {
  std::string out = "{";
  for (std::size_t n = 0; n < sets_.size(); ++n) {
    if (n) out += ",";
    out += "[" + std::to_string(sets_[n].base()) + ")";
  }
  return out + "}";
}

}  // namespace bicyclic
