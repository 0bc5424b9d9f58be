#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicyclic/inductive_set.hpp"

namespace bicyclic {

/// A finite omega-closed family of nonempty inductive subsets of omega.
///
/// Members are kept sorted by base with no duplicates. Construction rejects
/// families that are empty, miss [0), or are not closed under
/// F1 ∩ (-n + F2). For inductive sets that intersection has base
/// max(b1, b2 - n) (clamped at 0), so closure is checked exhaustively for
/// n in 0..max_base; beyond that every shift clamps to [0).
class Family {
 public:
  explicit Family(std::vector<Int> bases);

  /// {[0), [1)}.
  static const Family& canonical();

  std::size_t size() const noexcept { return sets_.size(); }
  InductiveSet at(std::size_t index) const { return sets_.at(index); }
  std::span<const InductiveSet> sets() const noexcept { return sets_; }

  std::optional<std::size_t> index_of(InductiveSet s) const noexcept;
  bool contains(InductiveSet s) const noexcept { return index_of(s).has_value(); }
  Int max_base() const noexcept { return sets_.back().base(); }
  bool is_canonical() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::vector<InductiveSet> sets_;
};

}  // namespace bicyclic
