#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicyclic/endomorphism.hpp"

namespace bicyclic {

enum class GreenRelation { R, L, H, D, J };

const char* to_string(GreenRelation r) noexcept;
std::optional<GreenRelation> parse_green_relation(std::string_view s) noexcept;
inline constexpr GreenRelation kAllGreenRelations[] = {GreenRelation::R, GreenRelation::L,
                                                       GreenRelation::H, GreenRelation::D,
                                                       GreenRelation::J};

struct GreenQuery {
  GreenRelation relation = GreenRelation::R;
  InjEndo left = InjEndo::identity();
  InjEndo right = InjEndo::identity();
  Int kmax = 1;
};

/// A factor from S^1: either an endomorphism or the adjoined unit.
class Factor {
 public:
  static Factor unit() { return Factor(); }
  static Factor of(const InjEndo& e) { return Factor(e); }

  bool is_unit() const noexcept { return !endo_.has_value(); }
  const InjEndo& endo() const { return endo_.value(); }

  friend bool operator==(const Factor&, const Factor&) = default;

 private:
  Factor() = default;
  explicit Factor(const InjEndo& e) : endo_(e) {}
  std::optional<InjEndo> endo_;
};

std::string to_string(const Factor& f);

/// x * a in S^1 (x then a, matching compose).
InjEndo times(const Factor& x, const InjEndo& a);
InjEndo times(const InjEndo& a, const Factor& x);

struct WitnessSearchResult {
  bool related = false;
  std::vector<Factor> witnesses;
  Int exhausted_bound = 0;
};

/// Closed-form answer: every Green's relation on this monoid is equality.
bool green_symbolic(const GreenQuery& q);

/// Decides the relation from its divisibility definition, searching S^1
/// factors with k <= kmax. Equal arguments are related by the unit; for
/// unequal arguments a negative answer is a refutation at that bound.
///
/// Witnesses: R gives [x, y] with a = b x, b = a y; L gives [x, y] with
/// a = x b, b = y a; H concatenates R's and L's; D gives [c, ...] with
/// a L c and c R b; J gives [x, y, u, v] with a = x b y, b = u a v.
WitnessSearchResult green_bounded_search(const GreenQuery& q);

/// a (first o second) b: exists c in the bounded candidate set (endos with
/// k <= kmax, plus a and b) with a first c and c second b. `first` and
/// `second` must be R or L.
bool related_by_composite(GreenRelation first, GreenRelation second, const InjEndo& a,
                          const InjEndo& b, Int kmax);

/// The S^1 factors with k <= kmax: the unit followed by enumerate_endos.
std::vector<Factor> candidate_factors(Int kmax);

}  // namespace bicyclic
