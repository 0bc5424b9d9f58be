#include "bicyclic/green.hpp"

#include "bicyclic/enumeration.hpp"

namespace bicyclic {

const char* to_string(GreenRelation r) noexcept {
  switch (r) {
    case GreenRelation::R: return "R";
    case GreenRelation::L: return "L";
    case GreenRelation::H: return "H";
    case GreenRelation::D: return "D";
    case GreenRelation::J: return "J";
  }
  return "?";
}

std::optional<GreenRelation> parse_green_relation(std::string_view s) noexcept {
  for (GreenRelation r : kAllGreenRelations) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

std::string to_string(const Factor& f) { return f.is_unit() ? "1" : to_string(f.endo()); }

InjEndo times(const Factor& x, const InjEndo& a) { return x.is_unit() ? a : compose(x.endo(), a); }
InjEndo times(const InjEndo& a, const Factor& x) { return x.is_unit() ? a : compose(a, x.endo()); }

std::vector<Factor> candidate_factors(Int kmax) {
  std::vector<Factor> out{Factor::unit()};
  for (const InjEndo& e : enumerate_endos(kmax)) out.push_back(Factor::of(e));
  return out;
}

bool green_symbolic(const GreenQuery& q) { return q.left == q.right; }

namespace {

using Factors = std::vector<Factor>;

// x with target = source x.
std::optional<Factor> right_quotient(const InjEndo& target, const InjEndo& source,
                                     const Factors& cands) {
  for (const Factor& x : cands) {
    if (times(source, x) == target) return x;
  }
  return std::nullopt;
}

// x with target = x source.
std::optional<Factor> left_quotient(const InjEndo& target, const InjEndo& source,
                                    const Factors& cands) {
  for (const Factor& x : cands) {
    if (times(x, source) == target) return x;
  }
  return std::nullopt;
}

// (x, y) with target = x source y.
std::optional<std::pair<Factor, Factor>> two_sided_quotient(const InjEndo& target,
                                                            const InjEndo& source,
                                                            const Factors& cands) {
  for (const Factor& x : cands) {
    const InjEndo xs = times(x, source);
    for (const Factor& y : cands) {
      if (times(xs, y) == target) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

std::optional<Factors> search(GreenRelation rel, const InjEndo& a, const InjEndo& b,
                              const Factors& cands, Int kmax);

std::optional<Factors> search_composite(GreenRelation first, GreenRelation second,
                                        const InjEndo& a, const InjEndo& b, const Factors& cands,
                                        Int kmax) {
  std::vector<InjEndo> middles{a, b};
  for (const Factor& f : cands) {
    if (!f.is_unit()) middles.push_back(f.endo());
  }
  for (const InjEndo& c : middles) {
    auto w1 = search(first, a, c, cands, kmax);
    if (!w1) continue;
    auto w2 = search(second, c, b, cands, kmax);
    if (!w2) continue;
    Factors out{Factor::of(c)};
    out.insert(out.end(), w1->begin(), w1->end());
    out.insert(out.end(), w2->begin(), w2->end());
    return out;
  }
  return std::nullopt;
}

std::optional<Factors> search(GreenRelation rel, const InjEndo& a, const InjEndo& b,
                              const Factors& cands, Int kmax) {
  if (a == b) return Factors{Factor::unit()};
  switch (rel) {
    case GreenRelation::R: {
      auto x = right_quotient(a, b, cands);
      if (!x) return std::nullopt;
      auto y = right_quotient(b, a, cands);
      if (!y) return std::nullopt;
      return Factors{*x, *y};
    }
    case GreenRelation::L: {
      auto x = left_quotient(a, b, cands);
      if (!x) return std::nullopt;
      auto y = left_quotient(b, a, cands);
      if (!y) return std::nullopt;
      return Factors{*x, *y};
    }
    case GreenRelation::H: {
      auto r = search(GreenRelation::R, a, b, cands, kmax);
      if (!r) return std::nullopt;
      auto l = search(GreenRelation::L, a, b, cands, kmax);
      if (!l) return std::nullopt;
      r->insert(r->end(), l->begin(), l->end());
      return r;
    }
    case GreenRelation::D:
      return search_composite(GreenRelation::L, GreenRelation::R, a, b, cands, kmax);
    case GreenRelation::J: {
      auto xy = two_sided_quotient(a, b, cands);
      if (!xy) return std::nullopt;
      auto uv = two_sided_quotient(b, a, cands);
      if (!uv) return std::nullopt;
      return Factors{xy->first, xy->second, uv->first, uv->second};
    }
  }
  return std::nullopt;
}

void require_kmax(Int kmax) {
  if (kmax < 1) throw DomainError("witness search bound kmax must be at least 1");
}

}  // namespace

WitnessSearchResult green_bounded_search(const GreenQuery& q) {
  require_kmax(q.kmax);
  const Factors cands = candidate_factors(q.kmax);
  WitnessSearchResult out;
  out.exhausted_bound = q.kmax;
  if (auto w = search(q.relation, q.left, q.right, cands, q.kmax)) {
    out.related = true;
    out.witnesses = std::move(*w);
  }
  return out;
}

bool related_by_composite(GreenRelation first, GreenRelation second, const InjEndo& a,
                          const InjEndo& b, Int kmax) {
  if ((first != GreenRelation::R && first != GreenRelation::L) ||
      (second != GreenRelation::R && second != GreenRelation::L)) {
    throw DomainError("composite relations are built from R and L");
  }
  require_kmax(kmax);
  return search_composite(first, second, a, b, candidate_factors(kmax), kmax).has_value();
}

}  // namespace bicyclic
