#include "bicyclic/endomorphism.hpp"

#include <map>

#include "bicyclic/enumeration.hpp"

namespace bicyclic {

const char* describe(RangeConstraint c) noexcept {
  switch (c) {
    case RangeConstraint::KPositive: return "k must be positive";
    case RangeConstraint::KAtLeastTwo: return "k must be at least 2";
    case RangeConstraint::PNonNegative: return "p must be nonnegative";
    case RangeConstraint::PExceedsKMinus1: return "p exceeds k-1";
    case RangeConstraint::PZeroCollision: return "p must be at least 1";
  }
  return "unknown constraint";
}

namespace {

const char* kind_name(EndoKind kind) { return kind == EndoKind::Alpha ? "alpha" : "beta"; }

[[noreturn]] void throw_range(EndoKind kind, Int k, Int p, RangeConstraint c) {
  throw ParameterRangeError(c, std::string(describe(c)) + " (" + kind_name(kind) + " with k=" +
                                   std::to_string(k) + ", p=" + std::to_string(p) + ")");
}

void require_canonical(const Elem& x) {
  if (x.base() != 0 && x.base() != 1) {
    throw DomainError("endomorphisms act on the family {[0),[1)}; got " + to_string(x));
  }
}

void require_form(const EndoForm& f) {
  if (f.k < 1 || f.p < 0) {
    throw DomainError("coordinate form " + to_string(f) + " needs k >= 1 and p >= 0");
  }
}

}  // namespace

std::optional<RangeConstraint> parameter_violation(EndoKind kind, Int k, Int p) noexcept {
  if (k < 1) return RangeConstraint::KPositive;
  if (kind == EndoKind::Beta && k < 2) return RangeConstraint::KAtLeastTwo;
  if (p < 0) return RangeConstraint::PNonNegative;
  if (kind == EndoKind::Beta && p == 0) return RangeConstraint::PZeroCollision;
  if (p > k - 1) return RangeConstraint::PExceedsKMinus1;
  return std::nullopt;
}

void validate_parameters(EndoKind kind, Int k, Int p) {
  if (auto c = parameter_violation(kind, k, p)) throw_range(kind, k, p, *c);
}

InjEndo InjEndo::alpha(Int k, Int p) {
  validate_parameters(EndoKind::Alpha, k, p);
  return InjEndo(EndoForm{EndoKind::Alpha, k, p});
}

InjEndo InjEndo::beta(Int k, Int p) {
  validate_parameters(EndoKind::Beta, k, p);
  return InjEndo(EndoForm{EndoKind::Beta, k, p});
}

std::string to_string(const EndoForm& f) {
  return std::string(f.kind == EndoKind::Alpha ? "a:" : "b:") + std::to_string(f.k) + "," +
         std::to_string(f.p);
}

std::string to_string(const InjEndo& e) { return to_string(e.form()); }

Elem apply_form(const EndoForm& f, const Elem& x) {
  require_canonical(x);
  Int ki = checked_mul(f.k, x.i);
  Int kj = checked_mul(f.k, x.j);
  if (x.base() == 0) return Elem(ki, kj, 0);
  return Elem(checked_add(f.p, ki), checked_add(f.p, kj), f.kind == EndoKind::Alpha ? 1 : 0);
}

Elem apply(const InjEndo& e, const Elem& x) { return apply_form(e.form(), x); }

InjEndo compose(const InjEndo& e1, const InjEndo& e2) {
  Int k = checked_mul(e1.k(), e2.k());
  if (e1.is_alpha()) {
    Int p = checked_add(e2.p(), checked_mul(e2.k(), e1.p()));
    return e2.is_alpha() ? InjEndo::alpha(k, p) : InjEndo::beta(k, p);
  }
  // A beta first collapses [1) into [0), where alpha and beta agree.
  return InjEndo::beta(k, checked_mul(e2.k(), e1.p()));
}

InjEndo classify_from_images(const GeneratorImages& g) {
  const bool level1 = g.target_level == TargetLevel::Level1;
  const EndoKind kind = level1 ? EndoKind::Alpha : EndoKind::Beta;
  auto c = parameter_violation(kind, g.k, g.p);
  if (!c) return level1 ? InjEndo::alpha(g.k, g.p) : InjEndo::beta(g.k, g.p);

  const std::string target = "(" + std::to_string(g.p) + "," + std::to_string(g.p) +
                             (level1 ? ",[1))" : ",[0))");
  const std::string kk = std::to_string(g.k);
  std::string why;
  switch (*c) {
    case RangeConstraint::PExceedsKMinus1:
      why = "order preservation needs (" + kk + "," + kk + ",[0)) <= " + target;
      break;
    case RangeConstraint::PZeroCollision:
      why = "(0,0,[1)) and (0,0,[0)) would share the image (0,0,[0))";
      break;
    case RangeConstraint::KAtLeastTwo:
      why = "no p in {1,...,k-1} exists for k=1 with a [0)-level image";
      break;
    default:
      why = "(1,1,[0)) must map to (k,k,[0)) with k >= 1";
      break;
  }
  throw ParameterRangeError(*c, std::string(describe(*c)) + ": no injective monoid endomorphism "
                                    "maps (0,0,[1)) to " + target + " with k=" + kk + "; " + why);
}

std::optional<std::pair<Elem, Elem>> homomorphism_counterexample(const EndoForm& f, Int bound) {
  require_form(f);
  const auto elems = Truncation(bound).elements();
  std::vector<Elem> images;
  images.reserve(elems.size());
  for (const Elem& x : elems) images.push_back(apply_form(f, x));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (apply_form(f, product(elems[a], elems[b])) != product(images[a], images[b])) {
        return std::pair{elems[a], elems[b]};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> injectivity_collision(const EndoForm& f, Int bound) {
  require_form(f);
  std::map<Elem, Elem> seen;
  for (const Elem& x : Truncation(bound).elements()) {
    auto [it, inserted] = seen.emplace(apply_form(f, x), x);
    if (!inserted) return std::pair{it->second, x};
  }
  return std::nullopt;
}

std::optional<Int> first_growth_violation(EndoKind kind, Int k, Int p, Int s, Int t_max) {
  validate_parameters(kind, k, p);
  if (s < 1) throw DomainError("growth rate s must be positive");
  if (t_max < 1) throw DomainError("t_max must be positive");
  for (Int t = 1; t <= t_max; ++t) {
    const Int level1_next = checked_add(p, checked_mul(s, t + 1));  // p + s(t+1)
    const Int level0_next = checked_mul(k, t + 1);                  // k(t+1)
    const Int level1_here = checked_add(p, checked_mul(s, t));      // p + s t
    const bool lower = level1_next >= level0_next;
    const bool upper = kind == EndoKind::Alpha ? level0_next - 1 >= level1_here
                                               : level0_next >= level1_here;
    if (!lower || !upper) return t;
  }
  return std::nullopt;
}

bool check_growth_inequalities(EndoKind kind, Int k, Int p, Int s, Int t_max) {
  return !first_growth_violation(kind, k, p, s, t_max).has_value();
}

}  // namespace bicyclic
