#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bicyclic/element.hpp"
#include "bicyclic/monoid.hpp"

namespace bicyclic {

enum class EndoKind { Alpha, Beta };

/// The alpha/beta coordinate formula with unvalidated parameters.
///
///   (i, j, [0)) -> (k i, k j, [0))
///   (i, j, [1)) -> (p + k i, p + k j, [1))   for Alpha
///   (i, j, [1)) -> (p + k i, p + k j, [0))   for Beta
///
/// Outside the legal parameter ranges this is still a well-defined map on
/// the canonical family, just not an injective monoid endomorphism. It is
/// what the truncation checks below operate on.
struct EndoForm {
  EndoKind kind = EndoKind::Alpha;
  Int k = 1;
  Int p = 0;

  friend constexpr auto operator<=>(const EndoForm&, const EndoForm&) = default;
};

/// Requires x over {[0), [1)}; throws DomainError otherwise.
Elem apply_form(const EndoForm& f, const Elem& x);

/// An injective monoid endomorphism alpha_{k,p} or beta_{k,p}. These are
/// all of them, so the type is closed and equality is structural.
class InjEndo {
 public:
  static InjEndo alpha(Int k, Int p);
  static InjEndo beta(Int k, Int p);
  static InjEndo identity() { return alpha(1, 0); }

  EndoKind kind() const noexcept { return form_.kind; }
  Int k() const noexcept { return form_.k; }
  Int p() const noexcept { return form_.p; }
  bool is_alpha() const noexcept { return form_.kind == EndoKind::Alpha; }
  bool is_beta() const noexcept { return form_.kind == EndoKind::Beta; }
  const EndoForm& form() const noexcept { return form_; }

  friend constexpr auto operator<=>(const InjEndo&, const InjEndo&) = default;

 private:
  explicit InjEndo(EndoForm f) : form_(f) {}
  EndoForm form_;
};

inline InjEndo make_alpha(Int k, Int p) { return InjEndo::alpha(k, p); }
inline InjEndo make_beta(Int k, Int p) { return InjEndo::beta(k, p); }

/// Throws ParameterRangeError naming the first violated constraint, if any.
void validate_parameters(EndoKind kind, Int k, Int p);
std::optional<RangeConstraint> parameter_violation(EndoKind kind, Int k, Int p) noexcept;

std::string to_string(const InjEndo& e);
std::string to_string(const EndoForm& f);

Elem apply(const InjEndo& e, const Elem& x);

/// e1 followed by e2: apply(compose(e1, e2), x) == apply(e2, apply(e1, x)).
InjEndo compose(const InjEndo& e1, const InjEndo& e2);

/// Which copy receives the image of (0, 0, [1)).
enum class TargetLevel { Level0, Level1 };

/// The data that determines an injective monoid endomorphism:
/// (1, 1, [0)) -> (k, k, [0)) and (0, 0, [1)) -> (p, p, [target_level)).
struct GeneratorImages {
  Int k = 1;
  TargetLevel target_level = TargetLevel::Level1;
  Int p = 0;
};

/// Level1 images give alpha_{k,p}, Level0 images give beta_{k,p}. Throws
/// ParameterRangeError with a diagnostic when no injective monoid
/// endomorphism has those images.
InjEndo classify_from_images(const GeneratorImages& g);

/// Exhaustively checks (x y) f == (x f)(y f) for x, y in the truncation at
/// `bound` over {[0), [1)}. Pairs are visited in truncation order (set
/// index, then i, then j; x outer). Returns the first violating pair.
std::optional<std::pair<Elem, Elem>> homomorphism_counterexample(const EndoForm& f, Int bound);

inline bool is_endomorphism_on_truncation(const EndoForm& f, Int bound) {
  return !homomorphism_counterexample(f, bound).has_value();
}

/// First pair of distinct truncation elements with the same image.
std::optional<std::pair<Elem, Elem>> injectivity_collision(const EndoForm& f, Int bound);

/// The two-sided growth bounds forced by order preservation, for t in
/// 1..t_max. Alpha:  p + s(t+1) >= k(t+1)  and  k(t+1) - 1 >= p + s t.
///             Beta: p + s(t+1) >= k(t+1) >= p + s t.
/// (k, p) must be in range for `kind`; s >= 1; t_max >= 1.
bool check_growth_inequalities(EndoKind kind, Int k, Int p, Int s, Int t_max);

/// Smallest t in 1..t_max at which the bounds fail, if any.
std::optional<Int> first_growth_violation(EndoKind kind, Int k, Int p, Int s, Int t_max);

}  // namespace bicyclic
