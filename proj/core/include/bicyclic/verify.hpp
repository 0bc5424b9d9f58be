#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bicyclic/family.hpp"

namespace bicyclic {

/// User-supplied bound overrides; unset fields take the suite default.
struct BoundsOverride {
  std::optional<Int> bound;
  std::optional<Int> kmax;
  std::optional<Int> t_max;
};

/// Bounds a suite actually ran with. Fields a suite does not use are unset.
struct SuiteBounds {
  std::optional<Int> bound;          // coordinate bound N of the truncation
  std::optional<Int> kmax;           // k bound of the endomorphism sweep
  std::optional<Int> search_kmax;    // k bound of witness factors (green)
  std::optional<Int> symbolic_kmax;  // k bound of the closed-form table checks
  std::optional<Int> t_max;          // growth inequality horizon
  std::optional<Int> s_max;          // growth rate sweep
};

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  SuiteBounds bounds;
  std::uint64_t cases_run = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;       // first kMaxRecordedFailures only
  std::vector<std::string> witnesses;  // informational findings
  double elapsed_ms = 0.0;

  bool pass() const noexcept { return failure_count == 0; }
};

inline constexpr std::size_t kMaxRecordedFailures = 100;

/// Suite names in registry order.
std::span<const std::string_view> suite_names() noexcept;
bool is_known_suite(std::string_view name) noexcept;

SuiteBounds resolve_bounds(std::string_view suite, const BoundsOverride& overrides);

/// Runs one suite over its resolved bounds. Throws DomainError for an
/// unknown suite name or invalid bounds. Deterministic apart from
/// elapsed_ms.
VerifyReport run_suite(std::string_view suite, const BoundsOverride& overrides = {});

/// A named invariant and the suite that checks it.
struct InvariantOwner {
  std::string_view module;
  std::string_view invariant;
  std::string_view suite;
};

std::span<const InvariantOwner> invariant_registry() noexcept;

/// Throws std::logic_error unless every registered invariant is owned by
/// exactly one known suite and every suite owns at least one invariant.
void assert_registry_complete();

}  // namespace bicyclic
