#pragma once

#include <vector>

#include "bicyclic/endomorphism.hpp"

namespace bicyclic {

// Structure of the monoid of injective monoid endomorphisms under compose.

inline bool is_in_S_alpha(const InjEndo& e) noexcept { return e.is_alpha(); }
inline bool is_in_S_beta(const InjEndo& e) noexcept { return e.is_beta(); }

/// Every e with k <= kmax such that compose(e, e) == e.
std::vector<InjEndo> find_idempotents(Int kmax);

/// Left and right cancellation for all alpha triples with k <= kmax.
bool check_cancellative_S_alpha(Int kmax);

/// compose(e, b) and compose(b, e) are beta for every endo e and beta b
/// with k <= kmax.
bool check_ideal_S_beta(Int kmax);

}  // namespace bicyclic
