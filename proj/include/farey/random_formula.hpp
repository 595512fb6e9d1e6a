#pragma once

#include "farey/formula.hpp"

#include <cstdint>
#include <random>

namespace farey {

using Rng = std::mt19937_64;

/// Uniform-ish random formula with length(f) <= max_length (max_length >= 1).
Formula random_formula(Rng& rng, std::uint64_t max_length);

/// Applies `steps` random MV-algebra identities (x** = x, commutativity,
/// associativity, x ⊕ 0 = x, the join-symmetry axiom, ...) at random
/// positions.  The result always codes the same function as f.
Formula random_equivalent(const Formula& f, Rng& rng, int steps = 3);

}  // namespace farey
