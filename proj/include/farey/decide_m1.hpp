#pragma once

#include "farey/formula.hpp"
#include "farey/rational.hpp"

#include <cstdint>
#include <optional>

namespace farey {

/// Outcome of an equality test in the one-generator Farey algebra.
struct Verdict {
    enum class Method : std::uint8_t { Search, Canonical };

    bool equal = true;
    std::optional<Rat> witness;  // a point where the two functions differ
    Method method = Method::Search;
};

/// Test-point bound used by equal_search: twice the length of the distance
/// formula of (φ, ψ).
std::uint64_t search_bound(const Formula& phi, const Formula& psi);

/// Evaluates the distance formula at every c/d with d <= search_bound and
/// reports the first nonzero point in (d, c) order.
Verdict equal_search(const Formula& phi, const Formula& psi);

/// Compares the canonical McNaughton functions.
Verdict equal_canonical(const Formula& phi, const Formula& psi);

/// The differing rational of least denominator, least numerator among those;
/// absent when the functions are equal.
std::optional<Rat> minimal_witness(const Formula& phi, const Formula& psi);

}  // namespace farey
