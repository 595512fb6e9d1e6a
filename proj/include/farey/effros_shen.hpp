#pragma once

#include "farey/contfrac.hpp"
#include "farey/formula.hpp"
#include "farey/rational.hpp"

#include <cstddef>

namespace farey {

struct EffrosShenOptions {
#ifdef NDEBUG
    bool verify_linearity = false;
#else
    bool verify_linearity = true;
#endif
};

/// Thrown when a runtime linearity check fails; that would mean a bug.
class LinearityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Convergent index n_ρ = 2·⌈log₂(8·length(ρ))⌉ used by equal_cf.
std::size_t cf_index(const Formula& rho);

/// Equality at θ via the distance formula δ: true iff δ vanishes at the
/// convergents of index n_δ and n_δ + 1.
bool equal_cf(const Formula& phi, const Formula& psi, const ThetaSpec& spec, EffrosShenOptions options = {});

/// Equality at θ via the Farey sequence of order 2·length(δ): the oracle
/// locates the Farey interval around θ and δ must vanish at both ends.
bool equal_left_cut(const Formula& phi, const Formula& psi, const LeftCutOracle& oracle,
                    EffrosShenOptions options = {});

struct RatInterval {
    Rat lo;
    Rat hi;
};

/// An interval of width <= 1/precision_denominator containing f_φ(θ).
RatInterval value_at_theta(const Formula& phi, const ThetaSpec& spec, const Int& precision_denominator);

}  // namespace farey
