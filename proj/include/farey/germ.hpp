#pragma once

#include "farey/contfrac.hpp"
#include "farey/formula.hpp"
#include "farey/pwl.hpp"
#include "farey/rational.hpp"

#include <utility>
#include <variant>

namespace farey {

/// One-sided germ of a McNaughton function: its value at `point` and its
/// slope on the `side` of it.
struct Germ {
    Rat point;
    Side side = Side::Right;
    Rat value;
    Int slope;

    friend bool operator==(const Germ&, const Germ&) = default;
};

/// Maximal ideal of functions vanishing at a rational ξ in [0,1].
struct MaximalRational {
    Rat xi;
};
/// Maximal ideal of functions vanishing at an irrational θ.
struct MaximalIrrational {
    ThetaSpec theta;
};
/// Prime ideal of functions vanishing on a one-sided neighbourhood of a
/// rational point.  Right needs point < 1, Left needs point > 0.
struct GermIdeal {
    Rat point;
    Side side = Side::Right;
};

using PrimeIdealSpec = std::variant<MaximalRational, MaximalIrrational, GermIdeal>;

/// Throws std::domain_error when the side does not exist at the point.
Germ germ_at(const Formula& f, const Rat& point, Side side);

bool equal_in_prime_quotient(const Formula& phi, const Formula& psi, const PrimeIdealSpec& ideal);

struct BlParameters {
    Int k;
    Int q;
    friend bool operator==(const BlParameters&, const BlParameters&) = default;
};

/// (k, q) with k ≡ -p⁻¹ (Right) or p⁻¹ (Left) mod q, k in [1, q-1], naming
/// the Behnke-Leptin algebra of the one-sided germ quotient at p/q.
/// Requires 0 < p/q < 1.
BlParameters bl_parameters(const Rat& p_over_q, Side side);

/// (5x, (y - 10x)/5) for the right germ (x, y) at 3/5, the coordinates in
/// Z lex Z.  Throws std::invalid_argument for other germs or non-integral
/// results.
std::pair<Int, Int> lex_coordinates_3_5(const Germ& g);

}  // namespace farey
