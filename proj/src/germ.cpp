#include "farey/germ.hpp"

#include "farey/effros_shen.hpp"

#include <stdexcept>

namespace farey {

Germ germ_at(const Formula& f, const Rat& point, Side side) {
    auto [value, slope] = value_and_slope(f, point, side);
    return {point, side, std::move(value), std::move(slope)};
}

bool equal_in_prime_quotient(const Formula& phi, const Formula& psi, const PrimeIdealSpec& ideal) {
    if (const auto* m = std::get_if<MaximalRational>(&ideal))
        return eval_formula(phi, m->xi) == eval_formula(psi, m->xi);
    if (const auto* g = std::get_if<GermIdeal>(&ideal))
        return germ_at(phi, g->point, g->side) == germ_at(psi, g->point, g->side);
    return equal_cf(phi, psi, std::get<MaximalIrrational>(ideal).theta);
}

BlParameters bl_parameters(const Rat& p_over_q, Side side) {
    if (p_over_q.sign() <= 0 || !(p_over_q < Rat(1)))
        throw std::invalid_argument("bl_parameters needs 0 < p/q < 1");
    const Int& q = p_over_q.den_ref();
    Int inv = mod_inverse(p_over_q.num(), q);
    Int k = side == Side::Left ? inv : Int((q - inv) % q);
    return {k, q};
}

std::pair<Int, Int> lex_coordinates_3_5(const Germ& g) {
    if (g.point != Rat(3, 5) || g.side != Side::Right)
        throw std::invalid_argument("lex_coordinates_3_5 needs a right germ at 3/5");
    Rat x5 = g.value * Rat(5);
    if (!x5.is_integer()) throw std::invalid_argument("germ value " + to_string(g.value) + " is not in (1/5)Z");
    Rat second = (Rat(g.slope) - Rat(10) * g.value) / Rat(5);
    if (!second.is_integer())
        throw std::invalid_argument("germ (" + to_string(g.value) + ", " + to_string(g.slope) +
                                    ") has no integral lex coordinates");
    return {x5.num(), second.num()};
}

}  // namespace farey
