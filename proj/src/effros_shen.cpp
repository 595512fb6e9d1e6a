#include "farey/effros_shen.hpp"

#include "farey/pwl.hpp"

#include <algorithm>

namespace farey {

namespace {

void check_linear(const Formula& delta, const Rat& a, const Rat& b, const char* where) {
    if (!is_linear_on(semantics(delta), min(a, b), max(a, b)))
        throw LinearityViolation(std::string(where) + ": distance function is not linear on [" +
                                 to_string(min(a, b)) + ", " + to_string(max(a, b)) + "]");
}

bool vanishes_at(const FormulaProgram& program, const Int& p, const Int& q) {
    if (q.fits_slong_p() && q < Int(1L << 61))
        return program.eval_scaled(p.get_si(), q.get_si()) == 0;
    return program.eval_scaled(p, q) == 0;
}

}  // namespace

std::size_t cf_index(const Formula& rho) {
    Int eight_len(std::to_string(rho.length()));
    eight_len *= 8;
    // ⌈log₂ N⌉ is the bit length of N - 1.
    Int m = eight_len - 1;
    return 2 * mpz_sizeinbase(m.get_mpz_t(), 2);
}

bool equal_cf(const Formula& phi, const Formula& psi, const ThetaSpec& spec, EffrosShenOptions options) {
    Formula delta = distance(phi, psi);
    std::size_t n = cf_index(delta);
    ConvergentStream stream(spec);
    const Convergent a = stream.convergent(n);
    const Convergent& b = stream.convergent(n + 1);
    if (options.verify_linearity) check_linear(delta, a.value(), b.value(), "equal_cf");
    FormulaProgram program(delta);
    return vanishes_at(program, a.p, a.q) && vanishes_at(program, b.p, b.q);
}

bool equal_left_cut(const Formula& phi, const Formula& psi, const LeftCutOracle& oracle,
                    EffrosShenOptions options) {
    Formula delta = distance(phi, psi);
    auto farey = farey_sequence_small(2 * delta.length());
    // farey[lo] < θ < farey[hi]; the ends are 0 and 1.
    std::size_t lo = 0, hi = farey.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (oracle(Rat(farey[mid].first, farey[mid].second)))
            lo = mid;
        else
            hi = mid;
    }
    Rat r_lo(farey[lo].first, farey[lo].second);
    Rat r_hi(farey[hi].first, farey[hi].second);
    if (options.verify_linearity) check_linear(delta, r_lo, r_hi, "equal_left_cut");
    FormulaProgram program(delta);
    return program.eval_scaled(farey[lo].first, farey[lo].second) == 0 &&
           program.eval_scaled(farey[hi].first, farey[hi].second) == 0;
}

RatInterval value_at_theta(const Formula& phi, const ThetaSpec& spec, const Int& precision_denominator) {
    if (precision_denominator < 1) throw std::invalid_argument("precision denominator must be >= 1");
    PwlFunction f = semantics(phi);
    ConvergentStream stream(spec);
    Rat width(Int(1), precision_denominator);
    for (std::size_t n = 0;; ++n) {
        Rat a = stream.convergent(n).value();
        Rat b = stream.convergent(n + 1).value();
        Rat lo = min(a, b), hi = max(a, b);
        if (!is_linear_on(f, lo, hi)) continue;
        // f is linear on an interval containing θ, so f(θ) lies between
        // the endpoint values.
        Rat fa = eval(f, lo), fb = eval(f, hi);
        RatInterval out{min(fa, fb), max(fa, fb)};
        if (!(width < out.hi - out.lo)) return out;
    }
}

}  // namespace farey
