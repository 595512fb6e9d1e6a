#include "farey/decide_m1.hpp"

#include "farey/pwl.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace farey {

namespace {

// int64 scaled evaluation stays exact while 2d fits comfortably.
constexpr std::uint64_t kInt64Limit = std::uint64_t{1} << 61;

// Scans c/d for d = 1, 2, ..., d_max (unbounded when d_max is absent) and
// returns the first point where `program` is nonzero.
std::optional<Rat> first_nonzero(const FormulaProgram& program, std::optional<std::uint64_t> d_max) {
    std::vector<std::int64_t> scratch;
    for (std::uint64_t d = 1; !d_max || d <= *d_max; ++d) {
        if (d >= kInt64Limit) {
            // Out of the fast path; denominators this large are never
            // reached by formulas that fit in memory, but stay exact.
            Int dd(std::to_string(d));
            for (Int c = 0; c <= dd; ++c) {
                if (gcd(c, dd) != 1) continue;
                if (program.eval_scaled(c, dd) != 0) return Rat(c, dd);
            }
            continue;
        }
        auto di = static_cast<std::int64_t>(d);
        for (std::int64_t c = 0; c <= di; ++c) {
            if (std::gcd(c, di) != 1) continue;
            if (program.eval_scaled(c, di, scratch) != 0) return Rat(c, di);
        }
    }
    return std::nullopt;
}

}  // namespace

std::uint64_t search_bound(const Formula& phi, const Formula& psi) {
    std::uint64_t len = distance(phi, psi).length();
    return len > std::numeric_limits<std::uint64_t>::max() / 2 ? std::numeric_limits<std::uint64_t>::max()
                                                               : 2 * len;
}

Verdict equal_search(const Formula& phi, const Formula& psi) {
    FormulaProgram program(distance(phi, psi));
    auto witness = first_nonzero(program, search_bound(phi, psi));
    return {!witness.has_value(), std::move(witness), Verdict::Method::Search};
}

Verdict equal_canonical(const Formula& phi, const Formula& psi) {
    PwlFunction f = semantics(phi);
    PwlFunction g = semantics(psi);
    if (f == g) return {true, std::nullopt, Verdict::Method::Canonical};
    // Both are linear between consecutive merged breakpoints, so a difference
    // shows at one of them.
    std::vector<Rat> xs;
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
               g.breakpoints().end(), std::back_inserter(xs));
    for (const Rat& x : xs)
        if (eval(f, x) != eval(g, x)) return {false, x, Verdict::Method::Canonical};
    throw std::logic_error("canonical forms differ but no breakpoint separates them");
}

std::optional<Rat> minimal_witness(const Formula& phi, const Formula& psi) {
    if (semantics(phi) == semantics(psi)) return std::nullopt;
    return first_nonzero(FormulaProgram(distance(phi, psi)), std::nullopt);
}

}  // namespace farey
