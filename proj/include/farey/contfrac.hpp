#pragma once

#include "farey/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace farey {

/// p_n / q_n, with seeds p_{-1} = 1, q_{-1} = 0, p_{-2} = 0, q_{-2} = 1.
struct Convergent {
    std::size_t index = 0;
    Int p;
    Int q;

    Rat value() const { return Rat(p, q); }
};

/// [0; preperiod[1..], period, period, ...].  The first preperiod entry is
/// a₀ and must be 0; all other quotients must be >= 1.
struct PeriodicCF {
    std::vector<Int> preperiod;
    std::vector<Int> period;
};

/// 1/e = [0; 2, 1, 2, 1, 1, 4, 1, 1, 6, ...].
struct InvE {};

/// The unique root of `poly` (ascending coefficients) in [lo, hi].  Build
/// through make_algebraic, which checks the root is unique, simple in sign
/// and irrational, and normalizes so that poly(lo) < 0 < poly(hi).
struct AlgebraicInterval {
    std::vector<Int> poly;
    Rat lo;
    Rat hi;
};

struct PiMinus3 {};

using ThetaSpec = std::variant<PeriodicCF, InvE, AlgebraicInterval, PiMinus3>;

/// Throws std::invalid_argument unless the data describe an irrational θ in
/// (0, 1) as documented on each alternative.
AlgebraicInterval make_algebraic(std::vector<Int> poly, Rat lo, Rat hi);
void validate(const ThetaSpec& spec);

/// Textual forms: "cf:0;1" or "cf:0,3;1,2" (preperiod;period), "inv-e",
/// "alg:poly=-1,1,1:lo=1/2:hi=2/3", "pi-3".
ThetaSpec parse_theta(std::string_view text);
std::string to_string(const ThetaSpec& spec);

/// Answers "r < θ" for rationals r.  θ is irrational, so the answer is never
/// ambiguous.  Cheap to copy; safe for concurrent queries.
class LeftCutOracle {
public:
    explicit LeftCutOracle(std::function<bool(const Rat&)> less_than_theta)
        : query_(std::move(less_than_theta)) {}

    bool operator()(const Rat& r) const { return query_(r); }

private:
    std::function<bool(const Rat&)> query_;
};

LeftCutOracle left_cut(const ThetaSpec& spec);

/// Lazily extends the partial quotients and convergents of θ.  Not
/// thread-safe; use one stream per thread.
class ConvergentStream {
public:
    explicit ConvergentStream(ThetaSpec spec);

    const Int& quotient(std::size_t n);
    const Convergent& convergent(std::size_t n);
    const ThetaSpec& spec() const { return spec_; }

private:
    void extend_to(std::size_t n);
    Int next_quotient();

    ThetaSpec spec_;
    LeftCutOracle cut_;
    std::vector<Int> quotients_;
    std::vector<Convergent> convergents_;
};

std::vector<Convergent> convergents(const ThetaSpec& spec, std::size_t n_max);
std::vector<Int> partial_quotients(const ThetaSpec& spec, std::size_t n_max);

/// Partial quotients of θ recovered from its left cut alone: each a_n is
/// the largest a for which the candidate convergent stays on the correct
/// side of θ, found by doubling and bisection.
std::vector<Int> partial_quotients_from_cut(const LeftCutOracle& cut, std::size_t n_max);

/// Convergents of the finite continued fraction [a₀; a₁, ..., a_n].
std::vector<Convergent> convergents_of(const std::vector<Int>& quotients);

/// Reduced fractions in [0,1] with denominator <= max_den in ascending
/// order, produced by repeated mediant insertion.
std::vector<Rat> farey_sequence(std::uint64_t max_den);

/// Same sequence as (numerator, denominator) pairs; max_den < 2^31.
std::vector<std::pair<std::int64_t, std::int64_t>> farey_sequence_small(std::uint64_t max_den);

}  // namespace farey
