#pragma once

#include "farey/formula.hpp"
#include "farey/pwl.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace farey {

/// Hat function b_k: b_0 = 0, b_1 and b_2 are the boundary hats, and for
/// k >= 3 b_k vanishes outside [1/(k+1), 1/(k-1)] and peaks at (1/k, 1/k).
PwlFunction hat(std::uint64_t k);

/// A formula for the clipped line max(0, min(1, m·x + n)); m != 0.
Formula epsilon_formula(long m, long n);

/// A formula whose function is hat(k).
Formula beta(std::uint64_t k);

/// Thread-safe memo of beta(k).
class BetaCache {
public:
    Formula get(std::uint64_t k);

private:
    std::mutex mutex_;
    std::map<std::uint64_t, Formula> cache_;
};

/// A total enumeration i ↦ η(i) of a set of naturals that excludes 0 and 1,
/// optionally with a membership test for its range.
class EnumerationOracle {
public:
    EnumerationOracle(std::string name, std::function<std::uint64_t(std::uint64_t)> eta,
                      std::function<bool(std::uint64_t)> in_range = {});

    /// η(i); throws std::domain_error if the enumeration produces 0 or 1.
    std::uint64_t operator()(std::uint64_t i) const;
    bool has_decidable_range() const { return static_cast<bool>(in_range_); }
    /// Throws std::logic_error when the range is not decidable.
    bool in_range(std::uint64_t k) const;
    const std::string& name() const { return name_; }

    /// i ↦ a·i + b, a >= 1.
    static EnumerationOracle affine(std::uint64_t a, std::uint64_t b);
    /// i ↦ the i-th prime, from 2.
    static EnumerationOracle primes();
    /// "2i+4", "3i", "i+2", "primes".
    static EnumerationOracle parse(std::string_view text);

private:
    std::string name_;
    std::function<std::uint64_t(std::uint64_t)> eta_;
    std::function<bool(std::uint64_t)> in_range_;
};

/// β(η(0)) ∨ β(η(1)) ∨ ... ∨ β(η(t)), associated to the left.
Formula gamma(std::uint64_t t, const EnumerationOracle& eta);

/// Smallest t in [1, t_max] with t·g_t >= f pointwise, where g_t is the
/// function of gamma(t).  Absence is not a proof of non-membership.
std::optional<std::uint64_t> member_ideal_bounded(const Formula& f, const EnumerationOracle& eta,
                                                  std::uint64_t t_max);

/// True when g_t(1/k) = 0 < b_k(1/k), which rules out b_k from the ideal
/// generated by g_0, ..., g_t.  Needs k >= 1.
bool vanishing_certificate(std::uint64_t k, const EnumerationOracle& eta, std::uint64_t t);

}  // namespace farey
