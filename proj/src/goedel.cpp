#include "farey/goedel.hpp"

#include <regex>
#include <stdexcept>
#include <utility>

namespace farey {

PwlFunction hat(std::uint64_t k) {
    using L = LinearPiece;
    if (k == 0) return PwlFunction::constant(0);
    if (k == 1) return PwlFunction::from_pieces({Rat(0), Rat(1, 2), Rat(1)}, {L{0, 0}, L{2, -1}});
    if (k == 2)
        return PwlFunction::from_pieces({Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)}, {L{0, 0}, L{3, -1}, L{-1, 1}});
    Int kk(std::to_string(k));
    return PwlFunction::from_pieces({Rat(0), Rat(Int(1), kk + 1), Rat(Int(1), kk), Rat(Int(1), kk - 1), Rat(1)},
                                    {L{0, 0}, L{kk + 1, -1}, L{1 - kk, 1}, L{0, 0}});
}

namespace {

// c(t) = max(0, min(1, t)).  For m >= 1 the recursion uses
//   c(2t)     = c(t) ⊕ c(t)
//   c(2t - 1) = c(t) ⊙ c(t)
//   c(t + x)  = c(t) ⊕ (x ⊙ c(t + 1))     for x in [0, 1]
// and memoizes (m, n) so repeated subformulas are shared.
class EpsilonBuilder {
public:
    Formula build(long m, long n) {
        if (n >= 1) return Formula::star(Formula::zero());
        if (m + n <= 0) return Formula::zero();
        if (m == 1 && n == 0) return Formula::gen();
        auto key = std::make_pair(m, n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Formula f = Formula::zero();
        if (m % 2 == 0 && n % 2 == 0) {
            Formula s = build(m / 2, n / 2);
            f = Formula::plus(s, s);
        } else if (m % 2 == 0) {
            Formula s = build(m / 2, (n + 1) / 2);
            f = odot(s, s);
        } else {
            f = Formula::plus(build(m - 1, n), odot(Formula::gen(), build(m - 1, n + 1)));
        }
        memo_.emplace(key, f);
        return f;
    }

private:
    std::map<std::pair<long, long>, Formula> memo_;
};

BetaCache& shared_beta_cache() {
    static BetaCache cache;
    return cache;
}

}  // namespace

Formula epsilon_formula(long m, long n) {
    if (m == 0) throw std::invalid_argument("epsilon_formula: m must be nonzero");
    EpsilonBuilder builder;
    if (m > 0) return builder.build(m, n);
    // c(mx + n) = 1 - c(-mx + 1 - n)
    return Formula::star(builder.build(-m, 1 - n));
}

Formula beta(std::uint64_t k) {
    Formula x = Formula::gen();
    if (k == 0) return Formula::star(Formula::plus(x, Formula::star(x)));
    if (k == 1) return Formula::star(Formula::plus(Formula::star(x), Formula::star(x)));
    if (k > (std::uint64_t{1} << 40)) throw std::invalid_argument("beta: k too large");
    auto kl = static_cast<long>(k);
    return meet(epsilon_formula(kl + 1, -1), epsilon_formula(-(kl - 1), 1));
}

Formula BetaCache::get(std::uint64_t k) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    }
    Formula f = beta(k);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(k, std::move(f)).first->second;
}

EnumerationOracle::EnumerationOracle(std::string name, std::function<std::uint64_t(std::uint64_t)> eta,
                                     std::function<bool(std::uint64_t)> in_range)
    : name_(std::move(name)), eta_(std::move(eta)), in_range_(std::move(in_range)) {}

std::uint64_t EnumerationOracle::operator()(std::uint64_t i) const {
    std::uint64_t v = eta_(i);
    if (v <= 1)
        throw std::domain_error("enumeration " + name_ + " produced " + std::to_string(v) + " at index " +
                                std::to_string(i) + "; 0 and 1 are excluded");
    return v;
}

bool EnumerationOracle::in_range(std::uint64_t k) const {
    if (!in_range_) throw std::logic_error("enumeration " + name_ + " has no range decision procedure");
    return in_range_(k);
}

EnumerationOracle EnumerationOracle::affine(std::uint64_t a, std::uint64_t b) {
    if (a == 0) throw std::invalid_argument("affine enumeration needs a positive slope");
    std::string name = (a == 1 ? std::string() : std::to_string(a)) + "i" + (b ? "+" + std::to_string(b) : "");
    return EnumerationOracle(
        name, [a, b](std::uint64_t i) { return a * i + b; },
        [a, b](std::uint64_t k) { return k >= b && (k - b) % a == 0; });
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

EnumerationOracle EnumerationOracle::primes() {
    return EnumerationOracle(
        "primes",
        [](std::uint64_t i) {
            std::uint64_t p = 1;
            for (std::uint64_t seen = 0; seen <= i;)
                if (is_prime(++p)) ++seen;
            return p;
        },
        is_prime);
}

EnumerationOracle EnumerationOracle::parse(std::string_view text) {
    std::string s(text);
    if (s == "primes") return primes();
    static const std::regex affine_re(R"(\s*(\d*)\s*i\s*(?:\+\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, affine_re))
        throw std::invalid_argument("enumeration must look like \"2i+4\" or \"primes\": " + s);
    std::uint64_t a = m[1].length() ? std::stoull(m[1].str()) : 1;
    std::uint64_t b = m[2].matched ? std::stoull(m[2].str()) : 0;
    return affine(a, b);
}

Formula gamma(std::uint64_t t, const EnumerationOracle& eta) {
    Formula g = shared_beta_cache().get(eta(0));
    for (std::uint64_t i = 1; i <= t; ++i) g = join(g, shared_beta_cache().get(eta(i)));
    return g;
}

std::optional<std::uint64_t> member_ideal_bounded(const Formula& f, const EnumerationOracle& eta,
                                                  std::uint64_t t_max) {
    if (t_max < 1) throw std::invalid_argument("member_ideal_bounded: t_max must be >= 1");
    PwlFunction target = semantics(f);
    for (std::uint64_t t = 1; t <= t_max; ++t)
        if (pointwise_leq(target, semantics(scalar_multiple(t, gamma(t, eta))))) return t;
    return std::nullopt;
}

bool vanishing_certificate(std::uint64_t k, const EnumerationOracle& eta, std::uint64_t t) {
    if (k == 0) throw std::invalid_argument("vanishing_certificate: k must be >= 1");
    Rat at(Int(1), Int(std::to_string(k)));
    return eval_formula(gamma(t, eta), at) == Rat(0) && Rat(0) < eval(hat(k), at);
}

}  // namespace farey
