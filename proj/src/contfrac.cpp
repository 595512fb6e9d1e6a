#include "farey/contfrac.hpp"

#include "farey/bbp.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace farey {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---- polynomials over Q, used for interval validation ----

using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == Rat(0)) p.pop_back();
}

Rat eval_poly(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_at(const std::vector<Int>& poly, const Rat& x) {
    // Horner over Q; poly is short so exactness matters more than speed.
    Rat acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rat(*it);
    return acc.sign();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    trim(d);
    return d;
}

Poly remainder(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, derivative(p)};
    while (!chain.back().empty()) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
    int count = 0;
    int last = 0;
    for (const Poly& p : chain) {
        int s = eval_poly(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// ---- π - 3 digits, shared across oracles ----

class PiDigits {
public:
    int digit(std::size_t i) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (i >= digits_.size()) digits_ = bbp_hex_digits(std::max({digits_.size() * 2, i + 1, std::size_t{64}}));
        char c = digits_[i];
        return c <= '9' ? c - '0' : c - 'A' + 10;
    }

private:
    std::mutex mutex_;
    std::string digits_;
};

PiDigits& pi_digits() {
    static PiDigits digits;
    return digits;
}

bool below_pi_minus_3(const Rat& r) {
    if (r.sign() <= 0) return true;
    if (!(r < Rat(1))) return false;
    Int rem = r.num();
    const Int& q = r.den_ref();
    for (std::size_t i = 0;; ++i) {
        rem *= 16;
        Int d = rem / q;
        rem -= d * q;
        int ours = static_cast<int>(d.get_si());
        int theirs = pi_digits().digit(i);
        if (ours != theirs) return ours < theirs;
    }
}

Int inv_e_quotient(std::size_t n) {
    if (n == 0) return 0;
    std::size_t i = n - 1;
    if (i == 0) return 2;
    if (i % 3 == 2) return Int(std::to_string(2 * (i + 1) / 3));
    return 1;
}

Int periodic_quotient(const PeriodicCF& cf, std::size_t n) {
    if (n < cf.preperiod.size()) return cf.preperiod[n];
    return cf.period[(n - cf.preperiod.size()) % cf.period.size()];
}

// p_k or q_k for k >= -2, given convergents 0..n-1 stored in `cs`.
std::pair<Int, Int> convergent_pair(const std::vector<Convergent>& cs, long k) {
    if (k == -2) return {Int(0), Int(1)};
    if (k == -1) return {Int(1), Int(0)};
    const Convergent& c = cs[static_cast<std::size_t>(k)];
    return {c.p, c.q};
}

Convergent next_convergent(const std::vector<Convergent>& cs, const Int& a) {
    long n = static_cast<long>(cs.size());
    auto [p1, q1] = convergent_pair(cs, n - 1);
    auto [p2, q2] = convergent_pair(cs, n - 2);
    return {cs.size(), a * p1 + p2, a * q1 + q2};
}

// a_n from the cut, given convergents 0..n-1 (n >= 1).
Int quotient_from_cut(const LeftCutOracle& cut, const std::vector<Convergent>& cs) {
    long n = static_cast<long>(cs.size());
    auto [p1, q1] = convergent_pair(cs, n - 1);
    auto [p2, q2] = convergent_pair(cs, n - 2);
    bool even = n % 2 == 0;
    // The candidate with quotient a lies on θ's proper side iff a is below
    // the complete quotient.
    auto below = [&](const Int& a) {
        bool left = cut(Rat(a * p1 + p2, a * q1 + q2));
        return even ? left : !left;
    };
    Int lo = 1;
    Int hi = 2;
    while (below(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (below(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    for (const auto& item : split(text, ',')) out.push_back(parse_int(item));
    return out;
}

std::string join_ints(const std::vector<Int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += to_string(xs[i]);
    }
    return out;
}

}  // namespace

AlgebraicInterval make_algebraic(std::vector<Int> poly, Rat lo, Rat hi) {
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1");
    if (lo < Rat(0) || Rat(1) < hi || !(lo < hi))
        throw std::invalid_argument("interval must satisfy 0 <= lo < hi <= 1");
    int s_lo = sign_at(poly, lo);
    int s_hi = sign_at(poly, hi);
    if (s_lo == 0 || s_hi == 0) throw std::invalid_argument("interval endpoint is a root");
    if (s_lo == s_hi) throw std::invalid_argument("polynomial has no sign change on the interval");
    if (s_lo > 0)
        for (Int& c : poly) c = -c;

    Poly rational_poly;
    for (const Int& c : poly) rational_poly.emplace_back(c);
    auto chain = sturm_chain(rational_poly);
    if (sign_variations(chain, lo) - sign_variations(chain, hi) != 1)
        throw std::invalid_argument("polynomial must have exactly one root in the interval");

    // A rational root a/b in lowest terms has b dividing the leading
    // coefficient D, so it is y/D for an integer y; locate the only
    // candidate by bisection on the sign.
    Int big_d = abs(poly.back());
    Int y_lo = floor(lo * Rat(big_d)) + 1;
    Int y_hi = floor(hi * Rat(big_d));
    if (y_lo <= y_hi) {
        Int a = y_lo, b = y_hi + 1;  // first y with poly(y/D) >= 0 lies in [a, b]
        while (a < b) {
            Int mid = (a + b) / 2;
            if (sign_at(poly, Rat(mid, big_d)) < 0)
                a = mid + 1;
            else
                b = mid;
        }
        if (a <= y_hi && sign_at(poly, Rat(a, big_d)) == 0)
            throw std::invalid_argument("the root in the interval is rational: " + to_string(Rat(a, big_d)));
    }
    return {std::move(poly), std::move(lo), std::move(hi)};
}

void validate(const ThetaSpec& spec) {
    std::visit(overloaded{
                   [](const PeriodicCF& cf) {
                       if (cf.preperiod.empty() || cf.preperiod[0] != 0)
                           throw std::invalid_argument("continued fraction must start with a0 = 0");
                       if (cf.period.empty()) throw std::invalid_argument("period must be nonempty");
                       for (std::size_t i = 1; i < cf.preperiod.size(); ++i)
                           if (cf.preperiod[i] < 1) throw std::invalid_argument("partial quotients must be >= 1");
                       for (const Int& a : cf.period)
                           if (a < 1) throw std::invalid_argument("partial quotients must be >= 1");
                   },
                   [](const AlgebraicInterval& alg) {
                       AlgebraicInterval checked = make_algebraic(alg.poly, alg.lo, alg.hi);
                       if (checked.poly != alg.poly)
                           throw std::invalid_argument("algebraic spec is not normalized; use make_algebraic");
                   },
                   [](const auto&) {},
               },
               spec);
}

ThetaSpec parse_theta(std::string_view text) {
    std::string s(text);
    if (s == "inv-e") return InvE{};
    if (s == "pi-3") return PiMinus3{};
    if (s.rfind("cf:", 0) == 0) {
        auto parts = split(std::string_view(s).substr(3), ';');
        if (parts.size() != 2) throw std::invalid_argument("cf spec needs the form cf:<preperiod>;<period>");
        PeriodicCF cf{parse_int_list(parts[0]), parse_int_list(parts[1])};
        validate(cf);
        return cf;
    }
    if (s.rfind("alg:", 0) == 0) {
        std::vector<Int> poly;
        std::optional<Rat> lo, hi;
        bool have_poly = false;
        for (const auto& field : split(std::string_view(s).substr(4), ':')) {
            auto eq = field.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("alg field without '=': " + field);
            std::string key = field.substr(0, eq), value = field.substr(eq + 1);
            if (key == "poly") {
                poly = parse_int_list(value);
                have_poly = true;
            } else if (key == "lo") {
                lo = parse_rat(value);
            } else if (key == "hi") {
                hi = parse_rat(value);
            } else {
                throw std::invalid_argument("unknown alg field: " + key);
            }
        }
        if (!have_poly || !lo || !hi) throw std::invalid_argument("alg spec needs poly, lo and hi");
        return make_algebraic(std::move(poly), *lo, *hi);
    }
    throw std::invalid_argument("unknown theta spec: " + s);
}

std::string to_string(const ThetaSpec& spec) {
    return std::visit(overloaded{
                          [](const PeriodicCF& cf) {
                              return "cf:" + join_ints(cf.preperiod) + ";" + join_ints(cf.period);
                          },
                          [](const InvE&) { return std::string("inv-e"); },
                          [](const AlgebraicInterval& alg) {
                              return "alg:poly=" + join_ints(alg.poly) + ":lo=" + to_string(alg.lo) +
                                     ":hi=" + to_string(alg.hi);
                          },
                          [](const PiMinus3&) { return std::string("pi-3"); },
                      },
                      spec);
}

LeftCutOracle left_cut(const ThetaSpec& spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](const AlgebraicInterval& alg) {
                return LeftCutOracle([alg](const Rat& r) {
                    if (r < alg.lo) return true;
                    if (alg.hi < r) return false;
                    return sign_at(alg.poly, r) < 0;
                });
            },
            [](const PiMinus3&) { return LeftCutOracle(below_pi_minus_3); },
            [&spec](const auto&) {
                // Between consecutive convergents p_n/q_n < θ < p_{n+1}/q_{n+1}
                // (n even) no fraction of denominator <= q_{n+1} fits strictly.
                return LeftCutOracle([spec](const Rat& r) {
                    if (r.sign() <= 0) return true;
                    if (!(r < Rat(1))) return false;
                    ConvergentStream stream(spec);
                    for (std::size_t n = 0;; n += 2) {
                        if (stream.convergent(n + 1).q >= r.den_ref()) return !(stream.convergent(n).value() < r);
                    }
                });
            },
        },
        spec);
}

ConvergentStream::ConvergentStream(ThetaSpec spec)
    : spec_(std::move(spec)),
      cut_(std::holds_alternative<AlgebraicInterval>(spec_) || std::holds_alternative<PiMinus3>(spec_)
               ? left_cut(spec_)
               : LeftCutOracle([](const Rat&) -> bool { throw std::logic_error("unused"); })) {
    validate(spec_);
}

Int ConvergentStream::next_quotient() {
    std::size_t n = quotients_.size();
    return std::visit(overloaded{
                          [&](const PeriodicCF& cf) { return periodic_quotient(cf, n); },
                          [&](const InvE&) { return inv_e_quotient(n); },
                          [&](const auto&) { return n == 0 ? Int(0) : quotient_from_cut(cut_, convergents_); },
                      },
                      spec_);
}

void ConvergentStream::extend_to(std::size_t n) {
    while (quotients_.size() <= n) {
        Int a = next_quotient();
        convergents_.push_back(next_convergent(convergents_, a));
        quotients_.push_back(std::move(a));
    }
}

const Int& ConvergentStream::quotient(std::size_t n) {
    extend_to(n);
    return quotients_[n];
}

const Convergent& ConvergentStream::convergent(std::size_t n) {
    extend_to(n);
    return convergents_[n];
}

std::vector<Convergent> convergents(const ThetaSpec& spec, std::size_t n_max) {
    ConvergentStream stream(spec);
    std::vector<Convergent> out;
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(stream.convergent(n));
    return out;
}

std::vector<Int> partial_quotients(const ThetaSpec& spec, std::size_t n_max) {
    ConvergentStream stream(spec);
    std::vector<Int> out;
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(stream.quotient(n));
    return out;
}

std::vector<Int> partial_quotients_from_cut(const LeftCutOracle& cut, std::size_t n_max) {
    std::vector<Int> out{Int(0)};
    std::vector<Convergent> cs{{0, Int(0), Int(1)}};
    while (out.size() <= n_max) {
        Int a = quotient_from_cut(cut, cs);
        cs.push_back(next_convergent(cs, a));
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Convergent> convergents_of(const std::vector<Int>& quotients) {
    std::vector<Convergent> cs;
    for (const Int& a : quotients) cs.push_back(next_convergent(cs, a));
    return cs;
}

std::vector<std::pair<std::int64_t, std::int64_t>> farey_sequence_small(std::uint64_t max_den) {
    if (max_den < 1) throw std::invalid_argument("farey_sequence: max_den must be >= 1");
    if (max_den >= (std::uint64_t{1} << 31)) throw std::invalid_argument("farey_sequence: max_den too large");
    using Frac = std::pair<std::int64_t, std::int64_t>;
    const auto n = static_cast<std::int64_t>(max_den);
    std::vector<Frac> out{{0, 1}};
    // In-order walk of the Stern-Brocot tree: keep inserting the mediant of
    // the current left neighbour and the nearest pending right endpoint.
    std::vector<Frac> pending{{1, 1}};
    while (!pending.empty()) {
        const Frac& left = out.back();
        Frac right = pending.back();
        if (left.second + right.second <= n) {
            pending.push_back({left.first + right.first, left.second + right.second});
        } else {
            pending.pop_back();
            out.push_back(right);
        }
    }
    return out;
}

std::vector<Rat> farey_sequence(std::uint64_t max_den) {
    std::vector<Rat> out;
    for (const auto& [p, q] : farey_sequence_small(max_den)) out.emplace_back(p, q);
    return out;
}

}  // namespace farey
