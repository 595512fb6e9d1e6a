#include "farey/decide_m1.hpp"
#include "farey/effros_shen.hpp"
#include "farey/pwl.hpp"

#include "pairs.hpp"
#include "quad_surd.hpp"

#include <doctest.h>

#include <map>

using namespace farey;
using farey::testing::eval_surd;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

const ThetaSpec kGolden = PeriodicCF{ints({0}), ints({1})};
const ThetaSpec kSqrt2 = PeriodicCF{ints({0}), ints({2})};
const EffrosShenOptions kVerify{true};

// All formulas up to `max_len` symbols, built by length.
std::vector<Formula> all_formulas(std::uint64_t max_len) {
    std::vector<std::vector<Formula>> by_len(max_len + 1);
    by_len[1] = {Formula::zero(), Formula::gen()};
    for (std::uint64_t n = 2; n <= max_len; ++n) {
        for (const Formula& f : by_len[n - 1]) by_len[n].push_back(Formula::star(f));
        for (std::uint64_t l = 1; l + 4 <= n; ++l)
            for (const Formula& a : by_len[l])
                for (const Formula& b : by_len[n - 3 - l]) by_len[n].push_back(Formula::plus(a, b));
    }
    std::vector<Formula> out;
    for (auto& v : by_len) out.insert(out.end(), v.begin(), v.end());
    return out;
}

// A pair with different functions but the same value at the golden
// conjugate, found by brute force over short formulas.  Pairs whose
// functions are both constant 1 near θ are skipped as too easy.
std::pair<Formula, Formula> golden_pair() {
    std::map<std::pair<std::string, std::string>, Formula> seen;
    auto theta = farey::testing::golden_conjugate();
    for (const Formula& f : all_formulas(11)) {
        auto v = eval_surd(f, theta);
        if (v.b == Rat(0)) continue;  // want an irrational common value
        auto key = std::make_pair(to_string(v.a), to_string(v.b));
        auto [it, inserted] = seen.emplace(key, f);
        if (!inserted && semantics(it->second) != semantics(f)) return {it->second, f};
    }
    throw std::logic_error("no golden pair found");
}

}  // namespace

TEST_CASE("convergent decider examples") {
    CHECK(equal_cf(parse("X"), parse("X"), kGolden, kVerify));
    CHECK_FALSE(equal_cf(parse("X"), parse("X*"), kGolden, kVerify));
    CHECK(equal_cf(parse("(X+X)"), parse("0*"), kGolden, kVerify));
    CHECK(cf_index(parse("X")) == 6);
    CHECK(cf_index(parse("(X+X)")) == 12);  // 8 * 5 = 40, ceil(log2 40) = 6
}

TEST_CASE("golden pair found by brute force") {
    auto [phi, psi] = golden_pair();
    INFO(print(phi), " vs ", print(psi));
    CHECK_FALSE(equal_canonical(phi, psi).equal);
    CHECK(equal_cf(phi, psi, kGolden, kVerify));
    CHECK(equal_left_cut(phi, psi, left_cut(kGolden), kVerify));
    CHECK(equal_left_cut(phi, psi, left_cut(parse_theta("alg:poly=-1,1,1:lo=1/2:hi=2/3")), kVerify));
    CHECK_FALSE(equal_cf(phi, psi, kSqrt2, kVerify));
}

TEST_CASE("left-cut decider examples") {
    CHECK(equal_left_cut(parse("X"), parse("X"), left_cut(PiMinus3{}), kVerify));
    CHECK_FALSE(equal_left_cut(parse("X"), parse("X*"), left_cut(PiMinus3{}), kVerify));
    CHECK_FALSE(equal_left_cut(parse("X"), parse("X*"), left_cut(kGolden), kVerify));
}

TEST_CASE("value at theta") {
    auto x = value_at_theta(parse("X"), kGolden, 100);
    CHECK(x.lo < x.hi);
    CHECK(x.hi - x.lo <= Rat(1, 100));
    CHECK(Rat(618, 1000) < x.hi);
    CHECK(x.lo < Rat(619, 1000));
    auto z = value_at_theta(parse("0"), kGolden, 100);
    CHECK(z.lo == Rat(0));
    CHECK(z.hi == Rat(0));
    auto s = value_at_theta(parse("X*"), kGolden, 100);
    CHECK(s.lo == Rat(1) - x.hi);
    CHECK(s.hi == Rat(1) - x.lo);
    auto pi = value_at_theta(parse("(X+X)"), PiMinus3{}, 1000000);
    CHECK(Rat(283185, 1000000) < pi.hi);
    CHECK(pi.lo < Rat(283186, 1000000));
    CHECK_THROWS_AS(value_at_theta(parse("X"), kGolden, 0), std::invalid_argument);
}

TEST_CASE("deciders agree with each other and with exact field arithmetic") {
    Rng rng(41);
    struct Case {
        ThetaSpec spec;
        Rat lo, hi;
        std::optional<farey::testing::QuadSurd> surd;
    };
    std::vector<Case> cases = {
        {kGolden, Rat(3, 5), Rat(5, 8), farey::testing::golden_conjugate()},
        {kSqrt2, Rat(2, 5), Rat(5, 12), farey::testing::sqrt2_minus_1()},
        {InvE{}, Rat(32, 87), Rat(7, 19), std::nullopt},
        {PiMinus3{}, Rat(1, 8), Rat(1, 7), std::nullopt},
    };
    for (const auto& c : cases) {
        auto cut = left_cut(c.spec);
        int equal_count = 0;
        for (int i = 0; i < 120; ++i) {
            auto [phi, psi] = farey::testing::random_pair(rng, 40, c.lo, c.hi);
            bool by_cf = equal_cf(phi, psi, c.spec, kVerify);
            bool by_cut = equal_left_cut(phi, psi, cut, kVerify);
            REQUIRE(by_cf == by_cut);
            if (c.surd) REQUIRE(by_cf == (eval_surd(phi, *c.surd) == eval_surd(psi, *c.surd)));
            if (equal_canonical(phi, psi).equal) REQUIRE(by_cf);
            equal_count += by_cf;
            // Congruence.
            if (by_cf) {
                Formula chi = random_formula(rng, 15);
                CHECK(equal_cf(Formula::star(phi), Formula::star(psi), c.spec, kVerify));
                CHECK(equal_cf(Formula::plus(phi, chi), Formula::plus(psi, chi), c.spec, kVerify));
            }
        }
        CHECK(equal_count > 30);
    }
}
