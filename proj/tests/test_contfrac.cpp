#include "farey/bbp.hpp"
#include "farey/contfrac.hpp"

#include "machin.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace farey;

namespace {

std::vector<std::string> fractions(const std::vector<Convergent>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(to_string(c.p) + "/" + to_string(c.q));
    return out;
}

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

const ThetaSpec kGolden = PeriodicCF{ints({0}), ints({1})};
const ThetaSpec kSqrt2 = PeriodicCF{ints({0}), ints({2})};

}  // namespace

TEST_CASE("convergents of periodic fractions") {
    CHECK(fractions(convergents(kGolden, 5)) ==
          std::vector<std::string>{"0/1", "1/1", "1/2", "2/3", "3/5", "5/8"});
    CHECK(fractions(convergents(kSqrt2, 3)) == std::vector<std::string>{"0/1", "1/2", "2/5", "5/12"});
    CHECK(partial_quotients(PeriodicCF{ints({0}), ints({1, 2})}, 4) == ints({0, 1, 2, 1, 2}));
    CHECK(partial_quotients(PeriodicCF{ints({0, 5}), ints({1, 2})}, 4) == ints({0, 5, 1, 2, 1}));
}

TEST_CASE("1/e partial quotients") {
    CHECK(partial_quotients(InvE{}, 6) == ints({0, 2, 1, 2, 1, 1, 4}));
    CHECK(partial_quotients(InvE{}, 12) == ints({0, 2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8}));
}

TEST_CASE("pi - 3 partial quotients come from the left cut") {
    CHECK(partial_quotients(PiMinus3{}, 3) == ints({0, 7, 15, 1}));
    auto expected = ints({0, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2, 1, 84});
    CHECK(partial_quotients(PiMinus3{}, expected.size() - 1) == expected);
}

TEST_CASE("left cut examples") {
    auto pi = left_cut(PiMinus3{});
    CHECK(pi(Rat(1, 8)));
    CHECK_FALSE(pi(Rat(1, 7)));
    CHECK(pi(Rat(0)));
    CHECK_FALSE(pi(Rat(1)));
    auto golden = left_cut(kGolden);
    CHECK(golden(Rat(1, 2)));
    CHECK_FALSE(golden(Rat(2, 3)));
    CHECK(golden(Rat(3, 5)));
    CHECK_FALSE(golden(Rat(5, 8)));
    for (const ThetaSpec& spec : {kGolden, kSqrt2, ThetaSpec{InvE{}}, ThetaSpec{PiMinus3{}}})
        CHECK(left_cut(spec)(Rat(0)));
}

TEST_CASE("left cuts agree across descriptions of the same number") {
    auto by_cf = left_cut(kGolden);
    auto by_poly = left_cut(parse_theta("alg:poly=-1,1,1:lo=1/2:hi=2/3"));
    auto sqrt2_cf = left_cut(kSqrt2);
    auto sqrt2_poly = left_cut(make_algebraic(ints({-1, 2, 1}), Rat(0), Rat(1, 2)));
    for (long q = 1; q <= 60; ++q)
        for (long p = 0; p <= q; ++p) {
            REQUIRE(by_cf(Rat(p, q)) == by_poly(Rat(p, q)));
            REQUIRE(sqrt2_cf(Rat(p, q)) == sqrt2_poly(Rat(p, q)));
        }
    CHECK(partial_quotients_from_cut(by_poly, 20) == partial_quotients(kGolden, 20));
    CHECK(partial_quotients_from_cut(left_cut(InvE{}), 20) == partial_quotients(InvE{}, 20));
}

TEST_CASE("algebraic interval validation") {
    // 1 + x - x^2 has its root at 1.618..., outside [1/2, 2/3].
    CHECK_THROWS_AS(parse_theta("alg:poly=1,1,-1:lo=1/2:hi=2/3"), std::invalid_argument);
    // Rational root 1/2.
    CHECK_THROWS_AS(make_algebraic(ints({-1, 2}), Rat(1, 4), Rat(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(make_algebraic(ints({1, -5, 6}), Rat(0), Rat(2, 5)), std::invalid_argument);  // root 1/3
    // (2x-1)(x^2-2)... root 1/2 in [1/4,3/4]; other roots outside.
    CHECK_THROWS_AS(make_algebraic(ints({2, -4, -1, 2}), Rat(1, 4), Rat(3, 4)), std::invalid_argument);
    // Two roots: (x^2 - 1/8) style, 8x^2 - 8x + 1 has roots 0.146 and 0.854.
    CHECK_THROWS_AS(make_algebraic(ints({1, -8, 8}), Rat(0), Rat(1)), std::invalid_argument);
    // Negating normalizes the sign convention.
    auto alg = make_algebraic(ints({1, -1, -1}), Rat(1, 2), Rat(2, 3));
    CHECK(alg.poly == ints({-1, 1, 1}));
    CHECK_THROWS_AS(parse_theta("cf:1;1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta("cf:0;"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta("cf:0;0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta("bogus"), std::invalid_argument);
}

TEST_CASE("theta spec text round trip") {
    for (const char* text : {"cf:0;1", "cf:0,3;1,2", "inv-e", "pi-3", "alg:poly=-1,1,1:lo=1/2:hi=2/3"})
        CHECK(to_string(parse_theta(text)) == text);
}

TEST_CASE("bbp digits") {
    CHECK(bbp_hex_digits(1) == "2");
    CHECK(bbp_hex_digits(4) == "243F");
    CHECK(bbp_hex_digits(10) == "243F6A8885");
    std::string machin = farey::testing::machin_hex_digits(60, 80);
    REQUIRE(machin.size() >= 60);
    CHECK(bbp_hex_digits(60) == machin.substr(0, 60));
    CHECK(bbp_hex_digits(300).substr(0, 60) == machin.substr(0, 60));
    CHECK(bbp_hex_digits(700).substr(0, 300) == bbp_hex_digits(300));
}

TEST_CASE("farey sequences") {
    CHECK(farey_sequence(1) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(farey_sequence(2) == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
    CHECK(farey_sequence(3) == std::vector<Rat>{Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)});
    for (long n = 1; n <= 40; ++n) {
        std::vector<Rat> all;
        for (long q = 1; q <= n; ++q)
            for (long p = 0; p <= q; ++p)
                if (std::gcd(p, q) == 1) all.emplace_back(p, q);
        std::sort(all.begin(), all.end());
        REQUIRE(farey_sequence(static_cast<std::uint64_t>(n)) == all);
    }
    CHECK_THROWS_AS(farey_sequence(0), std::invalid_argument);
}

TEST_CASE("convergent lemmas on built-in numbers") {
    for (const ThetaSpec& spec : {kGolden, kSqrt2, ThetaSpec{InvE{}}, ThetaSpec{PiMinus3{}}}) {
        auto cs = convergents(spec, 40);
        auto as = partial_quotients(spec, 40);
        Int max_a = 0;
        for (std::size_t n = 0; n < cs.size(); ++n) {
            max_a = std::max(max_a, as[n]);
            if (n + 1 < cs.size()) {
                Int det = cs[n + 1].p * cs[n].q - cs[n].p * cs[n + 1].q;
                CHECK(det == (n % 2 == 0 ? 1 : -1));
            }
            if (n >= 2) {
                Int two_pow = Int(1) << (n - 2), three_pow;
                mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, n - 2);
                CHECK(two_pow * cs[n].q > three_pow);
                Int bound;
                Int base = 2 * max_a * cs[1].q;
                mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), n);
                CHECK(cs[n].q < bound);
            }
        }
    }
}

TEST_CASE("the convergent index used by the decider exceeds twice the length") {
    // q at index 2*ceil(log2(8m)) is > 2m for every m.
    for (const ThetaSpec& spec : {kGolden, kSqrt2, ThetaSpec{InvE{}}, ThetaSpec{PiMinus3{}}}) {
        ConvergentStream stream(spec);
        for (long m = 1; m <= 4096; ++m) {
            std::size_t ceil_log = 0;
            while ((1L << ceil_log) < 8 * m) ++ceil_log;
            REQUIRE(stream.convergent(2 * ceil_log).q > 2 * m);
        }
    }
}

TEST_CASE("a single factor log2(8m) is not enough for the golden ratio") {
    // n = 10 > log2(8 * 127), yet q_10 = 89 < 254.
    auto cs = convergents(kGolden, 10);
    CHECK(10 > std::log2(8.0 * 127));
    CHECK(cs[10].q == 89);
    CHECK(cs[10].q < 2 * 127);
}
