#include "farey/formula.hpp"
#include "farey/pwl.hpp"
#include "farey/random_formula.hpp"

#include <doctest.h>

using namespace farey;

namespace {

PwlFunction two_x_capped() {
    return PwlFunction::from_pieces({Rat(0), Rat(1, 2), Rat(1)}, {{2, 0}, {0, 1}});
}

Rat random_point(Rng& rng, long max_den = 97) {
    long d = std::uniform_int_distribution<long>(1, max_den)(rng);
    long c = std::uniform_int_distribution<long>(0, d)(rng);
    return Rat(c, d);
}

Rat random_interior(Rng& rng, long max_den = 97) {
    long d = std::uniform_int_distribution<long>(2, max_den)(rng);
    long c = std::uniform_int_distribution<long>(1, d - 1)(rng);
    return Rat(c, d);
}

}  // namespace

TEST_CASE("semantics of small formulas") {
    CHECK(semantics(parse("0")) == PwlFunction::constant(0));
    CHECK(semantics(parse("(X+X*)")) == PwlFunction::constant(1));
    CHECK(semantics(parse("(X+X)")) == two_x_capped());
    CHECK(semantics(parse("X*")) == star(PwlFunction::identity()));
}

TEST_CASE("star and oplus") {
    auto id = PwlFunction::identity();
    CHECK(star(PwlFunction::constant(0)) == PwlFunction::constant(1));
    CHECK(eval(star(id), Rat(1, 4)) == Rat(3, 4));
    CHECK(oplus(id, star(id)) == PwlFunction::constant(1));
    CHECK(oplus(id, id) == two_x_capped());
    CHECK(oplus(PwlFunction::constant(0), two_x_capped()) == two_x_capped());
}

TEST_CASE("evaluation") {
    CHECK(eval_formula(parse("(X+X)"), Rat(1, 3)) == Rat(2, 3));
    CHECK(eval_formula(parse("(X+X)"), Rat(3, 4)) == Rat(1));
    CHECK(eval_formula(parse("X*"), Rat(1, 4)) == Rat(3, 4));
    CHECK(eval(PwlFunction::constant(1), Rat(2, 7)) == Rat(1));
    CHECK(eval(two_x_capped(), Rat(1, 2)) == Rat(1));
    CHECK(eval(two_x_capped(), Rat(1, 5)) == Rat(2, 5));
    CHECK_THROWS_AS(eval(two_x_capped(), Rat(3, 2)), std::domain_error);
    CHECK_THROWS_AS(eval_formula(parse("X"), Rat(-1, 2)), std::domain_error);
}

TEST_CASE("one-sided slopes") {
    auto f = two_x_capped();
    CHECK(one_sided_slope(f, Rat(1, 2), Side::Right) == 0);
    CHECK(one_sided_slope(f, Rat(1, 2), Side::Left) == 2);
    CHECK(one_sided_slope(PwlFunction::identity(), Rat(1, 3), Side::Left) == 1);
    CHECK(one_sided_slope(PwlFunction::identity(), Rat(1, 3), Side::Right) == 1);
    CHECK(one_sided_slope(f, Rat(0), Side::Right) == 2);
    CHECK(one_sided_slope(f, Rat(1), Side::Left) == 0);
    CHECK_THROWS_AS(one_sided_slope(f, Rat(0), Side::Left), std::domain_error);
    CHECK_THROWS_AS(one_sided_slope(f, Rat(1), Side::Right), std::domain_error);

    CHECK(slope_by_induction(parse("(X+X)"), Rat(3, 4), Side::Right) == 0);
    CHECK(slope_by_induction(parse("(X+X)"), Rat(1, 2), Side::Right) == 0);
    CHECK(slope_by_induction(parse("(X+X)"), Rat(1, 2), Side::Left) == 2);
    CHECK(slope_by_induction(parse("(X+X)*"), Rat(1, 4), Side::Right) == -2);
    CHECK_THROWS_AS(slope_by_induction(parse("X"), Rat(1), Side::Right), std::domain_error);
}

TEST_CASE("abs_diff") {
    auto zero_pwl = abs_diff(parse("X"), parse("X")).function;
    CHECK(zero_pwl == PwlFunction::constant(0));
    auto d = abs_diff(parse("X"), parse("X*"));
    CHECK(d.function == PwlFunction::from_pieces({Rat(0), Rat(1, 2), Rat(1)}, {{-2, 1}, {2, -1}}));
    CHECK(print(d.formula) == "((X*+X*)*+(X**+X)*)");
    CHECK(abs_diff(parse("X"), parse("0")).function == PwlFunction::identity());
}

TEST_CASE("is_linear_on") {
    CHECK(is_linear_on(two_x_capped(), Rat(0), Rat(1, 4)));
    CHECK_FALSE(is_linear_on(two_x_capped(), Rat(1, 4), Rat(3, 4)));
    CHECK(is_linear_on(two_x_capped(), Rat(1, 2), Rat(1)));
    CHECK(is_linear_on(PwlFunction::constant(1), Rat(0), Rat(1)));
    CHECK_THROWS_AS(is_linear_on(two_x_capped(), Rat(1, 2), Rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(is_linear_on(two_x_capped(), Rat(3, 4), Rat(1, 4)), std::invalid_argument);
}

TEST_CASE("from_pieces validates and canonicalizes") {
    // Collinear pieces merge.
    auto merged = PwlFunction::from_pieces({Rat(0), Rat(1, 3), Rat(1)}, {{1, 0}, {1, 0}});
    CHECK(merged == PwlFunction::identity());
    CHECK(merged.piece_count() == 1);
    CHECK_THROWS_AS(PwlFunction::from_pieces({Rat(0), Rat(1, 2), Rat(1)}, {{1, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PwlFunction::from_pieces({Rat(0), Rat(1)}, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PwlFunction::from_pieces({Rat(0), Rat(1, 2)}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PwlFunction::constant(2), std::invalid_argument);
}

TEST_CASE("json round trip") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        auto p = semantics(random_formula(rng, 50));
        std::string text = to_json(p);
        CHECK(pwl_from_json(text) == p);
        CHECK(to_json(pwl_from_json(text)) == text);
    }
    CHECK(to_json(two_x_capped()) ==
          R"({"pieces":[{"x_lo":"0/1","x_hi":"1/2","m":"2","n":"0"},{"x_lo":"1/2","x_hi":"1/1","m":"0","n":"1"}]})");
    CHECK_THROWS_AS(pwl_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(pwl_from_json(R"({"pieces":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(pwl_from_json(R"({"pieces":[{"x_lo":"0","x_hi":"1","m":1,"n":"0"}]})"), std::invalid_argument);
    CHECK_THROWS_AS(pwl_from_json(R"({"pieces":[{"x_lo":"0","x_hi":"1/2","m":"0","n":"0"},{"x_lo":"2/3","x_hi":"1","m":"0","n":"0"}]})"),
                    std::invalid_argument);
}

TEST_CASE("semantics agrees with direct evaluation") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        Formula f = random_formula(rng, 60);
        auto p = semantics(f);
        for (int j = 0; j < 20; ++j) {
            Rat r = random_point(rng);
            REQUIRE(eval(p, r) == eval_formula(f, r));
        }
        // Breakpoints are where mistakes would hide.
        for (const Rat& x : p.breakpoints()) REQUIRE(eval(p, x) == eval_formula(f, x));
    }
}

TEST_CASE("slope by induction matches compiled slopes and the length bound") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        Formula f = random_formula(rng, 60);
        auto p = semantics(f);
        std::vector<Rat> points = p.breakpoints();
        for (int j = 0; j < 10; ++j) points.push_back(random_interior(rng));
        for (const Rat& z : points) {
            for (Side side : {Side::Left, Side::Right}) {
                if ((side == Side::Left && z == Rat(0)) || (side == Side::Right && z == Rat(1))) continue;
                Int s = slope_by_induction(f, z, side);
                REQUIRE(s == one_sided_slope(p, z, side));
                REQUIRE(abs(s) <= f.length());
            }
        }
    }
}

TEST_CASE("algebraic laws hold as exact equalities") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        auto p = semantics(random_formula(rng, 40));
        auto q = semantics(random_formula(rng, 40));
        auto r = semantics(random_formula(rng, 40));
        CHECK(star(star(p)) == p);
        CHECK(oplus(p, q) == oplus(q, p));
        CHECK(oplus(oplus(p, q), r) == oplus(p, oplus(q, r)));
        CHECK(oplus(p, star(PwlFunction::constant(0))) == PwlFunction::constant(1));
        // Join and meet defined from the monoid are max and min.
        CHECK(oplus(star(oplus(star(p), q)), q) == pointwise_max(p, q));
        CHECK(star(oplus(star(oplus(star(star(p)), star(q))), star(q))) == pointwise_min(p, q));
        CHECK(pointwise_leq(pointwise_min(p, q), pointwise_max(p, q)));
        CHECK(pointwise_leq(p, p));
    }
}

TEST_CASE("distance function equals the pointwise absolute difference") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Formula phi = random_formula(rng, 40);
        Formula psi = random_formula(rng, 40);
        auto d = abs_diff(phi, psi);
        CHECK(d.function == pointwise_abs_difference(semantics(phi), semantics(psi)));
        for (int j = 0; j < 10; ++j) {
            Rat r = random_point(rng);
            CHECK(eval(d.function, r) == abs(eval_formula(phi, r) - eval_formula(psi, r)));
        }
    }
}

TEST_CASE("scaled evaluation matches rational evaluation") {
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        Formula f = random_formula(rng, 60);
        FormulaProgram program(f);
        for (long d = 1; d <= 12; ++d)
            for (long c = 0; c <= d; ++c) {
                Rat expected = eval_formula(f, Rat(c, d)) * Rat(d);
                CHECK(Rat(program.eval_scaled(c, d)) == expected);
                CHECK(Rat(program.eval_scaled(Int(c), Int(d))) == expected);
            }
    }
}

TEST_CASE("shared subformulas compile once") {
    Formula f = Formula::gen();
    for (int i = 0; i < 60; ++i) f = Formula::plus(f, f);  // printed length ~ 2^62
    FormulaProgram program(f);
    CHECK(program.size() == 61);
    Int big = Int(1) << 60;
    CHECK(semantics(f) == PwlFunction::from_pieces({Rat(0), Rat(Int(1), big), Rat(1)}, {{big, 0}, {0, 1}}));
}
