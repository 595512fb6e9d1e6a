#include "farey/formula.hpp"
#include "farey/pwl.hpp"
#include "farey/random_formula.hpp"

#include <doctest.h>

using namespace farey;

namespace {

const Formula X = Formula::gen();
const Formula Z = Formula::zero();
Formula S(const Formula& f) { return Formula::star(f); }
Formula P(const Formula& a, const Formula& b) { return Formula::plus(a, b); }

}  // namespace

TEST_CASE("parse core syntax") {
    CHECK(parse("X*") == S(X));
    CHECK(parse("(X+X)") == P(X, X));
    CHECK(parse("((X*+X)*+X)") == P(S(P(S(X), X)), X));
    CHECK(parse(" ( X \xE2\x8A\x95 0 ) ") == P(X, Z));
    CHECK(parse("X**") == S(S(X)));
}

TEST_CASE("print is canonical") {
    CHECK(print(S(X)) == "X*");
    CHECK(print(P(X, Z)) == "(X+0)");
    CHECK(print(P(S(X), S(X))) == "(X*+X*)");
    CHECK(print(P(X, Z), {true}) == "(X\xE2\x8A\x95""0)");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("(X+X"), ParseError);
    CHECK_THROWS_AS(parse("X)"), ParseError);
    CHECK_THROWS_AS(parse("(X X)"), ParseError);
    CHECK_THROWS_AS(parse("Y"), ParseError);
    CHECK_THROWS_AS(parse("0.X"), ParseError);
    CHECK_THROWS_AS(parse("12"), ParseError);
    try {
        parse("(X+X))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("length counts every character of the core string") {
    CHECK(length(X) == 1);
    CHECK(length(P(X, X)) == 5);
    CHECK(length(S(P(S(X), S(X)))) == 8);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Formula f = random_formula(rng, 40);
        CHECK(print(f).size() == f.length());
        CHECK(f.length() <= 40);
    }
}

TEST_CASE("scalar_multiple associates left") {
    CHECK(scalar_multiple(1, X) == X);
    CHECK(scalar_multiple(2, X) == P(X, X));
    CHECK(scalar_multiple(3, X) == P(P(X, X), X));
    CHECK(parse("3.X") == P(P(X, X), X));
    CHECK_THROWS_AS(scalar_multiple(0, X), std::invalid_argument);
}

TEST_CASE("sugar expands to core connectives") {
    CHECK(parse("(X|0)") == P(S(P(S(X), Z)), Z));
    CHECK(parse("(X&0)") == S(parse("(X*|0*)")));
    CHECK(print(parse("(X|X*)")) == "((X*+X*)*+X*)");
    // Lengths are measured after expansion.
    CHECK(parse("2.(X|0)").length() == 2 * parse("(X|0)").length() + 3);
}

TEST_CASE("sugar preserves semantics") {
    CHECK(semantics(parse("(X|X*)")) == pointwise_max(PwlFunction::identity(), star(PwlFunction::identity())));
    CHECK(semantics(parse("(X&X*)")) == pointwise_min(PwlFunction::identity(), star(PwlFunction::identity())));
    CHECK(semantics(parse("3.X")) == semantics(parse("((X+X)+X)")));
}

TEST_CASE("round trip on random formulas") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Formula f = random_formula(rng, 60);
        CHECK(parse(print(f)) == f);
        CHECK(print(parse(print(f, {true}))) == print(f));
    }
}

TEST_CASE("random_equivalent keeps the function") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Formula f = random_formula(rng, 30);
        CHECK(semantics(random_equivalent(f, rng, 4)) == semantics(f));
    }
}
