#include <doctest.h>

#include "nonarch/eval.hpp"
#include "test_support.hpp"

using namespace nonarch;
using namespace nonarch::lang;
using testing::Rng;

namespace {
Value eval(const std::string& text) { return Evaluator{}.eval_text(text); }
Germ germ_of(const std::string& text) { return std::get<Germ>(eval(text)); }
}  // namespace

TEST_CASE("parsing the canonical germ form round-trips") {
    Germ g = germ_of("(2*w^2+1/3)/(w+5)");
    CHECK(germ_of(g.str()) == g);
}

TEST_CASE("precedence and associativity") {
    CHECK(germ_of("1+2*3") == Germ::from_rational(7));
    CHECK(germ_of("2*w^2") == Germ::from_rational(2) * Germ::omega().pow(2));
    CHECK(germ_of("-w^2") == -(Germ::omega().pow(2)));
    CHECK(germ_of("8/4/2") == Germ::from_rational(1));
    CHECK(germ_of("1-2-3") == Germ::from_rational(-4));
    CHECK(germ_of("w^-2") == Germ::epsilon().pow(2));
}

TEST_CASE("decimal literals convert exactly") {
    CHECK(germ_of("0.25") == Germ::from_rational(ExactRational(1, 4)));
    CHECK(germ_of("3.10") == Germ::from_rational(ExactRational(31, 10)));
}

TEST_CASE("eps is sugar for 1/w") {
    CHECK(germ_of("eps") == Germ::epsilon());
    CHECK(germ_of("eps*w") == Germ::from_rational(1));
}

TEST_CASE("syntax errors carry locations") {
    CHECK_THROWS_AS(eval("(1+"), SyntaxError);
    CHECK_THROWS_AS(eval("1 + * 2"), SyntaxError);
    CHECK_THROWS_AS(eval("foo"), SyntaxError);  // ident must open a call
    try {
        eval("1 +\n  * 2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.loc.line == 2);
        CHECK(e.loc.col == 3);
    }
}

TEST_CASE("non-integer exponents are rejected") {
    CHECK_THROWS_AS(eval("w ^ eps"), IntegerExponentRequired);
    CHECK_THROWS_AS(eval("w ^ 2.5"), IntegerExponentRequired);
    CHECK_THROWS_AS(eval("w ^ (2)"), IntegerExponentRequired);
}

TEST_CASE("function calls evaluate through the modules") {
    CHECK(value_str(eval("class(1/w)")) == "infinitesimal,pos");
    CHECK(value_str(eval("class(w)")) == "infinite,pos");
    CHECK(value_str(eval("rel(WW(0,eps), WW(0,1))")) == "left-in-right");
    CHECK(std::get<bool>(eval("in_monad(3+eps, 3)")));
    CHECK_FALSE(std::get<bool>(eval("in_galaxy(w, 0)")));
    CHECK(std::get<ExactRational>(eval("st((2*w+1)/(w+5))")) == ExactRational(2));
    CHECK(germ_of("witness(eps)") == Germ::from_rational(1));
    CHECK(germ_of("inv(w^2)") == Germ::epsilon().pow(2));
    CHECK(value_str(eval("sit(w, eps)")) == "4");
    CHECK(value_str(eval("case(0, 1)")).starts_with("1 "));
    CHECK(std::get<bool>(eval("member(WW(0,1), 100)")));
    CHECK(germ_of("iso(WW(5,2), 9)") == Germ::from_rational(2));
}

TEST_CASE("comparisons yield booleans") {
    CHECK(std::get<bool>(eval("w > 1000000000")));
    CHECK(std::get<bool>(eval("eps <= eps")));
    CHECK(std::get<bool>(eval("1/3 == 2/6")));
    CHECK_FALSE(std::get<bool>(eval("w^2 < w")));
}

TEST_CASE("module errors surface with location") {
    try {
        eval("1 + st(w)");
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.name == "NotFinite");
        CHECK(e.loc.col == 5);
    }
    try {
        eval("1/0");
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.name == "DivisionByZero");
    }
    CHECK_THROWS_AS(eval("rel(1, 2)"), TypeMismatch);
    CHECK_THROWS_AS(eval("st(1, 2)"), TypeMismatch);
    CHECK_THROWS_AS(eval("iso(WW(0,1), w)"), EvalError);
}

TEST_CASE("degree limit guards runaway expressions") {
    Evaluator tight(8);
    CHECK_THROWS_AS(tight.eval_text("w^9"), EvalError);
    CHECK(std::get<Germ>(tight.eval_text("w^8")) == Germ::omega().pow(8));
    try {
        tight.eval_text("w^4 * w^5");
        FAIL("expected DegreeLimit");
    } catch (const EvalError& e) {
        CHECK(e.name == "DegreeLimit");
    }
}

TEST_CASE("round-trip property on random germs") {
    Rng rng(51);
    Evaluator ev;
    for (int i = 0; i < 300; ++i) {
        Germ g = nonarch::testing::random_germ(rng, 6);
        CHECK(std::get<Germ>(ev.eval_text(g.str())) == g);
    }
}

TEST_CASE("value strings use the fixed vocabulary") {
    CHECK(value_str(eval("class(-w)")) == "infinite,neg");
    CHECK(value_str(eval("class(0)")) == "infinitesimal,zero");
    CHECK(value_str(eval("class(3)")) == "finite,pos");
    CHECK(value_str(eval("rel(WW(0,1), WW(w,1))")) == "disjoint");
    CHECK(value_str(eval("WW(0, eps)")) == "WW(0, (1) / (w))");
}
