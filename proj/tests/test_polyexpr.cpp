#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankgeo/polyexpr.hpp"

using namespace rankgeo;

TEST_CASE("parsing the reference expressions") {
    auto ctx = FieldContext::make(2, 1, 3);
    CHECK(parse_linearized("x + x^q^1 + x^q^2", ctx) == trace_poly(ctx));
    CHECK(parse_linearized("x", ctx) == identity_poly(ctx));
    auto f = parse_linearized("g^3*x^q^2", ctx);
    CHECK(f.coeffs[0] == ctx->zero());
    CHECK(f.coeffs[1] == ctx->zero());
    CHECK(f.coeffs[2] == ctx->pow(ctx->generator(), 3));
}

TEST_CASE("coefficient forms") {
    auto ctx = FieldContext::make(3, 1, 2);
    auto f = parse_linearized("2*x", ctx);
    CHECK(f.coeffs[0] == ctx->add(ctx->one(), ctx->one()));
    auto g = parse_linearized("[1,2]*x^q^1", ctx);
    CHECK(g.coeffs[1] == ctx->from_digits({1, 2}));
    // repeated terms accumulate
    auto h = parse_linearized("x + x + x", ctx);
    CHECK(h.coeffs[0] == ctx->zero());
}

TEST_CASE("parse errors") {
    auto ctx = FieldContext::make(2, 1, 4);
    CHECK_THROWS_AS(parse_linearized("x^q^5", ctx), ExponentOutOfRange);
    CHECK_THROWS_AS(parse_linearized("", ctx), SyntaxError);
    CHECK_THROWS_AS(parse_linearized("x +", ctx), SyntaxError);
    CHECK_THROWS_AS(parse_linearized("y", ctx), UnknownSymbol);
    CHECK_THROWS_AS(parse_linearized("[1,0]*x", ctx), SyntaxError);
    CHECK_THROWS_AS(parse_linearized("g^2", ctx), SyntaxError);
}

TEST_CASE("render round-trips exhaustively on a small field") {
    auto ctx = FieldContext::make(2, 1, 2);
    for (std::uint32_t a = 0; a < ctx->order(); ++a)
        for (std::uint32_t b = 0; b < ctx->order(); ++b) {
            auto f = make_poly(ctx, {Fe{a}, Fe{b}});
            CHECK(parse_linearized(render_linearized(f), ctx) == f);
        }
    auto ctx3 = FieldContext::make(3, 1, 2);
    for (std::uint32_t a = 0; a < ctx3->order(); ++a)
        for (std::uint32_t b = 0; b < ctx3->order(); ++b) {
            auto f = make_poly(ctx3, {Fe{a}, Fe{b}});
            CHECK(parse_linearized(render_linearized(f), ctx3) == f);
        }
}

TEST_CASE("render uses canonical digit lists") {
    auto ctx = FieldContext::make(2, 1, 3);
    CHECK(render_linearized(zero_poly(ctx)) == "0*x");
    CHECK(render_linearized(identity_poly(ctx)) == "x");
    CHECK(render_linearized(trace_poly(ctx)) == "x + x^q^1 + x^q^2");
    auto f = monomial(ctx, ctx->generator(), 2);
    CHECK(render_linearized(f) == "[0,0,1]*x^q^2");
}

TEST_CASE("q-polynomial expressions") {
    CHECK(parse_qpoly("q^5-1").eval(2) == 31);
    CHECK(parse_qpoly("(q^5-1)(q^5-q^2)/(q-1)").eval(2) == 868);
    CHECK(parse_qpoly("-q + q") == IntPolynomial());
    CHECK(parse_qpoly("(q+1)^2") == parse_qpoly("q^2+2q+1"));
    CHECK_THROWS_AS(parse_qpoly("q +"), SyntaxError);
    CHECK_THROWS_AS(parse_qpoly("(q^2+1)/(q-1)"), InexactDivision);
    auto l = parse_qpoly_list("1; 0; q^5-1");
    REQUIRE(l.size() == 3);
    CHECK(l[0] == IntPolynomial::constant(1));
    CHECK(l[1].is_zero());
    CHECK(l[2] == parse_qpoly("q^5-1"));
}
