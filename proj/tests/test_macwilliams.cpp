#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rankgeo/code.hpp"
#include "rankgeo/macwilliams.hpp"
#include "rankgeo/polyexpr.hpp"
#include "util.hpp"

using namespace rankgeo;
using testutil::random_code;

namespace {

std::vector<BigInt> to_bigint(const RankDistribution& d) {
    std::vector<BigInt> out;
    for (auto v : d.vector_counts) out.emplace_back(v);
    return out;
}

// The worked k=m=n=5 example: A and B as closed forms in q.
std::vector<IntPolynomial> example_A() {
    return parse_qpoly_list(
        "1; 0; 0; q^5-1; (q^5-1)(q^5-q^2)/(q-1);"
        "(q^5-1)(q^5-(q^5-q^2)/(q-1))");
}

std::vector<IntPolynomial> example_B() {
    return parse_qpoly_list(
        "1; 0; q^5-1;"
        "(q^5-1)(q^6+q^5+2q^4+2q^3+q^2);"
        "(q^5-1)(q^9+q^8-q^6-2q^5-3q^4-2q^3-q^2);"
        "(q^5-1)(q^10-q^9-q^8+2q^5+q^4)");
}

}  // namespace

TEST_CASE("gaussian binomials, integer and symbolic") {
    CHECK(gauss_int(2, 1, 2) == 3);
    CHECK(gauss_int(4, 2, 2) == 35);
    CHECK(gauss_int(3, 2, 2) == 7);
    CHECK(gauss_int(3, 1, 2) == 7);
    CHECK(gauss_int(3, 0, 2) == 1);
    CHECK(gauss_int(3, 4, 2) == 0);
    CHECK(gauss_int(3, -1, 2) == 0);
    CHECK(gauss_poly(2, 1) == parse_qpoly("q+1"));
    CHECK(gauss_poly(4, 2) == parse_qpoly("q^4+q^3+2q^2+q+1"));
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= a; ++b)
            for (int q : {2, 3, 5})
                CHECK(gauss_poly(a, b).eval(q) == gauss_int(a, b, q));
}

TEST_CASE("brute-force subspace count matches gauss(4,2,2)") {
    // count 2-dimensional subspaces of F_2^4 by counting rank-2 pair spans
    int pairs = 0;
    for (int v = 1; v < 16; ++v)
        for (int w = 1; w < 16; ++w)
            if (w != v) ++pairs;
    // each 2-dim subspace has (4-1)(4-2) = 6 ordered independent pairs
    CHECK(pairs / 6 == 35);
}

TEST_CASE("symbolic dual distribution reproduces the worked n=5 example") {
    DualParams params{5, 5, 10};
    auto B = dual_distribution_symbolic(example_A(), params);
    auto expect = example_B();
    REQUIRE(B.size() == expect.size());
    for (std::size_t i = 0; i < B.size(); ++i) CHECK(B[i] == expect[i]);
    CHECK(B[2] == parse_qpoly("q^5-1"));
}

TEST_CASE("the worked example at q=2") {
    DualParams params{5, 5, 10};
    std::vector<BigInt> A;
    for (const auto& a : example_A()) A.push_back(a.eval(2));
    CHECK(A == std::vector<BigInt>{1, 0, 0, 31, 868, 124});
    auto B = dual_distribution(A, params, 2);
    CHECK(B == std::vector<BigInt>{1, 0, 31, 4588, 17732, 10416});
    BigInt total = 0;
    for (const auto& b : B) total += b;
    CHECK(total == 32768);  // 2^15 = q^{25-10}
}

TEST_CASE("dual of the zero code is the full-space rank census") {
    DualParams params{2, 2, 0};
    auto B = dual_distribution({1, 0, 0}, params, 2);
    CHECK(B == std::vector<BigInt>{1, 9, 6});
}

TEST_CASE("dual of everything is the zero code") {
    DualParams params{2, 2, 4};
    auto B = dual_distribution({1, 9, 6}, params, 2);
    CHECK(B == std::vector<BigInt>{1, 0, 0});
}

TEST_CASE("symbolic and integer modes agree at q in {2,3,4,5}") {
    DualParams params{5, 5, 10};
    auto Bs = dual_distribution_symbolic(example_A(), params);
    for (int q : {2, 3, 4, 5}) {
        std::vector<BigInt> A;
        for (const auto& a : example_A()) A.push_back(a.eval(q));
        auto Bi = dual_distribution(A, params, q);
        REQUIRE(Bi.size() == Bs.size());
        for (std::size_t i = 0; i < Bi.size(); ++i)
            CHECK(Bs[i].eval(q) == Bi[i]);
    }
}

TEST_CASE("recursion inverts enumeration on random codes") {
    std::mt19937_64 rng(67);
    for (auto [p, n] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        auto ctx = FieldContext::make(p, 1, n);
        for (auto scalar : {ScalarField::Fqn, ScalarField::Fq}) {
            int dim = scalar == ScalarField::Fqn ? 1 : n;
            auto c = random_code(ctx, scalar, dim, rng);
            auto dual = delsarte_dual(c);
            DualParams params{n, n,
                              static_cast<long long>(code_dim_over_fq(c))};
            auto B = dual_distribution(to_bigint(rank_distribution(c)), params,
                                       p);
            auto direct = to_bigint(rank_distribution(dual));
            CHECK(B == direct);
        }
    }
}

TEST_CASE("involution and totals") {
    std::mt19937_64 rng(71);
    auto ctx = FieldContext::make(2, 1, 3);
    for (int s = 0; s < 10; ++s) {
        auto c = random_code(ctx, ScalarField::Fq, 4, rng);
        auto A = to_bigint(rank_distribution(c));
        int n = ctx->n();
        long long d = code_dim_over_fq(c);
        auto B = dual_distribution(A, DualParams{n, n, d}, 2);
        BigInt total = 0;
        for (const auto& b : B) total += b;
        BigInt expect = 1;
        for (long long i = 0; i < n * n - d; ++i) expect *= 2;
        CHECK(total == expect);
        auto back =
            dual_distribution(B, DualParams{n, n, n * n - d}, 2);
        CHECK(back == A);
    }
}

TEST_CASE("negative counts from inconsistent input are rejected") {
    DualParams params{2, 2, 2};
    CHECK_THROWS_AS(dual_distribution({1, 5, 100}, params, 2), NegativeCount);
    // |C| = q^3 forces a q^{-1} shift that no cancellation repairs
    std::vector<IntPolynomial> badA = {IntPolynomial::constant(1),
                                       parse_qpoly("q"), IntPolynomial()};
    CHECK_THROWS_AS(dual_distribution_symbolic(badA, DualParams{2, 2, 3}),
                    NonPolynomialResult);
}

TEST_CASE("sum identity and closed form for the top coefficient") {
    auto ctx = FieldContext::make(2, 1, 3);
    auto gab = make_code(ctx, ScalarField::Fqn,
                         {identity_poly(ctx), monomial(ctx, ctx->one(), 1)});
    auto A = to_bigint(rank_distribution(gab));
    CHECK(sum_identity_check(A, 3, 2));
    CHECK(a_top_formula(A, 3, 2) == 49);
    CHECK(A[2] == 49);

    auto ctx3 = FieldContext::make(3, 1, 3);
    auto gab3 = make_code(ctx3, ScalarField::Fqn,
                          {identity_poly(ctx3), monomial(ctx3, ctx3->one(), 1)});
    auto A3 = to_bigint(rank_distribution(gab3));
    CHECK(a_top_formula(A3, 3, 3) == 338);
    CHECK(A3[2] == 338);

    auto ctx4 = FieldContext::make(2, 1, 4);
    auto xtr = make_code(ctx4, ScalarField::Fqn,
                         {identity_poly(ctx4), trace_poly(ctx4)});
    auto A4 = to_bigint(rank_distribution(xtr));
    CHECK(sum_identity_check(A4, 4, 2));
    CHECK(a_top_formula(A4, 4, 2) == A4[3]);
}

TEST_CASE("symbolic sum identity for the Gabidulin family") {
    // A_{n-1} = (q^n-1)^2/(q-1), other middle entries zero, A_n the rest
    for (int n : {3, 4, 5}) {
        std::vector<IntPolynomial> A(n + 1);
        A[0] = IntPolynomial::constant(1);
        for (int i = 1; i < n - 1; ++i) A[i] = IntPolynomial();
        A[n - 1] = parse_qpoly("(q^" + std::to_string(n) + "-1)^2/(q-1)");
        auto qn = parse_qpoly("q^" + std::to_string(2 * n));
        auto sum = A[0] + A[n - 1];
        A[n] = qn - sum;
        CHECK(sum_identity_check_symbolic(A, n));
        CHECK(a_top_formula_symbolic(A, n) == A[n - 1]);
    }
}

TEST_CASE("B1 vanishes and B2 matches the geometric sum") {
    auto ctx = FieldContext::make(2, 1, 4);
    auto gab = make_code(ctx, ScalarField::Fqn,
                         {identity_poly(ctx), monomial(ctx, ctx->one(), 1)});
    auto A = to_bigint(rank_distribution(gab));
    CHECK(b1_is_zero(A, 4, 2));
    auto b2 = b2_identity(A, 4, 2);
    CHECK(b2.lhs == 0);
    CHECK(b2.rhs == 0);
    CHECK(b2.equal);

    auto xtr = make_code(ctx, ScalarField::Fqn,
                         {identity_poly(ctx), trace_poly(ctx)});
    auto A2 = to_bigint(rank_distribution(xtr));
    CHECK(b1_is_zero(A2, 4, 2));
    auto b22 = b2_identity(A2, 4, 2);
    CHECK(b22.equal);
    CHECK(b22.lhs == A2[2] * gauss_int(2, 2, 2) + A2[1] * gauss_int(3, 2, 2));
}

TEST_CASE("polynomial parser handles the closed-form syntax") {
    CHECK(parse_qpoly("(q^5-1)(q^5-q^2)/(q-1)").eval(2) == 868);
    CHECK(parse_qpoly("q^2 - 2q + 1") == parse_qpoly("(q-1)^2"));
    CHECK(parse_qpoly("3").eval(10) == 3);
    CHECK_THROWS_AS(parse_qpoly("(q-1"), SyntaxError);
    CHECK_THROWS_AS(parse_qpoly("(q^2-1)/(q+2)"), InexactDivision);
    CHECK(parse_qpoly_list("1;q;q^2").size() == 3);
}

TEST_CASE("IntPolynomial rendering") {
    CHECK(parse_qpoly("q^5-1").to_string() == "q^5 - 1");
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(parse_qpoly("q").to_string() == "q");
    CHECK(parse_qpoly("2q^3+q-7").to_string() == "2*q^3 + q - 7");
}
