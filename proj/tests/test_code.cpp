#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rankgeo/code.hpp"
#include "util.hpp"

using namespace rankgeo;
using testutil::random_code;
using testutil::same_span;

namespace {

RankMetricCode gabidulin2(FieldPtr ctx) {
    return make_code(ctx, ScalarField::Fqn,
                     {identity_poly(ctx), monomial(ctx, ctx->one(), 1)});
}

}  // namespace

TEST_CASE("make_code validates independence over the scalar field") {
    auto ctx = FieldContext::make(2, 1, 3);
    CHECK(gabidulin2(ctx).basis.size() == 2);
    Fe a = ctx->generator();
    CHECK_THROWS_AS(
        make_code(ctx, ScalarField::Fqn,
                  {identity_poly(ctx), monomial(ctx, a, 0)}),
        DependentBasis);
    // dependent over F_{q^n} but independent over F_q since a is not in F_q
    auto c = make_code(ctx, ScalarField::Fq,
                       {identity_poly(ctx), monomial(ctx, a, 0)});
    CHECK(code_dim_over_fq(c) == 2);
}

TEST_CASE("dimensions and sizes") {
    auto ctx = FieldContext::make(2, 1, 3);
    auto c = gabidulin2(ctx);
    CHECK(code_dim_over_fq(c) == 6);
    CHECK(code_size(c) == 64);
    auto zero = make_code(ctx, ScalarField::Fqn, {});
    CHECK(code_dim_over_fq(zero) == 0);
    CHECK(code_size(zero) == 1);
}

TEST_CASE("rank distribution of the Gabidulin code at q=2 n=3") {
    auto ctx = FieldContext::make(2, 1, 3);
    auto d = rank_distribution(gabidulin2(ctx));
    CHECK(d.vector_counts == std::vector<std::uint64_t>{1, 0, 49, 14});
    CHECK(d.projective_counts == std::vector<std::uint64_t>{0, 0, 7, 2});
}

TEST_CASE("rank distribution of degenerate codes") {
    auto ctx = FieldContext::make(2, 1, 3);
    auto zero = make_code(ctx, ScalarField::Fqn, {});
    CHECK(rank_distribution(zero).vector_counts ==
          std::vector<std::uint64_t>{1, 0, 0, 0});
    auto idc = make_code(ctx, ScalarField::Fqn, {identity_poly(ctx)});
    CHECK(rank_distribution(idc).vector_counts ==
          std::vector<std::uint64_t>{1, 0, 0, 7});
}

TEST_CASE("projective counts scale to vector counts for F_{q^n}-linear codes") {
    auto ctx = FieldContext::make(3, 1, 3);
    std::mt19937_64 rng(17);
    for (int s = 0; s < 5; ++s) {
        auto c = random_code(ctx, ScalarField::Fqn, 2, rng);
        auto d = rank_distribution(c);
        std::uint64_t total = 0;
        for (int i = 0; i <= ctx->n(); ++i) {
            if (i >= 1)
                CHECK(d.vector_counts[i] ==
                      d.projective_counts[i] * (ctx->order() - 1));
            total += d.vector_counts[i];
        }
        CHECK(total == code_size(c));
        CHECK(d.vector_counts[0] == 1);
    }
}

TEST_CASE("projective enumeration agrees with full enumeration") {
    auto ctx = FieldContext::make(2, 1, 4);
    std::mt19937_64 rng(23);
    auto c = random_code(ctx, ScalarField::Fqn, 2, rng);
    auto fast = rank_distribution(c);
    std::vector<std::uint64_t> slow(ctx->n() + 1, 0);
    for_each_codeword(c, [&](const LinearizedPoly& w) { ++slow[rank(w)]; });
    CHECK(fast.vector_counts == slow);
}

TEST_CASE("Delsarte duals of the n=5 Gabidulin-type codes") {
    for (int p : {2, 3}) {
        auto ctx = FieldContext::make(p, 1, 5);
        auto mono = [&](int i) { return monomial(ctx, ctx->one(), i); };
        auto c1 = make_code(ctx, ScalarField::Fqn, {mono(0), mono(1)});
        auto d1 = delsarte_dual(c1);
        CHECK(same_span(d1, make_code(ctx, ScalarField::Fqn,
                                      {mono(2), mono(3), mono(4)})));
        auto c2 = make_code(ctx, ScalarField::Fqn, {mono(0), mono(2)});
        auto d2 = delsarte_dual(c2);
        CHECK(same_span(d2, make_code(ctx, ScalarField::Fqn,
                                      {mono(1), mono(3), mono(4)})));
    }
}

TEST_CASE("dual of the zero code is everything; duality is an involution") {
    auto ctx = FieldContext::make(2, 1, 3);
    auto zero = make_code(ctx, ScalarField::Fqn, {});
    CHECK(code_dim_over_fq(delsarte_dual(zero)) == ctx->n() * ctx->n());
    std::mt19937_64 rng(31);
    for (auto scalar : {ScalarField::Fqn, ScalarField::Fq}) {
        for (int s = 0; s < 5; ++s) {
            int dim = scalar == ScalarField::Fqn ? 2 : 4;
            auto c = random_code(ctx, scalar, dim, rng);
            auto d = delsarte_dual(c);
            CHECK(code_dim_over_fq(c) + code_dim_over_fq(d) ==
                  ctx->n() * ctx->n());
            CHECK(same_span(delsarte_dual(d), c));
        }
    }
}

TEST_CASE("both bilinear forms give the same dual for F_{q^n}-linear codes") {
    auto ctx = FieldContext::make(2, 1, 4);
    std::mt19937_64 rng(37);
    auto c = random_code(ctx, ScalarField::Fqn, 2, rng);
    auto d = delsarte_dual(c);
    // every pair annihilates under the trace form as well
    for (const auto& f : c.basis)
        for (const auto& g : d.basis) {
            CHECK(dot(f, g) == ctx->zero());
            CHECK(trace_form(f, g) == ctx->zero());
        }
}

TEST_CASE("MRD detection") {
    for (int p : {2, 3})
        for (int n : {3, 4, 5}) {
            if (p == 3 && n == 5) continue;  // enumeration budget
            auto ctx = FieldContext::make(p, 1, n);
            CHECK(is_mrd(gabidulin2(ctx)));
        }
    auto ctx = FieldContext::make(2, 1, 4);
    auto xtr = make_code(ctx, ScalarField::Fqn,
                         {identity_poly(ctx), trace_poly(ctx)});
    CHECK_FALSE(is_mrd(xtr));
    auto k1 = make_code(ctx, ScalarField::Fqn, {identity_poly(ctx)});
    CHECK(is_mrd(k1));
    auto fq = make_code(ctx, ScalarField::Fq, {identity_poly(ctx)});
    CHECK_THROWS_AS(is_mrd(fq), WrongScalarField);
}

TEST_CASE("MRD duality") {
    auto ctx = FieldContext::make(2, 1, 4);
    auto c = gabidulin2(ctx);
    CHECK(is_mrd(c));
    CHECK(is_mrd(companion(c)));
}

TEST_CASE("common kernel triviality and the rank-1 disjointness criterion") {
    auto ctx = FieldContext::make(2, 1, 4);
    CHECK(common_kernel_trivial(gabidulin2(ctx)));
    auto tronly = make_code(ctx, ScalarField::Fqn, {trace_poly(ctx)});
    CHECK_FALSE(common_kernel_trivial(tronly));

    std::mt19937_64 rng(41);
    for (int s = 0; s < 10; ++s) {
        auto c = random_code(ctx, ScalarField::Fqn, 2, rng);
        bool trivial = common_kernel_trivial(c);
        bool rank1_in_dual = false;
        for_each_projective_point(delsarte_dual(c),
                                  [&](const LinearizedPoly& w) {
                                      if (rank(w) == 1) rank1_in_dual = true;
                                  });
        CHECK(trivial == !rank1_in_dual);
    }
}

TEST_CASE("companion dimensions") {
    auto ctx = FieldContext::make(2, 1, 5);
    auto c = gabidulin2(ctx);
    auto comp = companion(c);
    CHECK(comp.basis.size() == static_cast<std::size_t>(ctx->n()) - 2);
    CHECK(same_span(companion(comp), c));
    auto fq = make_code(ctx, ScalarField::Fq, {identity_poly(ctx)});
    CHECK_THROWS_AS(companion(fq), WrongScalarField);
}

TEST_CASE("enumeration budget is enforced") {
    auto ctx = FieldContext::make(2, 1, 5);
    std::mt19937_64 rng(43);
    auto c = random_code(ctx, ScalarField::Fqn, 5, rng);
    CHECK_THROWS_AS(code_size(c), BudgetExceeded);
    CHECK_THROWS_AS(rank_distribution(c), BudgetExceeded);
}
