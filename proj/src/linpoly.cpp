#include "rankgeo/linpoly.hpp"

#include <string>

namespace rankgeo {

namespace {
void require_same_ctx(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (f.ctx != g.ctx)
        throw MixedContexts("operands belong to different field contexts");
}
}  // namespace

LinearizedPoly make_poly(FieldPtr ctx, std::vector<Fe> coeffs) {
    if (static_cast<int>(coeffs.size()) != ctx->n())
        throw LengthMismatch("expected " + std::to_string(ctx->n()) +
                             " coefficients");
    return LinearizedPoly{std::move(ctx), std::move(coeffs)};
}

LinearizedPoly zero_poly(FieldPtr ctx) {
    std::vector<Fe> c(ctx->n(), Fe{0});
    return LinearizedPoly{std::move(ctx), std::move(c)};
}

LinearizedPoly monomial(FieldPtr ctx, Fe coef, int i) {
    if (i < 0 || i >= ctx->n())
        throw ExponentOutOfRange("q-exponent " + std::to_string(i) +
                                 " out of [0, n)");
    auto f = zero_poly(ctx);
    f.coeffs[i] = coef;
    return f;
}

LinearizedPoly identity_poly(FieldPtr ctx) {
    return monomial(ctx, ctx->one(), 0);
}

LinearizedPoly trace_poly(FieldPtr ctx) {
    std::vector<Fe> c(ctx->n(), ctx->one());
    return LinearizedPoly{std::move(ctx), std::move(c)};
}

Fe eval(const LinearizedPoly& f, Fe x) {
    const auto& ctx = *f.ctx;
    Fe acc{0}, xq = x;
    for (int i = 0; i < ctx.n(); ++i) {
        if (i > 0) xq = ctx.frobenius(xq, 1);
        if (f.coeffs[i].idx != 0) acc = ctx.add(acc, ctx.mul(f.coeffs[i], xq));
    }
    return acc;
}

LinearizedPoly add(const LinearizedPoly& f, const LinearizedPoly& g) {
    require_same_ctx(f, g);
    auto r = f;
    for (int i = 0; i < f.ctx->n(); ++i)
        r.coeffs[i] = f.ctx->add(f.coeffs[i], g.coeffs[i]);
    return r;
}

LinearizedPoly scale(Fe c, const LinearizedPoly& f) {
    auto r = f;
    for (auto& a : r.coeffs) a = f.ctx->mul(c, a);
    return r;
}

LinearizedPoly lincomb(const std::vector<Fe>& scalars,
                       const std::vector<LinearizedPoly>& polys) {
    if (scalars.size() != polys.size())
        throw LengthMismatch("scalar and polynomial counts differ");
    if (polys.empty()) throw LengthMismatch("lincomb of empty sequence");
    for (std::size_t i = 1; i < polys.size(); ++i)
        require_same_ctx(polys[0], polys[i]);
    auto r = zero_poly(polys[0].ctx);
    for (std::size_t i = 0; i < polys.size(); ++i)
        r = add(r, scale(scalars[i], polys[i]));
    return r;
}

LinearizedPoly compose(const LinearizedPoly& g, const LinearizedPoly& f) {
    require_same_ctx(f, g);
    const auto& ctx = *f.ctx;
    const int n = ctx.n();
    auto r = zero_poly(f.ctx);
    for (int m = 0; m < n; ++m) {
        if (g.coeffs[m].idx == 0) continue;
        for (int i = 0; i < n; ++i) {
            Fe fm = ctx.frobenius(f.coeffs[((i - m) % n + n) % n], m);
            r.coeffs[i] = ctx.add(r.coeffs[i], ctx.mul(g.coeffs[m], fm));
        }
    }
    return r;
}

Fe dot(const LinearizedPoly& f, const LinearizedPoly& g) {
    require_same_ctx(f, g);
    Fe acc{0};
    for (int i = 0; i < f.ctx->n(); ++i)
        acc = f.ctx->add(acc, f.ctx->mul(f.coeffs[i], g.coeffs[i]));
    return acc;
}

Fe trace_form(const LinearizedPoly& f, const LinearizedPoly& g) {
    return f.ctx->rel_trace(dot(f, g));
}

Matrix twist_matrix(const LinearizedPoly& f) {
    const auto& ctx = *f.ctx;
    const int n = ctx.n();
    Matrix m(n, std::vector<Fe>(n, Fe{0}));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = ctx.frobenius(f.coeffs[((j - i) % n + n) % n], i);
    return m;
}

int rank(const LinearizedPoly& f) {
    if (f.is_zero()) return 0;
    return matrix_rank(*f.ctx, twist_matrix(f));
}

int kernel_dim(const LinearizedPoly& f) {
    const auto& ctx = *f.ctx;
    std::uint64_t roots = 0;
    for (std::uint64_t x = 0; x < ctx.order(); ++x)
        if (eval(f, Fe{static_cast<std::uint32_t>(x)}).idx == 0) ++roots;
    // root count is q^dim for a linearised polynomial
    int dim = 0;
    std::uint64_t v = roots;
    while (v > 1) {
        if (v % ctx.q() != 0)
            throw Error("root count is not a power of q (internal)");
        v /= ctx.q();
        ++dim;
    }
    return dim;
}

bool is_invertible(const LinearizedPoly& f) { return rank(f) == f.ctx->n(); }

bool point_rank_stratum(const LinearizedPoly& f, int i) {
    if (f.is_zero())
        throw ZeroVector("the zero map does not define a projective point");
    return rank(f) <= i;
}

}  // namespace rankgeo
