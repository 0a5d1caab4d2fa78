#include "rankgeo/code.hpp"

#include <string>

namespace rankgeo {

namespace {

// n^2 coordinates over F_q of a linearised polynomial: each coefficient
// expanded in fq_power_basis.
std::vector<Fe> flatten_over_fq(const LinearizedPoly& f) {
    const auto& ctx = *f.ctx;
    std::vector<Fe> out;
    out.reserve(ctx.n() * ctx.n());
    for (int i = 0; i < ctx.n(); ++i) {
        auto coords = ctx.coords_over_fq(f.coeffs[i]);
        out.insert(out.end(), coords.begin(), coords.end());
    }
    return out;
}

Matrix coefficient_matrix(const std::vector<LinearizedPoly>& basis) {
    Matrix m;
    for (const auto& f : basis) m.push_back(f.coeffs);
    return m;
}

}  // namespace

RankMetricCode make_code(FieldPtr ctx, ScalarField scalar_field,
                         std::vector<LinearizedPoly> basis) {
    for (const auto& f : basis)
        if (f.ctx != ctx)
            throw MixedContexts("basis polynomial from a different context");
    const int k = static_cast<int>(basis.size());
    if (k > 0) {
        if (scalar_field == ScalarField::Fqn) {
            if (matrix_rank(*ctx, coefficient_matrix(basis)) != k)
                throw DependentBasis(
                    "basis is linearly dependent over F_{q^n}");
        } else {
            Matrix m;
            for (const auto& f : basis) m.push_back(flatten_over_fq(f));
            if (matrix_rank(*ctx, m) != k)
                throw DependentBasis("basis is linearly dependent over F_q");
        }
    }
    return RankMetricCode{std::move(ctx), scalar_field, std::move(basis)};
}

int code_dim_over_fq(const RankMetricCode& c) {
    const int k = static_cast<int>(c.basis.size());
    return c.scalar_field == ScalarField::Fqn ? c.ctx->n() * k : k;
}

std::uint64_t code_size(const RankMetricCode& c, std::uint64_t budget) {
    const int dim = code_dim_over_fq(c);
    std::uint64_t size = 1;
    for (int i = 0; i < dim; ++i) {
        size *= c.ctx->q();
        if (size > budget)
            throw BudgetExceeded("|C| = q^" + std::to_string(dim) +
                                 " exceeds the enumeration budget");
    }
    return size;
}

RankDistribution rank_distribution(const RankMetricCode& c,
                                   std::uint64_t budget) {
    const int n = c.ctx->n();
    RankDistribution d;
    d.vector_counts.assign(n + 1, 0);
    d.projective_counts.assign(n + 1, 0);
    if (c.scalar_field == ScalarField::Fqn) {
        // rank is constant on projective points, so enumerate those
        code_size(c, budget);
        if (c.basis.empty()) {
            d.vector_counts[0] = 1;
            return d;
        }
        for_each_projective_point(
            c, [&](const LinearizedPoly& f) { ++d.projective_counts[rank(f)]; },
            budget);
        d.vector_counts[0] = 1;
        const std::uint64_t mult = c.ctx->order() - 1;
        for (int i = 1; i <= n; ++i)
            d.vector_counts[i] = d.projective_counts[i] * mult;
    } else {
        for_each_codeword(
            c, [&](const LinearizedPoly& f) { ++d.vector_counts[rank(f)]; },
            budget);
    }
    return d;
}

RankMetricCode delsarte_dual(const RankMetricCode& c) {
    const auto& ctx = *c.ctx;
    const int n = ctx.n();
    std::vector<LinearizedPoly> dual_basis;
    if (c.scalar_field == ScalarField::Fqn) {
        auto kernel = nullspace(ctx, coefficient_matrix(c.basis), n);
        for (auto& v : kernel) dual_basis.push_back(make_poly(c.ctx, v));
    } else {
        // unknowns: coords c_{ij} in F_q of the dual coefficients over
        // fq_power_basis; one F_q-linear constraint per basis element
        Matrix m;
        for (const auto& f : c.basis) {
            std::vector<Fe> row;
            row.reserve(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    row.push_back(ctx.rel_trace(
                        ctx.mul(f.coeffs[i], ctx.fq_power_basis()[j])));
            m.push_back(std::move(row));
        }
        auto kernel = nullspace(ctx, m, n * n);
        for (const auto& v : kernel) {
            std::vector<Fe> coeffs(n, Fe{0});
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    coeffs[i] = ctx.add(
                        coeffs[i],
                        ctx.mul(v[i * n + j], ctx.fq_power_basis()[j]));
            dual_basis.push_back(make_poly(c.ctx, coeffs));
        }
    }
    return make_code(c.ctx, c.scalar_field, std::move(dual_basis));
}

bool is_mrd(const RankMetricCode& c, std::uint64_t budget) {
    if (c.scalar_field != ScalarField::Fqn)
        throw WrongScalarField("MRD test is defined for F_{q^n}-linear codes");
    const int n = c.ctx->n();
    const int k = static_cast<int>(c.basis.size());
    auto d = rank_distribution(c, budget);
    for (int i = 1; i <= n - k; ++i)
        if (d.vector_counts[i] != 0) return false;
    return true;
}

bool common_kernel_trivial(const RankMetricCode& c) {
    if (c.basis.empty()) return false;  // the zero code kills everything
    const auto& ctx = *c.ctx;
    for (std::uint64_t x = 1; x < ctx.order(); ++x) {
        bool all_zero = true;
        for (const auto& f : c.basis)
            if (eval(f, Fe{static_cast<std::uint32_t>(x)}).idx != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return false;
    }
    return true;
}

RankMetricCode companion(const RankMetricCode& c) {
    if (c.scalar_field != ScalarField::Fqn)
        throw WrongScalarField(
            "the companion is defined for F_{q^n}-linear codes");
    return delsarte_dual(c);
}

}  // namespace rankgeo
