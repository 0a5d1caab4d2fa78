#ifndef RANKGEO_TESTS_UTIL_HPP
#define RANKGEO_TESTS_UTIL_HPP

#include <random>

#include "rankgeo/code.hpp"
#include "rankgeo/linpoly.hpp"

namespace rankgeo::testutil {

inline Fe random_fe(const FieldContext& ctx, std::mt19937_64& rng) {
    return Fe{static_cast<std::uint32_t>(rng() % ctx.order())};
}

inline LinearizedPoly random_poly(FieldPtr ctx, std::mt19937_64& rng) {
    std::vector<Fe> coeffs(ctx->n());
    for (auto& c : coeffs) c = random_fe(*ctx, rng);
    return make_poly(ctx, std::move(coeffs));
}

// Random code with an independent basis; optionally retries until the basis
// kernels intersect trivially.
inline RankMetricCode random_code(FieldPtr ctx, ScalarField scalar, int dim,
                                  std::mt19937_64& rng,
                                  bool require_trivial_kernel = false) {
    while (true) {
        std::vector<LinearizedPoly> basis;
        for (int i = 0; i < dim; ++i) {
            LinearizedPoly f = random_poly(ctx, rng);
            while (f.is_zero()) f = random_poly(ctx, rng);
            basis.push_back(std::move(f));
        }
        try {
            RankMetricCode c = make_code(ctx, scalar, std::move(basis));
            if (require_trivial_kernel && !common_kernel_trivial(c)) continue;
            return c;
        } catch (const DependentBasis&) {
        }
    }
}

inline std::vector<Fe> flat_coords(const LinearizedPoly& f, bool over_fq) {
    std::vector<Fe> row;
    for (Fe c : f.coeffs) {
        if (over_fq) {
            auto cc = f.ctx->coords_over_fq(c);
            row.insert(row.end(), cc.begin(), cc.end());
        } else {
            row.push_back(c);
        }
    }
    return row;
}

// Span equality via stacked coefficient ranks over the scalar field.
inline bool same_span(const RankMetricCode& a, const RankMetricCode& b) {
    if (a.ctx != b.ctx || a.scalar_field != b.scalar_field) return false;
    if (a.basis.size() != b.basis.size()) return false;
    const bool over_fq = a.scalar_field == ScalarField::Fq;
    Matrix stacked;
    for (const auto& f : a.basis) stacked.push_back(flat_coords(f, over_fq));
    for (const auto& f : b.basis) stacked.push_back(flat_coords(f, over_fq));
    return matrix_rank(*a.ctx, stacked) == static_cast<int>(a.basis.size());
}

}  // namespace rankgeo::testutil

#endif
