#ifndef RANKGEO_CODE_HPP
#define RANKGEO_CODE_HPP

#include <cstdint>
#include <vector>

#include "rankgeo/linpoly.hpp"

namespace rankgeo {

enum class ScalarField { Fq, Fqn };

// An F_q- or F_{q^n}-subspace of End_{F_q}(F_{q^n}), given by an independent
// basis of linearised polynomials. Immutable after make_code.
struct RankMetricCode {
    FieldPtr ctx;
    ScalarField scalar_field = ScalarField::Fqn;
    std::vector<LinearizedPoly> basis;
};

// Verifies independence over the scalar field. An empty basis is the zero
// code.
RankMetricCode make_code(FieldPtr ctx, ScalarField scalar_field,
                         std::vector<LinearizedPoly> basis);

// dim over F_q: n*k for F_{q^n}-linear, basis size otherwise.
int code_dim_over_fq(const RankMetricCode& c);
// |C| = q^dim; throws BudgetExceeded above the cap.
std::uint64_t code_size(const RankMetricCode& c,
                        std::uint64_t budget = kDefaultEnumBudget);

struct RankDistribution {
    // A_0..A_n, counts of codewords of each rank
    std::vector<std::uint64_t> vector_counts;
    // v_1..v_n (index 0 unused), counts of projective points of Omega(C) of
    // each rank; filled for F_{q^n}-linear codes
    std::vector<std::uint64_t> projective_counts;
};

RankDistribution rank_distribution(const RankMetricCode& c,
                                   std::uint64_t budget = kDefaultEnumBudget);

// Annihilator under dot (F_{q^n}-linear) or under the trace form
// (F_q-linear). dim(C) + dim(C^perp) = n^2 over F_q.
RankMetricCode delsarte_dual(const RankMetricCode& c);

// Minimum nonzero rank >= n-k+1, i.e. A_i = 0 for 1 <= i <= n-k.
bool is_mrd(const RankMetricCode& c,
            std::uint64_t budget = kDefaultEnumBudget);

// true iff the basis kernels intersect trivially.
bool common_kernel_trivial(const RankMetricCode& c);

// delsarte_dual of an F_{q^n}-linear code, viewed as its companion subspace.
RankMetricCode companion(const RankMetricCode& c);

// (per^k - 1) / (per - 1) with an overflow-safe budget check.
inline std::uint64_t projective_count_checked(std::uint64_t per, int k,
                                              std::uint64_t budget) {
    std::uint64_t cnt = 0, powv = 1;
    for (int i = 0; i < k; ++i) {
        cnt += powv;
        if (cnt > budget)
            throw BudgetExceeded("projective point count exceeds budget");
        if (i + 1 < k) {
            powv *= per;
            if (powv > budget)
                throw BudgetExceeded("projective point count exceeds budget");
        }
    }
    return cnt;
}

// Visit all codewords; order: scalars iterate zero first, then
// generator-power order, the last basis index varying fastest.
template <class Fn>
void for_each_codeword(const RankMetricCode& c, Fn&& fn,
                       std::uint64_t budget = kDefaultEnumBudget) {
    const std::uint64_t total = code_size(c, budget);
    const bool big = c.scalar_field == ScalarField::Fqn;
    const std::uint64_t per = big ? c.ctx->order() : c.ctx->q();
    const int k = static_cast<int>(c.basis.size());
    std::vector<std::uint64_t> digitv(k, 0);
    LinearizedPoly word = zero_poly(c.ctx);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        word = zero_poly(c.ctx);
        for (int i = k - 1; i >= 0; --i) {
            std::uint64_t d = v % per;
            v /= per;
            if (d != 0)
                word = add(word, scale(c.ctx->scalar_at(d, big), c.basis[i]));
        }
        fn(word);
    }
}

// Visit one representative per projective point of Omega(C) for an
// F_{q^n}-linear code (normalized: leading scalar 1).
template <class Fn>
void for_each_projective_point(const RankMetricCode& c, Fn&& fn,
                               std::uint64_t budget = kDefaultEnumBudget) {
    if (c.scalar_field != ScalarField::Fqn)
        throw WrongScalarField("projective enumeration needs F_{q^n}-linear");
    const std::uint64_t per = c.ctx->order();
    const int k = static_cast<int>(c.basis.size());
    projective_count_checked(per, k, budget);
    for (int lead = 0; lead < k; ++lead) {
        std::uint64_t tail = 1;
        for (int i = lead + 1; i < k; ++i) tail *= per;
        for (std::uint64_t t = 0; t < tail; ++t) {
            LinearizedPoly word = c.basis[lead];
            std::uint64_t v = t;
            for (int i = k - 1; i > lead; --i) {
                std::uint64_t d = v % per;
                v /= per;
                if (d != 0)
                    word = add(word,
                               scale(c.ctx->scalar_at(d, true), c.basis[i]));
            }
            fn(word);
        }
    }
}

}  // namespace rankgeo

#endif
