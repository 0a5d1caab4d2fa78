#include "rankgeo/linset.hpp"

#include <random>
#include <string>

#include "rankgeo/macwilliams.hpp"

namespace rankgeo {

namespace {

void require_shared_ctx(const std::vector<LinearizedPoly>& fs) {
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (fs[i].ctx != fs[0].ctx)
            throw MixedContexts("defining tuple spans multiple contexts");
}

int log_q_exact(std::uint64_t v, std::uint64_t q) {
    int k = 0;
    while (v > 1) {
        if (v % q != 0)
            throw Error("count is not a power of q (internal)");
        v /= q;
        ++k;
    }
    return k;
}

// Visit all normalized covectors/points of PG(k-1, q^n).
template <class Fn>
void for_each_normalized_tuple(const FieldContext& ctx, int k,
                               std::uint64_t budget, Fn&& fn) {
    const std::uint64_t per = ctx.order();
    projective_count_checked(per, k, budget);
    std::vector<Fe> tup(k, Fe{0});
    for (int lead = 0; lead < k; ++lead) {
        std::uint64_t tail = 1;
        for (int i = lead + 1; i < k; ++i) tail *= per;
        for (std::uint64_t t = 0; t < tail; ++t) {
            for (int i = 0; i < lead; ++i) tup[i] = Fe{0};
            tup[lead] = ctx.one();
            std::uint64_t v = t;
            for (int i = k - 1; i > lead; --i) {
                tup[i] = Fe{static_cast<std::uint32_t>(v % per)};
                v /= per;
            }
            fn(tup);
        }
    }
}

}  // namespace

ProjPoint normalize_point(const FieldContext& ctx, std::vector<Fe> coords) {
    int lead = -1;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i].idx != 0) {
            lead = static_cast<int>(i);
            break;
        }
    if (lead < 0)
        throw ZeroVector("the zero tuple does not define a projective point");
    Fe inv = ctx.inv(coords[lead]);
    for (auto& c : coords) c = ctx.mul(c, inv);
    return ProjPoint{std::move(coords)};
}

LinearSetSummary build_linear_set(const std::vector<LinearizedPoly>& fs) {
    const int k = static_cast<int>(fs.size());
    if (k < 2) throw LengthMismatch("a linear set needs k >= 2 maps");
    require_shared_ctx(fs);
    const auto& ctx = *fs[0].ctx;
    const int n = ctx.n();

    LinearSetSummary s;
    s.defining_tuple = fs;
    s.w0.assign(n + 1, 0);

    std::map<ProjPoint, std::uint64_t> buckets;
    std::uint64_t kernel_count = 1;  // x = 0
    std::vector<Fe> image(k);
    for (std::uint64_t x = 1; x < ctx.order(); ++x) {
        bool all_zero = true;
        for (int i = 0; i < k; ++i) {
            image[i] = eval(fs[i], Fe{static_cast<std::uint32_t>(x)});
            if (image[i].idx != 0) all_zero = false;
        }
        if (all_zero) {
            ++kernel_count;
            continue;
        }
        ++buckets[normalize_point(ctx, image)];
    }
    for (const auto& [pt, cnt] : buckets) {
        // preimage of <pt> together with 0 is an F_q-subspace containing the
        // common kernel; wt = dim(U cap <pt>) = log_q of the quotient size
        const int w = log_q_exact(cnt + kernel_count, ctx.q()) -
                      log_q_exact(kernel_count, ctx.q());
        s.points[pt] = w;
        ++s.w0[w];
    }
    s.rank = n - log_q_exact(kernel_count, ctx.q());

    Matrix coeff;
    for (const auto& f : fs) coeff.push_back(f.coeffs);
    s.span_dim = matrix_rank(ctx, coeff) - 1;
    return s;
}

int point_weight(const LinearSetSummary& summary, const ProjPoint& p) {
    auto it = summary.points.find(p);
    return it == summary.points.end() ? 0 : it->second;
}

int hyperplane_weight(const std::vector<LinearizedPoly>& fs,
                      const std::vector<Fe>& covector) {
    require_shared_ctx(fs);
    if (covector.size() != fs.size())
        throw LengthMismatch("covector length must match the tuple length");
    bool nonzero = false;
    for (Fe c : covector)
        if (c.idx != 0) nonzero = true;
    if (!nonzero) throw ZeroCovector("hyperplane covector is zero");
    return fs[0].ctx->n() - rank(lincomb(covector, fs));
}

std::vector<std::uint64_t> hyperplane_weight_distribution(
    const std::vector<LinearizedPoly>& fs, std::uint64_t budget) {
    require_shared_ctx(fs);
    if (fs.empty()) throw LengthMismatch("empty tuple");
    const auto& ctx = *fs[0].ctx;
    std::vector<std::uint64_t> counts(ctx.n() + 1, 0);
    for_each_normalized_tuple(ctx, static_cast<int>(fs.size()), budget,
                              [&](const std::vector<Fe>& a) {
                                  ++counts[ctx.n() - rank(lincomb(a, fs))];
                              });
    return counts;
}

Classification classify(const std::vector<LinearizedPoly>& fs,
                        std::uint64_t budget) {
    const int k = static_cast<int>(fs.size());
    auto summary = build_linear_set(fs);
    Classification out;
    out.spans = summary.span_dim == k - 1;
    out.scattered = true;
    for (int i = 2; i <= fs[0].ctx->n(); ++i)
        if (summary.w0[i] != 0) out.scattered = false;
    auto hyp = hyperplane_weight_distribution(fs, budget);
    bool bounded = true;
    for (int w = k; w < static_cast<int>(hyp.size()); ++w)
        if (hyp[w] != 0) bounded = false;
    out.scattered_wrt_hyperplanes = out.spans && bounded;
    return out;
}

ProjectionResult project_subgeometry(const RankMetricCode& c) {
    if (c.scalar_field != ScalarField::Fqn)
        throw WrongScalarField("projection requires an F_{q^n}-linear code");
    const auto& ctx = *c.ctx;
    const int n = ctx.n();
    const int k = static_cast<int>(c.basis.size());
    if (!common_kernel_trivial(c))
        throw CommonKernelNontrivial(
            "the basis maps share a nonzero kernel vector");

    auto dual = delsarte_dual(c);
    const auto& dbasis = dual.basis;

    auto stacked_rank = [&](const std::vector<LinearizedPoly>& g) {
        Matrix m;
        for (const auto& f : g) m.push_back(f.coeffs);
        for (const auto& f : dbasis) m.push_back(f.coeffs);
        return matrix_rank(ctx, m);
    };

    // Projection target: Omega(C) itself when skew from Omega(C)^perp,
    // otherwise a deterministically perturbed copy.
    std::vector<LinearizedPoly> g = c.basis;
    if (stacked_rank(g) != n) {
        bool found = false;
        for (std::uint64_t attempt = 1; attempt <= 4096 && !found; ++attempt) {
            std::mt19937_64 rng(attempt);
            g = c.basis;
            for (int i = 0; i < k; ++i) {
                const int pos = static_cast<int>(rng() % n);
                g[i].coeffs[pos] = ctx.add(
                    g[i].coeffs[pos], ctx.exp(rng() % (ctx.order() - 1)));
            }
            Matrix gm;
            for (const auto& f : g) gm.push_back(f.coeffs);
            found = matrix_rank(ctx, gm) == k && stacked_rank(g) == n;
        }
        if (!found)
            throw NoSkewComplement(
                "no skew complement found (internal consistency failure)");
    }

    ProjectionResult out;
    out.g = g;
    out.phi.assign(k, std::vector<Fe>(k, Fe{0}));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.phi[i][j] = dot(c.basis[j], g[i]);
    {
        Matrix phi_copy = out.phi;
        if (matrix_rank(ctx, std::move(phi_copy)) != k)
            throw NoSkewComplement(
                "phi is singular (internal consistency failure)");
    }

    // Project each rank-1 point of Sigma from Omega(C)^perp onto <g>:
    // solve  sum_i a_i g_i + sum_j s_j d_j = (beta, beta^q, ...).
    Matrix system(n, std::vector<Fe>(n, Fe{0}));
    for (int col = 0; col < k; ++col)
        for (int row = 0; row < n; ++row) system[row][col] = g[col].coeffs[row];
    for (int col = 0; col < n - k; ++col)
        for (int row = 0; row < n; ++row)
            system[row][k + col] = dbasis[col].coeffs[row];

    auto summary = build_linear_set(c.basis);
    bool ok = true;
    for (std::uint64_t b = 1; b < ctx.order(); ++b) {
        Fe beta{static_cast<std::uint32_t>(b)};
        std::vector<Fe> rhs(n);
        Fe pw = beta;
        for (int i = 0; i < n; ++i) {
            rhs[i] = pw;
            pw = ctx.frobenius(pw, 1);
        }
        auto sol = solve_square(ctx, system, rhs);
        if (!sol) throw NoSkewComplement("projection solve failed (internal)");
        std::vector<Fe> a(sol->begin(), sol->begin() + k);
        out.projected_points.insert(normalize_point(ctx, a));

        // the theorem: a * phi is (f_1(beta), ..., f_k(beta)) projectively
        auto mapped = vec_mat(ctx, a, out.phi);
        std::vector<Fe> direct(k);
        for (int i = 0; i < k; ++i) direct[i] = eval(c.basis[i], beta);
        if (normalize_point(ctx, mapped) != normalize_point(ctx, direct))
            ok = false;
    }
    // and the mapped set as a whole is the linear set of the basis
    std::set<ProjPoint> mapped_set;
    for (const auto& pt : out.projected_points)
        mapped_set.insert(normalize_point(ctx, vec_mat(ctx, pt.coords, out.phi)));
    std::set<ProjPoint> lin_points;
    for (const auto& [pt, w] : summary.points) lin_points.insert(pt);
    out.matches = ok && mapped_set == lin_points;
    return out;
}

BwResult bw_check(const RankMetricCode& c, std::uint64_t budget) {
    if (c.scalar_field != ScalarField::Fqn)
        throw WrongScalarField("bw_check needs an F_{q^n}-linear code");
    if (c.basis.size() != 2)
        throw LengthMismatch("bw_check is stated for k = 2");
    const auto& ctx = *c.ctx;
    if (ctx.n() < 3) throw Error("bw_check needs n >= 3");
    if (!common_kernel_trivial(c))
        throw CommonKernelNontrivial("bw_check needs a trivial common kernel");

    auto summary = build_linear_set(c.basis);
    if (!summary.proper())
        throw NotProper("the linear set has a single point");

    BwResult out;
    const BigInt q(ctx.q());
    BigInt rhs = 0;
    for (int i = 2; i <= ctx.n(); ++i)
        rhs += BigInt(summary.w0[i]) * gauss_int(i, 2, q);
    out.rhs = rhs.convert_to<std::uint64_t>();

    auto dual = delsarte_dual(c);
    std::uint64_t rank2 = 0;
    for_each_projective_point(
        dual, [&](const LinearizedPoly& f) { rank2 += rank(f) == 2; }, budget);
    out.lhs = rank2;
    out.equal = out.lhs == out.rhs;
    return out;
}

Sigma2Profile sigma2_profile(const RankMetricCode& c, std::uint64_t budget) {
    if (c.scalar_field != ScalarField::Fqn)
        throw WrongScalarField("sigma2_profile needs an F_{q^n}-linear code");
    Sigma2Profile out;
    for_each_projective_point(
        c,
        [&](const LinearizedPoly& f) {
            const int r = rank(f);
            out.sigma1_hits += r == 1;
            out.sigma2_hits += r == 2;
        },
        budget);
    return out;
}

std::vector<Weight2Find> search_weight2_configs(FieldPtr ctx,
                                                std::uint64_t target_n,
                                                int trials, std::uint64_t seed,
                                                std::uint64_t budget) {
    const int n = ctx->n();
    if (n < 3) throw Error("co-dimension-two subspaces need n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<Weight2Find> found;
    for (int t = 0; t < trials; ++t) {
        std::vector<LinearizedPoly> basis;
        Matrix m;
        for (int i = 0; i < n - 2; ++i) {
            std::vector<Fe> coeffs(n);
            for (int j = 0; j < n; ++j)
                coeffs[j] = Fe{static_cast<std::uint32_t>(rng() % ctx->order())};
            basis.push_back(make_poly(ctx, coeffs));
            m.push_back(basis.back().coeffs);
        }
        if (matrix_rank(*ctx, m) != n - 2) continue;  // resample next trial
        auto code = make_code(ctx, ScalarField::Fqn, basis);
        auto profile = sigma2_profile(code, budget);
        if (profile.sigma1_hits == 0 && profile.sigma2_hits == target_n)
            found.push_back(Weight2Find{std::move(basis), profile});
    }
    return found;
}

}  // namespace rankgeo
