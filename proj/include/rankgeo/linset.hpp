#ifndef RANKGEO_LINSET_HPP
#define RANKGEO_LINSET_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rankgeo/code.hpp"
#include "rankgeo/linpoly.hpp"

namespace rankgeo {

// Point of PG(k-1, q^n), normalized so the first nonzero coordinate is 1.
struct ProjPoint {
    std::vector<Fe> coords;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// Throws ZeroVector on the zero tuple.
ProjPoint normalize_point(const FieldContext& ctx, std::vector<Fe> coords);

// The linear set L_{f_1,...,f_k} with per-point weights and the derived
// distributions.
struct LinearSetSummary {
    std::vector<LinearizedPoly> defining_tuple;
    std::map<ProjPoint, int> points;     // point -> weight >= 1
    int rank = 0;                        // n - dim of the common kernel
    int span_dim = 0;                    // projective dimension of <L>
    std::vector<std::uint64_t> w0;       // W_i at index i, size n+1
    bool proper() const { return points.size() > 1; }
};

LinearSetSummary build_linear_set(const std::vector<LinearizedPoly>& fs);

// Stored weight; 0 when P is not in L.
int point_weight(const LinearSetSummary& summary, const ProjPoint& p);

// n - rank(sum a_i f_i). Throws ZeroCovector.
int hyperplane_weight(const std::vector<LinearizedPoly>& fs,
                      const std::vector<Fe>& covector);

// Counts of hyperplanes of each weight, index 0..n, by enumeration of
// normalized covectors.
std::vector<std::uint64_t> hyperplane_weight_distribution(
    const std::vector<LinearizedPoly>& fs,
    std::uint64_t budget = kDefaultEnumBudget);

struct Classification {
    bool scattered = false;
    bool scattered_wrt_hyperplanes = false;
    bool spans = false;
};

Classification classify(const std::vector<LinearizedPoly>& fs,
                        std::uint64_t budget = kDefaultEnumBudget);

// Realisation of the linear set as the projection of the rank-1 subgeometry
// from Omega(C)^perp onto a (k-1)-space, checked against build_linear_set.
struct ProjectionResult {
    std::vector<LinearizedPoly> g;     // basis of the projection target
    Matrix phi;                        // k x k, phi[i][j] = f_j . g_i
    std::set<ProjPoint> projected_points;  // in the basis (g_1,...,g_k)
    bool matches = false;
};

ProjectionResult project_subgeometry(const RankMetricCode& c);

struct BwResult {
    std::uint64_t lhs = 0;  // rank-2 points of Omega(C^perp)
    std::uint64_t rhs = 0;  // sum_i W_i [i choose 2]_q
    bool equal = false;
};

BwResult bw_check(const RankMetricCode& c,
                  std::uint64_t budget = kDefaultEnumBudget);

struct Sigma2Profile {
    std::uint64_t sigma1_hits = 0;  // rank-1 points of Omega(C)
    std::uint64_t sigma2_hits = 0;  // rank-exactly-2 points of Omega(C)
};

Sigma2Profile sigma2_profile(const RankMetricCode& c,
                             std::uint64_t budget = kDefaultEnumBudget);

struct Weight2Find {
    std::vector<LinearizedPoly> basis;
    Sigma2Profile profile;
};

// Seeded random sampling of (n-2)-dimensional F_{q^n}-subspaces, reporting
// those disjoint from Sigma that meet Sigma_2 in exactly target_n points.
std::vector<Weight2Find> search_weight2_configs(
    FieldPtr ctx, std::uint64_t target_n, int trials, std::uint64_t seed,
    std::uint64_t budget = kDefaultEnumBudget);

}  // namespace rankgeo

#endif
