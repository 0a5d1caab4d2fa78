#ifndef RANKGEO_LINPOLY_HPP
#define RANKGEO_LINPOLY_HPP

#include <vector>

#include "rankgeo/field.hpp"
#include "rankgeo/matrix.hpp"

namespace rankgeo {

// The F_q-linear map x -> sum_i coeffs[i] * x^{q^i} on F_{q^n}.
struct LinearizedPoly {
    FieldPtr ctx;
    std::vector<Fe> coeffs;  // exactly n entries

    bool is_zero() const {
        for (Fe c : coeffs)
            if (c.idx != 0) return false;
        return true;
    }
    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
        return a.ctx == b.ctx && a.coeffs == b.coeffs;
    }
};

LinearizedPoly make_poly(FieldPtr ctx, std::vector<Fe> coeffs);
LinearizedPoly zero_poly(FieldPtr ctx);
// coef * x^{q^i}
LinearizedPoly monomial(FieldPtr ctx, Fe coef, int i);
LinearizedPoly identity_poly(FieldPtr ctx);
// x + x^q + ... + x^{q^{n-1}}
LinearizedPoly trace_poly(FieldPtr ctx);

Fe eval(const LinearizedPoly& f, Fe x);
LinearizedPoly add(const LinearizedPoly& f, const LinearizedPoly& g);
LinearizedPoly scale(Fe c, const LinearizedPoly& f);
LinearizedPoly lincomb(const std::vector<Fe>& scalars,
                       const std::vector<LinearizedPoly>& polys);
// g o f, reduced mod x^{q^n} - x via index arithmetic mod n.
LinearizedPoly compose(const LinearizedPoly& g, const LinearizedPoly& f);

// Coefficient-vector dot product.
Fe dot(const LinearizedPoly& f, const LinearizedPoly& g);
// Tr(dot(f, g)), lies in F_q.
Fe trace_form(const LinearizedPoly& f, const LinearizedPoly& g);

// n x n matrix with entry(i,j) = coeffs[(j-i) mod n]^{q^i}; its rank over
// F_{q^n} equals the rank of f as an F_q-linear map.
Matrix twist_matrix(const LinearizedPoly& f);

int rank(const LinearizedPoly& f);
// log_q of the number of roots of f, by exhaustive evaluation. Independent
// of the twist-matrix route.
int kernel_dim(const LinearizedPoly& f);
bool is_invertible(const LinearizedPoly& f);
// Sigma_i membership of the projective point <f>: rank(f) <= i.
bool point_rank_stratum(const LinearizedPoly& f, int i);

}  // namespace rankgeo

#endif
