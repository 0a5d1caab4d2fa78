#ifndef RANKGEO_MATRIX_HPP
#define RANKGEO_MATRIX_HPP

#include <optional>
#include <vector>

#include "rankgeo/field.hpp"

namespace rankgeo {

// Dense matrices over F_{q^n}. When every entry lies in the subfield F_q the
// routines stay inside F_q, so they double as F_q-eliminations.
using Matrix = std::vector<std::vector<Fe>>;

int matrix_rank(const FieldContext& ctx, Matrix m);

// Basis of {v : M v = 0} (right nullspace), rows of length cols.
std::vector<std::vector<Fe>> nullspace(const FieldContext& ctx, Matrix m,
                                       int cols);

// Solve A x = b for square A; nullopt if A is singular.
std::optional<std::vector<Fe>> solve_square(const FieldContext& ctx, Matrix a,
                                            std::vector<Fe> b);

// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> invert(const FieldContext& ctx, Matrix m);

// Row vector times matrix.
std::vector<Fe> vec_mat(const FieldContext& ctx, const std::vector<Fe>& v,
                        const Matrix& m);

}  // namespace rankgeo

#endif
