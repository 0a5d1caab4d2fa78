#include "rankgeo/matrix.hpp"

#include <algorithm>

namespace rankgeo {

int matrix_rank(const FieldContext& ctx, Matrix m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col].idx != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Fe inv = ctx.inv(m[rank][col]);
        for (int j = col; j < cols; ++j) m[rank][j] = ctx.mul(m[rank][j], inv);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col].idx == 0) continue;
            Fe c = m[r][col];
            for (int j = col; j < cols; ++j)
                m[r][j] = ctx.sub(m[r][j], ctx.mul(c, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Fe>> nullspace(const FieldContext& ctx, Matrix m,
                                       int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col].idx != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Fe inv = ctx.inv(m[rank][col]);
        for (int j = col; j < cols; ++j) m[rank][j] = ctx.mul(m[rank][j], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].idx == 0) continue;
            Fe c = m[r][col];
            for (int j = col; j < cols; ++j)
                m[r][j] = ctx.sub(m[r][j], ctx.mul(c, m[rank][j]));
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<Fe>> kernel;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fe> v(cols, Fe{0});
        v[free] = ctx.one();
        for (int r = 0; r < rank; ++r)
            v[pivot_col_of_row[r]] = ctx.neg(m[r][free]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::optional<std::vector<Fe>> solve_square(const FieldContext& ctx, Matrix a,
                                            std::vector<Fe> b) {
    const int d = static_cast<int>(a.size());
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (a[r][col].idx != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        Fe inv = ctx.inv(a[col][col]);
        for (int j = col; j < d; ++j) a[col][j] = ctx.mul(a[col][j], inv);
        b[col] = ctx.mul(b[col], inv);
        for (int r = 0; r < d; ++r) {
            if (r == col || a[r][col].idx == 0) continue;
            Fe c = a[r][col];
            for (int j = col; j < d; ++j)
                a[r][j] = ctx.sub(a[r][j], ctx.mul(c, a[col][j]));
            b[r] = ctx.sub(b[r], ctx.mul(c, b[col]));
        }
    }
    return b;
}

std::optional<Matrix> invert(const FieldContext& ctx, Matrix m) {
    const int d = static_cast<int>(m.size());
    Matrix inv(d, std::vector<Fe>(d, Fe{0}));
    for (int i = 0; i < d; ++i) inv[i][i] = ctx.one();
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (m[r][col].idx != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        Fe ic = ctx.inv(m[col][col]);
        for (int j = 0; j < d; ++j) {
            m[col][j] = ctx.mul(m[col][j], ic);
            inv[col][j] = ctx.mul(inv[col][j], ic);
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || m[r][col].idx == 0) continue;
            Fe c = m[r][col];
            for (int j = 0; j < d; ++j) {
                m[r][j] = ctx.sub(m[r][j], ctx.mul(c, m[col][j]));
                inv[r][j] = ctx.sub(inv[r][j], ctx.mul(c, inv[col][j]));
            }
        }
    }
    return inv;
}

std::vector<Fe> vec_mat(const FieldContext& ctx, const std::vector<Fe>& v,
                        const Matrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<Fe> out(cols, Fe{0});
    for (int j = 0; j < cols; ++j) {
        Fe acc{0};
        for (int i = 0; i < rows; ++i)
            acc = ctx.add(acc, ctx.mul(v[i], m[i][j]));
        out[j] = acc;
    }
    return out;
}

}  // namespace rankgeo
