#include "rankgeo/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace rankgeo {

namespace {

// ---------------------------------------------------------------------------
// Bootstrap arithmetic on polynomials over F_p (ascending coefficients).
// Used only during construction and for the Conway search; everything after
// table build goes through exp/log.
// ---------------------------------------------------------------------------

using Poly = std::vector<int>;

int norm_mod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = norm_mod(r[i + j] + std::int64_t(a[i]) * b[j], p);
    }
    trim(r);
    return r;
}

// Remainder of a modulo m; m need not be monic.
Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    int lead_inv = 1;
    {
        // inverse of leading coefficient via Fermat
        std::int64_t base = m.back(), acc = 1, k = p - 2;
        while (k) {
            if (k & 1) acc = acc * base % p;
            base = base * base % p;
            k >>= 1;
        }
        lead_inv = static_cast<int>(acc);
    }
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        int shift = static_cast<int>(a.size()) - 1 - dm;
        int c = norm_mod(std::int64_t(a.back()) * lead_inv, p);
        for (int i = 0; i <= dm; ++i)
            a[shift + i] = norm_mod(a[shift + i] - std::int64_t(c) * m[i], p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    return poly_rem(poly_mul(a, b, p), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::int64_t p) {
    Poly r{1};
    base = poly_rem(std::move(base), m, p);
    while (k) {
        if (k & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::int64_t> prime_factors(std::int64_t v) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

std::uint64_t u64_pow(std::uint64_t b, int k) {
    std::uint64_t r = 1;
    while (k--) r *= b;
    return r;
}

bool poly_irreducible(const Poly& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    // x^{p^d} == x mod f
    Poly x{0, 1};
    Poly xp = x;
    std::vector<Poly> frobs;  // frobs[i] = x^{p^{i+1}} mod f
    for (int i = 0; i < d; ++i) {
        xp = poly_powmod(xp, static_cast<std::uint64_t>(p), f, p);
        frobs.push_back(xp);
    }
    Poly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = norm_mod(diff[1] - 1, p);
    diff = poly_rem(std::move(diff), f, p);
    if (!diff.empty()) return false;
    for (std::int64_t r : prime_factors(d)) {
        Poly y = frobs[d / r - 1];
        y.resize(std::max<std::size_t>(y.size(), 2), 0);
        y[1] = norm_mod(y[1] - 1, p);
        trim(y);
        Poly g = poly_gcd(f, y, p);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

// true iff x has multiplicative order p^d - 1 modulo f (f monic degree d).
bool poly_x_primitive(const Poly& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    const std::uint64_t m = u64_pow(static_cast<std::uint64_t>(p), d) - 1;
    Poly x{0, 1};
    Poly top = poly_powmod(x, m, f, p);
    if (top != Poly{1}) return false;
    for (std::int64_t r : prime_factors(static_cast<std::int64_t>(m))) {
        if (poly_powmod(x, m / static_cast<std::uint64_t>(r), f, p) == Poly{1})
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Linear algebra over F_p for the construction-time solves.
// ---------------------------------------------------------------------------

int fp_inv(int a, std::int64_t p) {
    std::int64_t base = a, acc = 1, k = p - 2;
    while (k) {
        if (k & 1) acc = acc * base % p;
        base = base * base % p;
        k >>= 1;
    }
    return static_cast<int>(acc);
}

// Kernel basis of an r x c matrix over F_p (rows of length c).
std::vector<std::vector<int>> fp_kernel(std::vector<std::vector<int>> mat,
                                        std::int64_t p) {
    const int rows = static_cast<int>(mat.size());
    const int cols = rows ? static_cast<int>(mat[0].size()) : 0;
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        int inv = fp_inv(mat[rank][col], p);
        for (int j = col; j < cols; ++j)
            mat[rank][j] = norm_mod(std::int64_t(mat[rank][j]) * inv, p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            int c = mat[r][col];
            for (int j = col; j < cols; ++j)
                mat[r][j] =
                    norm_mod(mat[r][j] - std::int64_t(c) * mat[rank][j], p);
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<int>> kernel;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(cols, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col_of_row[r]] = norm_mod(-mat[r][free], p);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Inverse of a square matrix over F_p; empty result if singular.
std::vector<std::vector<int>> fp_inverse(std::vector<std::vector<int>> mat,
                                         std::int64_t p) {
    const int d = static_cast<int>(mat.size());
    std::vector<std::vector<int>> inv(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i) inv[i][i] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (mat[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return {};
        std::swap(mat[col], mat[piv]);
        std::swap(inv[col], inv[piv]);
        int ic = fp_inv(mat[col][col], p);
        for (int j = 0; j < d; ++j) {
            mat[col][j] = norm_mod(std::int64_t(mat[col][j]) * ic, p);
            inv[col][j] = norm_mod(std::int64_t(inv[col][j]) * ic, p);
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || mat[r][col] == 0) continue;
            int c = mat[r][col];
            for (int j = 0; j < d; ++j) {
                mat[r][j] = norm_mod(mat[r][j] - std::int64_t(c) * mat[col][j], p);
                inv[r][j] = norm_mod(inv[r][j] - std::int64_t(c) * inv[col][j], p);
            }
        }
    }
    return inv;
}

}  // namespace

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<int> conway_polynomial(std::int64_t p, int degree) {
    static std::mutex mtx;
    static std::map<std::pair<std::int64_t, int>, std::vector<int>> cache;

    const bool p_ok =
        p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
    if (!p_ok || degree < 1 || degree > 16)
        throw NoDefaultModulus("no bundled default modulus for p=" +
                               std::to_string(p) + ", degree " +
                               std::to_string(degree) +
                               "; supply --modulus explicitly");
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({p, degree});
        if (it != cache.end()) return it->second;
    }

    // Conway polynomials for the proper divisors (needed for compatibility).
    std::vector<std::pair<int, Poly>> subs;
    for (int m = 1; m < degree; ++m)
        if (degree % m == 0) subs.emplace_back(m, conway_polynomial(p, m));

    const std::uint64_t order =
        u64_pow(static_cast<std::uint64_t>(p), degree) - 1;

    // Candidates f = x^d + a_{d-1}x^{d-1} + ... + a_0, a_i = (-1)^{d-i} c_i,
    // scanned in lexicographic order of the word (c_{d-1}, ..., c_0).
    const std::uint64_t total = order + 1;  // p^degree words
    for (std::uint64_t w = 0; w < total; ++w) {
        Poly f(degree + 1, 0);
        f[degree] = 1;
        std::uint64_t v = w;
        for (int i = 0; i < degree; ++i) {
            int c = static_cast<int>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
            // i-th least significant word digit is c_i
            f[i] = ((degree - i) % 2 == 0) ? c : norm_mod(-c, p);
        }
        if (f[0] == 0) continue;
        if (!poly_irreducible(f, p)) continue;
        if (!poly_x_primitive(f, p)) continue;
        bool compatible = true;
        for (const auto& [m, sub] : subs) {
            std::uint64_t t =
                order / (u64_pow(static_cast<std::uint64_t>(p), m) - 1);
            Poly y = poly_powmod(Poly{0, 1}, t, f, p);
            // Horner evaluation of sub at y, mod f
            Poly acc;
            for (int i = static_cast<int>(sub.size()) - 1; i >= 0; --i) {
                acc = poly_mulmod(acc, y, f, p);
                if (sub[i] != 0) {
                    if (acc.empty()) acc = {sub[i]};
                    else acc[0] = norm_mod(acc[0] + sub[i], p);
                    trim(acc);
                }
            }
            if (!acc.empty()) {
                compatible = false;
                break;
            }
        }
        if (!compatible) continue;
        std::lock_guard<std::mutex> lock(mtx);
        cache[{p, degree}] = f;
        return f;
    }
    throw Error("Conway polynomial search exhausted (internal error)");
}

// ---------------------------------------------------------------------------
// FieldContext
// ---------------------------------------------------------------------------

std::shared_ptr<const FieldContext> FieldContext::make(
    std::int64_t p, int e, int n, std::optional<std::vector<int>> modulus,
    std::uint64_t budget) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (e < 1) throw Error("e must be >= 1");
    if (n < 2) throw Error("n must be >= 2");
    const int en = e * n;

    // Order check comes first: tables are per-element.
    std::uint64_t order = 1;
    for (int i = 0; i < en; ++i) {
        order *= static_cast<std::uint64_t>(p);
        if (order > (1ull << 31))
            throw BudgetExceeded("field order exceeds the representable cap");
    }
    if (order > budget)
        throw BudgetExceeded("field order " + std::to_string(order) +
                             " exceeds the enumeration budget " +
                             std::to_string(budget));

    Poly mod;
    if (modulus) {
        mod = *modulus;
        trim(mod);
        if (static_cast<int>(mod.size()) - 1 != en || mod.back() != 1)
            throw ReducibleModulus(
                "modulus must be monic of degree e*n = " + std::to_string(en));
        for (int& c : mod) {
            if (c < 0 || c >= p)
                throw ReducibleModulus("modulus coefficient out of [0, p)");
        }
    } else {
        mod = conway_polynomial(p, en);
    }
    if (!poly_irreducible(mod, p))
        throw ReducibleModulus("modulus is reducible over F_p");

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->n_ = n;
    ctx->en_ = en;
    ctx->q_ = u64_pow(static_cast<std::uint64_t>(p), e);
    ctx->order_ = order;
    ctx->modulus_ = mod;
    ctx->p_pow_.resize(en + 1);
    ctx->p_pow_[0] = 1;
    for (int i = 1; i <= en; ++i)
        ctx->p_pow_[i] = ctx->p_pow_[i - 1] * static_cast<std::uint64_t>(p);
    ctx->one_ = Fe{1};

    auto idx_to_poly = [&](std::uint32_t idx) {
        Poly a(en, 0);
        for (int i = 0; i < en; ++i) {
            a[i] = static_cast<int>(idx % static_cast<std::uint32_t>(p));
            idx /= static_cast<std::uint32_t>(p);
        }
        trim(a);
        return a;
    };
    auto poly_to_idx = [&](const Poly& a) {
        std::uint64_t idx = 0;
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            idx = idx * static_cast<std::uint64_t>(p) + a[i];
        return static_cast<std::uint32_t>(idx);
    };

    // Generator: lexicographically least primitive element by digit order.
    const auto ord_factors = prime_factors(static_cast<std::int64_t>(order - 1));
    std::uint32_t gen_idx = 0;
    for (std::uint64_t w = 1; w < order; ++w) {
        // w read big-endian gives the digit word (d_0, d_1, ...) in lex order
        Poly cand(en, 0);
        std::uint64_t v = w;
        for (int i = en - 1; i >= 0; --i) {
            cand[i] = static_cast<int>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        trim(cand);
        if (cand.empty()) continue;
        bool primitive = true;
        for (std::int64_t r : ord_factors) {
            if (poly_powmod(cand, (order - 1) / static_cast<std::uint64_t>(r),
                            mod, p) == Poly{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_idx = poly_to_idx(cand);
            break;
        }
    }
    if (gen_idx == 0) throw Error("no primitive element found (internal)");
    ctx->generator_ = Fe{gen_idx};

    // exp/log tables by repeated bootstrap multiplication.
    ctx->exp_.resize(order - 1);
    ctx->log_.assign(order, 0);
    {
        Poly g = idx_to_poly(gen_idx);
        Poly acc{1};
        for (std::uint64_t i = 0; i < order - 1; ++i) {
            std::uint32_t idx = poly_to_idx(acc);
            ctx->exp_[i] = Fe{idx};
            ctx->log_[idx] = static_cast<std::uint32_t>(i);
            acc = poly_mulmod(acc, g, mod, p);
        }
        if (acc != Poly{1})
            throw Error("generator order verification failed (internal)");
    }

    // q-Frobenius table via logs.
    ctx->frob_.resize(order);
    ctx->frob_[0] = Fe{0};
    for (std::uint64_t i = 0; i < order - 1; ++i)
        ctx->frob_[ctx->exp_[i].idx] = ctx->exp_[(i * ctx->q_) % (order - 1)];

    // Subfield F_q = fixed points of x -> x^q, ordered 0, h^0, h^1, ...
    {
        std::uint64_t count = 0;
        for (std::uint64_t x = 0; x < order; ++x)
            if (ctx->frob_[x].idx == x) ++count;
        if (count != ctx->q_)
            throw Error("subfield size mismatch (internal)");
        ctx->subfield_.push_back(Fe{0});
        const std::uint64_t step = (order - 1) / (ctx->q_ - 1);
        for (std::uint64_t i = 0; i < ctx->q_ - 1; ++i)
            ctx->subfield_.push_back(ctx->exp_[i * step]);
    }

    // F_q-basis of F_{q^n}: generator powers 1, g, ..., g^{n-1}.
    for (int i = 0; i < n; ++i)
        ctx->fq_power_basis_.push_back(i == 0 ? Fe{1} : ctx->exp_[i]);

    // F_p-basis of F_q: kernel of x -> x^q - x on digit vectors.
    {
        std::vector<std::vector<int>> m(en, std::vector<int>(en, 0));
        for (int j = 0; j < en; ++j) {
            std::uint32_t tj = static_cast<std::uint32_t>(ctx->p_pow_[j]);
            std::uint32_t im = ctx->frob_[tj].idx;
            Poly d = idx_to_poly(im);
            d.resize(en, 0);
            for (int i = 0; i < en; ++i)
                m[i][j] = norm_mod(d[i] - (i == j ? 1 : 0), p);
        }
        auto kernel = fp_kernel(m, p);
        if (static_cast<int>(kernel.size()) != e)
            throw Error("F_q basis extraction failed (internal)");
        for (const auto& v : kernel)
            ctx->fq_fp_basis_.push_back(Fe{poly_to_idx(v)});
    }

    // Coordinate solver: invert the en x en matrix whose column i*e+j holds
    // digits(s_j * b^i). Invertibility doubles as the independence check for
    // fq_power_basis over F_q.
    {
        std::vector<std::vector<int>> m(en, std::vector<int>(en, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < e; ++j) {
                Fe prod;
                {
                    Fe a = ctx->fq_power_basis_[i];
                    Fe b = ctx->fq_fp_basis_[j];
                    if (a.idx == 0 || b.idx == 0)
                        prod = Fe{0};
                    else
                        prod = ctx->exp_[(static_cast<std::uint64_t>(
                                              ctx->log_[a.idx]) +
                                          ctx->log_[b.idx]) %
                                         (order - 1)];
                }
                Poly d = idx_to_poly(prod.idx);
                d.resize(en, 0);
                for (int r = 0; r < en; ++r) m[r][i * e + j] = d[r];
            }
        }
        auto inv = fp_inverse(m, p);
        if (inv.empty())
            throw Error("fq_power_basis is F_q-dependent (internal)");
        ctx->coord_solver_.resize(en * en);
        for (int r = 0; r < en; ++r)
            for (int c = 0; c < en; ++c) ctx->coord_solver_[r * en + c] = inv[r][c];
    }

    return ctx;
}

std::vector<int> FieldContext::digits(Fe x) const {
    std::vector<int> d(en_);
    std::uint32_t v = x.idx;
    for (int i = 0; i < en_; ++i) {
        d[i] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
        v /= static_cast<std::uint32_t>(p_);
    }
    return d;
}

Fe FieldContext::from_digits(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != en_)
        throw Error("digit list must have length e*n = " + std::to_string(en_));
    std::uint64_t idx = 0;
    for (int i = en_ - 1; i >= 0; --i) {
        if (digits[i] < 0 || digits[i] >= p_)
            throw Error("digit out of range [0, p)");
        idx = idx * static_cast<std::uint64_t>(p_) + digits[i];
    }
    return Fe{static_cast<std::uint32_t>(idx)};
}

Fe FieldContext::add(Fe x, Fe y) const {
    if (p_ == 2) return Fe{x.idx ^ y.idx};
    std::uint64_t r = 0;
    std::uint32_t a = x.idx, b = y.idx;
    const auto up = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < en_ && (a || b); ++i) {
        std::uint32_t s = a % up + b % up;
        if (s >= up) s -= up;
        r += s * p_pow_[i];
        a /= up;
        b /= up;
    }
    return Fe{static_cast<std::uint32_t>(r)};
}

Fe FieldContext::neg(Fe x) const {
    if (p_ == 2) return x;
    std::uint64_t r = 0;
    std::uint32_t a = x.idx;
    const auto up = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < en_ && a; ++i) {
        std::uint32_t d = a % up;
        if (d) r += (up - d) * p_pow_[i];
        a /= up;
    }
    return Fe{static_cast<std::uint32_t>(r)};
}

Fe FieldContext::sub(Fe x, Fe y) const { return add(x, neg(y)); }

Fe FieldContext::mul(Fe x, Fe y) const {
    if (x.idx == 0 || y.idx == 0) return Fe{0};
    return exp_[(static_cast<std::uint64_t>(log_[x.idx]) + log_[y.idx]) %
                (order_ - 1)];
}

Fe FieldContext::inv(Fe x) const {
    if (x.idx == 0) throw DivisionByZero("inverse of zero");
    std::uint64_t l = log_[x.idx];
    return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Fe FieldContext::div(Fe x, Fe y) const {
    if (y.idx == 0) throw DivisionByZero("division by zero");
    if (x.idx == 0) return Fe{0};
    std::uint64_t m = order_ - 1;
    return exp_[(log_[x.idx] + m - log_[y.idx]) % m];
}

Fe FieldContext::pow(Fe x, std::int64_t k) const {
    if (x.idx == 0) {
        if (k < 0) throw DivisionByZero("negative power of zero");
        return k == 0 ? one_ : Fe{0};
    }
    const std::int64_t m = static_cast<std::int64_t>(order_ - 1);
    std::int64_t ke = ((k % m) + m) % m;
    return exp_[static_cast<std::uint64_t>(log_[x.idx]) *
                static_cast<std::uint64_t>(ke) % static_cast<std::uint64_t>(m)];
}

Fe FieldContext::frobenius(Fe x, std::int64_t i) const {
    std::int64_t im = ((i % n_) + n_) % n_;
    if (x.idx == 0 || im == 0) return x;
    std::uint64_t qe = 1;
    const std::uint64_t m = order_ - 1;
    for (std::int64_t j = 0; j < im; ++j) qe = qe * q_ % m;
    return exp_[static_cast<std::uint64_t>(log_[x.idx]) * qe % m];
}

Fe FieldContext::rel_trace(Fe x) const {
    Fe acc = x, y = x;
    for (int i = 1; i < n_; ++i) {
        y = frob_[y.idx];
        acc = add(acc, y);
    }
    return acc;
}

bool FieldContext::in_subfield(Fe x) const { return frob_[x.idx] == x; }

std::uint64_t FieldContext::log(Fe x) const {
    if (x.idx == 0) throw DivisionByZero("log of zero");
    return log_[x.idx];
}

Fe FieldContext::scalar_at(std::uint64_t i, bool big_field) const {
    if (i == 0) return Fe{0};
    if (big_field) return exp_[i - 1];
    return subfield_[i];
}

std::vector<Fe> FieldContext::coords_over_fq(Fe x) const {
    Poly d(en_, 0);
    {
        std::uint32_t v = x.idx;
        for (int i = 0; i < en_; ++i) {
            d[i] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
            v /= static_cast<std::uint32_t>(p_);
        }
    }
    // c = solver * digits, then regroup chunks of e into F_q elements
    std::vector<Fe> out(n_, Fe{0});
    for (int i = 0; i < n_; ++i) {
        Fe acc{0};
        for (int j = 0; j < e_; ++j) {
            std::int64_t c = 0;
            const int row = i * e_ + j;
            for (int k = 0; k < en_; ++k)
                c += static_cast<std::int64_t>(coord_solver_[row * en_ + k]) * d[k];
            c %= p_;
            // c is an F_p scalar; fold into acc as c * s_j
            Fe term{0};
            for (int t = 0; t < c; ++t) term = add(term, fq_fp_basis_[j]);
            acc = add(acc, term);
        }
        out[i] = acc;
    }
    return out;
}

Fe FieldContext::from_coords_fq(const std::vector<Fe>& coords) const {
    if (static_cast<int>(coords.size()) != n_)
        throw LengthMismatch("expected " + std::to_string(n_) + " coordinates");
    Fe acc{0};
    for (int i = 0; i < n_; ++i) {
        if (!in_subfield(coords[i]))
            throw Error("coordinate is not in the subfield F_q");
        acc = add(acc, mul(coords[i], fq_power_basis_[i]));
    }
    return acc;
}

}  // namespace rankgeo
