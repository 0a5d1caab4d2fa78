#include "rankgeo/macwilliams.hpp"

#include <sstream>

namespace rankgeo {

void IntPolynomial::set(int e, BigInt v) {
    if (v == 0)
        c_.erase(e);
    else
        c_[e] = std::move(v);
}

IntPolynomial IntPolynomial::constant(BigInt v) {
    IntPolynomial r;
    r.set(0, std::move(v));
    return r;
}

IntPolynomial IntPolynomial::q_power(int e) {
    IntPolynomial r;
    r.set(e, 1);
    return r;
}

bool IntPolynomial::is_polynomial() const {
    return c_.empty() || c_.begin()->first >= 0;
}

int IntPolynomial::min_exp() const {
    return c_.empty() ? 0 : c_.begin()->first;
}

int IntPolynomial::max_exp() const {
    return c_.empty() ? 0 : c_.rbegin()->first;
}

IntPolynomial IntPolynomial::shifted(int e) const {
    IntPolynomial r;
    for (const auto& [k, v] : c_) r.c_[k + e] = v;
    return r;
}

BigInt IntPolynomial::eval(const BigInt& q) const {
    BigInt acc = 0;
    for (const auto& [e, v] : c_) {
        if (e < 0) throw NonPolynomialResult("negative exponent in eval");
        BigInt t = v;
        for (int i = 0; i < e; ++i) t *= q;
        acc += t;
    }
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (const auto& [e, v] : o.c_) {
        auto it = r.c_.find(e);
        if (it == r.c_.end())
            r.c_[e] = v;
        else {
            it->second += v;
            if (it->second == 0) r.c_.erase(it);
        }
    }
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (const auto& [e, v] : o.c_) {
        auto it = r.c_.find(e);
        if (it == r.c_.end())
            r.c_[e] = -v;
        else {
            it->second -= v;
            if (it->second == 0) r.c_.erase(it);
        }
    }
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    IntPolynomial r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) {
            auto it = r.c_.find(e1 + e2);
            if (it == r.c_.end())
                r.c_[e1 + e2] = v1 * v2;
            else {
                it->second += v1 * v2;
                if (it->second == 0) r.c_.erase(it);
            }
        }
    return r;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& num,
                                       const IntPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (num.is_zero()) return {};
    // Shift both to ordinary polynomials, divide, shift back.
    const int sn = num.min_exp(), sd = den.min_exp();
    IntPolynomial rem = num.shifted(-sn);
    IntPolynomial d = den.shifted(-sd);
    IntPolynomial quo;
    const int dd = d.max_exp();
    const BigInt& lead = d.c_.rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() >= dd) {
        const int e = rem.max_exp() - dd;
        const BigInt& top = rem.c_.rbegin()->second;
        if (top % lead != 0)
            throw InexactDivision("polynomial division is not exact");
        BigInt c = top / lead;
        IntPolynomial term;
        term.set(e, c);
        quo = quo + term;
        rem = rem - term * d;
    }
    if (!rem.is_zero())
        throw InexactDivision("polynomial division leaves a remainder");
    return quo.shifted(sn - sd);
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const int e = it->first;
        BigInt v = it->second;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (e == 0) {
            os << v;
        } else {
            if (v != 1) os << v << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

BigInt gauss_int(int a, int b, const BigInt& q) {
    if (b < 0 || b > a) return 0;
    BigInt g = 1;
    for (int i = 0; i < b; ++i) {
        BigInt num = 1, den = 1;
        for (int j = 0; j < a - i; ++j) num *= q;
        for (int j = 0; j < i + 1; ++j) den *= q;
        num -= 1;
        den -= 1;
        g *= num;
        if (g % den != 0)
            throw InexactDivision("Gaussian coefficient division not exact");
        g /= den;
    }
    return g;
}

IntPolynomial gauss_poly(int a, int b) {
    if (b < 0 || b > a) return {};
    IntPolynomial g = IntPolynomial::constant(1);
    const IntPolynomial one = IntPolynomial::constant(1);
    for (int i = 0; i < b; ++i) {
        IntPolynomial num = IntPolynomial::q_power(a - i) - one;
        IntPolynomial den = IntPolynomial::q_power(i + 1) - one;
        g = IntPolynomial::exact_div(g * num, den);
    }
    return g;
}

std::vector<BigInt> dual_distribution(const std::vector<BigInt>& A,
                                      const DualParams& params,
                                      const BigInt& q) {
    const int k = params.k;
    if (static_cast<int>(A.size()) != k + 1)
        throw LengthMismatch("A must have k+1 entries");
    if (A[0] != 1) throw NegativeCount("A_0 must equal 1");
    BigInt card = 1;
    for (long long i = 0; i < params.log_qC; ++i) card *= q;

    std::vector<BigInt> B(k + 1, 0);
    B[0] = 1;
    for (int nu = 1; nu <= k; ++nu) {
        BigInt s = 0;
        for (int i = 0; i <= k - nu; ++i) s += A[i] * gauss_int(k - i, nu, q);
        BigInt num = s;
        for (int i = 0; i < params.m * nu; ++i) num *= q;
        if (num % card != 0)
            throw NegativeCount(
                "inconsistent input distribution: a_nu is not an integer");
        BigInt a = num / card;
        for (int j = 0; j < nu; ++j) a -= B[j] * gauss_int(k - j, nu - j, q);
        if (a < 0)
            throw NegativeCount("inconsistent input distribution: B_" +
                                std::to_string(nu) + " is negative");
        B[nu] = a;
    }
    return B;
}

std::vector<IntPolynomial> dual_distribution_symbolic(
    const std::vector<IntPolynomial>& A, const DualParams& params) {
    const int k = params.k;
    if (static_cast<int>(A.size()) != k + 1)
        throw LengthMismatch("A must have k+1 entries");
    if (!(A[0] == IntPolynomial::constant(1)))
        throw NonPolynomialResult("A_0 must equal 1");

    std::vector<IntPolynomial> B(k + 1);
    B[0] = IntPolynomial::constant(1);
    for (int nu = 1; nu <= k; ++nu) {
        IntPolynomial s;
        for (int i = 0; i <= k - nu; ++i) s = s + A[i] * gauss_poly(k - i, nu);
        // division by |C| = q^log_qC is an exponent shift
        IntPolynomial a =
            s.shifted(params.m * nu - static_cast<int>(params.log_qC));
        for (int j = 0; j < nu; ++j)
            a = a - B[j] * gauss_poly(k - j, nu - j);
        B[nu] = a;
    }
    for (int nu = 0; nu <= k; ++nu)
        if (!B[nu].is_polynomial())
            throw NonPolynomialResult("B_" + std::to_string(nu) +
                                      " has negative exponents: " +
                                      B[nu].to_string());
    return B;
}

bool sum_identity_check(const std::vector<BigInt>& A, int n, const BigInt& q) {
    BigInt lhs = 0;
    for (int i = 1; i <= n - 1 && i < static_cast<int>(A.size()); ++i)
        lhs += A[i] * gauss_int(n - i, 1, q);
    BigInt qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    BigInt rhs = (qn - 1) * gauss_int(n, 1, q);
    return lhs == rhs;
}

bool sum_identity_check_symbolic(const std::vector<IntPolynomial>& A, int n) {
    IntPolynomial lhs;
    for (int i = 1; i <= n - 1 && i < static_cast<int>(A.size()); ++i)
        lhs = lhs + A[i] * gauss_poly(n - i, 1);
    IntPolynomial rhs =
        (IntPolynomial::q_power(n) - IntPolynomial::constant(1)) *
        gauss_poly(n, 1);
    return lhs == rhs;
}

BigInt a_top_formula(const std::vector<BigInt>& A, int n, const BigInt& q) {
    BigInt qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    BigInt head = (qn - 1) * (qn - 1);
    if (head % (q - 1) != 0)
        throw InexactDivision("(q^n-1)^2/(q-1) not exact");
    BigInt r = head / (q - 1);
    for (int i = 0; i <= n - 2 && i < static_cast<int>(A.size()); ++i)
        r -= A[i] * gauss_int(n - i, 1, q);
    r += gauss_int(n, 1, q);
    return r;
}

IntPolynomial a_top_formula_symbolic(const std::vector<IntPolynomial>& A,
                                     int n) {
    const IntPolynomial one = IntPolynomial::constant(1);
    IntPolynomial qn1 = IntPolynomial::q_power(n) - one;
    IntPolynomial r = IntPolynomial::exact_div(
        qn1 * qn1, IntPolynomial::q_power(1) - one);
    for (int i = 0; i <= n - 2 && i < static_cast<int>(A.size()); ++i)
        r = r - A[i] * gauss_poly(n - i, 1);
    return r + gauss_poly(n, 1);
}

bool b1_is_zero(const std::vector<BigInt>& A, int n, const BigInt& q) {
    auto B = dual_distribution(A, DualParams{n, n, 2 * n}, q);
    return B[1] == 0;
}

B2Identity b2_identity(const std::vector<BigInt>& A, int n, const BigInt& q) {
    B2Identity out;
    auto B = dual_distribution(A, DualParams{n, n, 2 * n}, q);
    out.lhs = B[2];
    out.rhs = 0;
    for (int i = 1; i <= n - 2 && i < static_cast<int>(A.size()); ++i)
        out.rhs += A[i] * gauss_int(n - i, 2, q);
    out.equal = out.lhs == out.rhs;
    return out;
}

B2IdentitySymbolic b2_identity_symbolic(const std::vector<IntPolynomial>& A,
                                        int n) {
    B2IdentitySymbolic out;
    auto B = dual_distribution_symbolic(A, DualParams{n, n, 2 * n});
    out.lhs = B[2];
    for (int i = 1; i <= n - 2 && i < static_cast<int>(A.size()); ++i)
        out.rhs = out.rhs + A[i] * gauss_poly(n - i, 2);
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace rankgeo
