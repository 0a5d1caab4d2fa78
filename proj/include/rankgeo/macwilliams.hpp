#ifndef RANKGEO_MACWILLIAMS_HPP
#define RANKGEO_MACWILLIAMS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "rankgeo/errors.hpp"

namespace rankgeo {

using BigInt = boost::multiprecision::cpp_int;

// Integer-coefficient polynomial in the formal variable q. Laurent-capable:
// negative exponents may appear in intermediates, public results are checked.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    static IntPolynomial constant(BigInt v);
    static IntPolynomial q_power(int e);

    bool is_zero() const { return c_.empty(); }
    bool is_polynomial() const;  // no negative exponents
    int min_exp() const;
    int max_exp() const;
    const std::map<int, BigInt>& coeffs() const { return c_; }

    IntPolynomial shifted(int e) const;  // multiply by q^e
    BigInt eval(const BigInt& q) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    // Exact division; throws InexactDivision if the quotient is not a
    // Laurent polynomial over Z.
    static IntPolynomial exact_div(const IntPolynomial& num,
                                   const IntPolynomial& den);

    std::string to_string() const;  // descending exponents, e.g. "q^5 - 1"

  private:
    void set(int e, BigInt v);
    std::map<int, BigInt> c_;  // exponent -> nonzero coefficient
};

// Gaussian binomial [a choose b]_q; 0 when b < 0 or b > a.
BigInt gauss_int(int a, int b, const BigInt& q);
IntPolynomial gauss_poly(int a, int b);

// Parameters of the Delsarte-Ravagnani recursion: codewords are k x m
// matrices over F_q and |C| = q^log_qC.
struct DualParams {
    int k = 0;
    int m = 0;
    long long log_qC = 0;
};

// Rank distribution of the dual code from the rank distribution of the code.
// A has k+1 entries with A[0] = 1.
std::vector<BigInt> dual_distribution(const std::vector<BigInt>& A,
                                      const DualParams& params,
                                      const BigInt& q);
std::vector<IntPolynomial> dual_distribution_symbolic(
    const std::vector<IntPolynomial>& A, const DualParams& params);

// sum_{i=1}^{n-1} A_i [n-i choose 1] == (q^n - 1) [n choose 1], for k=2
// proper-linear-set codes.
bool sum_identity_check(const std::vector<BigInt>& A, int n, const BigInt& q);
bool sum_identity_check_symbolic(const std::vector<IntPolynomial>& A, int n);

// (q^n-1)^2/(q-1) - sum_{i=0}^{n-2} A_i [n-i choose 1] + [n choose 1].
BigInt a_top_formula(const std::vector<BigInt>& A, int n, const BigInt& q);
IntPolynomial a_top_formula_symbolic(const std::vector<IntPolynomial>& A,
                                     int n);

bool b1_is_zero(const std::vector<BigInt>& A, int n, const BigInt& q);

struct B2Identity {
    BigInt lhs, rhs;
    bool equal = false;
};
B2Identity b2_identity(const std::vector<BigInt>& A, int n, const BigInt& q);

struct B2IdentitySymbolic {
    IntPolynomial lhs, rhs;
    bool equal = false;
};
B2IdentitySymbolic b2_identity_symbolic(const std::vector<IntPolynomial>& A,
                                        int n);

}  // namespace rankgeo

#endif
