#ifndef RANKGEO_FIELD_HPP
#define RANKGEO_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rankgeo/errors.hpp"

namespace rankgeo {

// Default construction cap: exp/log tables need one entry per field element.
inline constexpr std::uint64_t kDefaultFieldBudget = 1ull << 20;
// Default cap for exhaustive enumeration of codes / scalar tuples.
inline constexpr std::uint64_t kDefaultEnumBudget = 1ull << 22;

// Element of F_{p^{e*n}}. The index encodes the coordinate vector in the
// power basis of the modulus root t, base p, constant term first:
// idx = sum_i digit_i * p^i.
struct Fe {
    std::uint32_t idx = 0;
    friend bool operator==(Fe a, Fe b) = default;
    friend auto operator<=>(Fe a, Fe b) = default;
};

// The tower F_p < F_q < F_{q^n} with q = p^e, realised as a single extension
// F_p[t]/(m(t)) of degree e*n. The subfield F_q is the set of fixed points of
// x -> x^q. Immutable after construction; all operations are const and
// re-entrant.
class FieldContext {
  public:
    static std::shared_ptr<const FieldContext> make(
        std::int64_t p, int e, int n,
        std::optional<std::vector<int>> modulus = std::nullopt,
        std::uint64_t budget = kDefaultFieldBudget);

    std::int64_t p() const { return p_; }
    int e() const { return e_; }
    int n() const { return n_; }
    int degree() const { return en_; }              // e*n
    std::uint64_t q() const { return q_; }          // p^e
    std::uint64_t order() const { return order_; }  // q^n
    const std::vector<int>& modulus() const { return modulus_; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return one_; }
    Fe generator() const { return generator_; }

    // Powers 1, b, ..., b^{n-1} of the generator: an F_q-basis of F_{q^n}.
    const std::vector<Fe>& fq_power_basis() const { return fq_power_basis_; }

    std::vector<int> digits(Fe x) const;
    Fe from_digits(const std::vector<int>& digits) const;

    Fe add(Fe x, Fe y) const;
    Fe sub(Fe x, Fe y) const;
    Fe neg(Fe x) const;
    Fe mul(Fe x, Fe y) const;
    Fe inv(Fe x) const;      // throws DivisionByZero on 0
    Fe div(Fe x, Fe y) const;
    Fe pow(Fe x, std::int64_t k) const;

    // x^{q^i}; i is reduced mod n.
    Fe frobenius(Fe x, std::int64_t i) const;
    // Tr(x) = x + x^q + ... + x^{q^{n-1}}, lands in F_q.
    Fe rel_trace(Fe x) const;
    // true iff x^q = x.
    bool in_subfield(Fe x) const;

    // The q elements of F_q in enumeration order: 0 first, then powers of the
    // subfield generator g^{(q^n-1)/(q-1)}.
    const std::vector<Fe>& subfield_elements() const { return subfield_; }

    // g^i for 0 <= i < q^n - 1.
    Fe exp(std::uint64_t i) const { return exp_[i % (order_ - 1)]; }
    // discrete log base g of a nonzero element.
    std::uint64_t log(Fe x) const;

    // Scalar stream for code enumeration: index 0 is zero, index i >= 1 is
    // g^{i-1} (big field) or h^{i-1} (subfield).
    Fe scalar_at(std::uint64_t i, bool big_field) const;

    // Coordinates of x in fq_power_basis (n elements of F_q), and back.
    std::vector<Fe> coords_over_fq(Fe x) const;
    Fe from_coords_fq(const std::vector<Fe>& coords) const;

  private:
    FieldContext() = default;

    std::int64_t p_ = 0;
    int e_ = 0, n_ = 0, en_ = 0;
    std::uint64_t q_ = 0, order_ = 0;
    std::vector<int> modulus_;
    Fe one_, generator_;
    std::vector<Fe> fq_power_basis_;
    std::vector<Fe> subfield_;
    std::vector<Fe> exp_;             // exp_[i] = g^i, size order-1
    std::vector<std::uint32_t> log_;  // log_[x.idx], undefined at 0
    std::vector<Fe> frob_;            // frob_[x.idx] = x^q
    std::vector<std::uint64_t> p_pow_;      // p^i for digit access
    std::vector<Fe> fq_fp_basis_;           // F_p-basis of F_q, e elements
    std::vector<int> coord_solver_;         // row-major en x en inverse over F_p
};

using FieldPtr = std::shared_ptr<const FieldContext>;

// Conway polynomial C_{p,d} as coefficients over F_p, constant term first,
// monic of degree d. Computed on demand from the defining minimality and
// norm-compatibility conditions and cached. Supported: p in
// {2,3,5,7,11,13}, d <= 16; otherwise throws NoDefaultModulus.
std::vector<int> conway_polynomial(std::int64_t p, int degree);

bool is_prime(std::int64_t v);

}  // namespace rankgeo

#endif
