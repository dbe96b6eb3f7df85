#ifndef AMAP_FINITE_FIELD_HPP
#define AMAP_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace amap {

/* The finite field F_q, q = p^k, realized as F_p[t]/(m(t)) for a monic
 * irreducible m of degree k.  Elements are encoded as integers in [0, q):
 * the base-p digits of the encoding are the coefficients of the residue
 * polynomial, constant term least significant.  For k = 1 this is just the
 * residue mod p.
 *
 * Without an explicit modulus the first irreducible monic polynomial of
 * degree k is used, scanning coefficient vectors in increasing order of
 * their encoding (so x^2+1 for F_9, x^3+x+1 for F_8). */
class FiniteField
{
  public:
    using Elem = std::uint32_t;

    static constexpr std::uint64_t max_size = std::uint64_t(1) << 22;

    explicit FiniteField(std::uint32_t p, unsigned k = 1);
    /// Caller-provided modulus: monic, degree k >= 2, coefficients in [0, p)
    /// listed constant term first.  Irreducibility is verified.
    FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t size() const { return q_; }
    /// Empty for prime fields.
    std::vector<std::uint32_t> const & modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t v) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// +1 on nonzero squares, -1 on nonsquares, 0 at 0.  Odd q only.
    int quadratic_character(Elem a) const;

    std::string name() const;

    bool operator==(FiniteField const & o) const
    {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

  private:
    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    // k > 1 only: discrete log / antilog w.r.t. a primitive element.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;

    void init_extension();
    Elem slow_mul(Elem a, Elem b) const;
};

using FieldPtr = std::shared_ptr<FiniteField const>;

/// Field with q elements (q a prime power), default modulus.
FieldPtr make_field(std::uint64_t q);

} // namespace amap

#endif
