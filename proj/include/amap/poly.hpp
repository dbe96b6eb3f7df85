#ifndef AMAP_POLY_HPP
#define AMAP_POLY_HPP

#include "amap/domain.hpp"
#include "amap/finite_field.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace amap {

/* Univariate polynomial with coefficients in some F_q (encoded field
 * elements), constant term first, no trailing zeros.  The zero polynomial is
 * the empty sequence.  A Poly does not know its field; arithmetic goes
 * through a PolyRing. */
class Poly
{
    std::vector<std::uint32_t> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

  public:
    Poly() = default;
    explicit Poly(std::vector<std::uint32_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    std::vector<std::uint32_t> const & coeffs() const { return c_; }

    friend bool operator==(Poly const &, Poly const &) = default;
};

/// Degree first, then coefficients from the top down.
bool poly_less(Poly const & a, Poly const & b);

using PolyFactors = std::vector<std::pair<Poly, unsigned>>;

class PolyRing
{
    FieldPtr field_;

  public:
    using Elem = FiniteField::Elem;

    explicit PolyRing(FieldPtr field);

    FiniteField const & field() const { return *field_; }
    FieldPtr const & field_ptr() const { return field_; }
    std::uint32_t q() const { return field_->size(); }

    Poly zero() const { return {}; }
    Poly one() const { return Poly({1}); }
    Poly x() const { return Poly({0, 1}); }
    Poly constant(Elem c) const { return Poly({c}); }
    Poly monomial(unsigned deg, Elem c = 1) const;
    /// x^n - 1
    Poly x_pow_minus_one(unsigned n) const;

    Poly add(Poly const & a, Poly const & b) const;
    Poly sub(Poly const & a, Poly const & b) const;
    Poly neg(Poly const & a) const;
    Poly scale(Poly const & a, Elem c) const;
    Poly mul(Poly const & a, Poly const & b) const;
    std::pair<Poly, Poly> divmod(Poly const & a, Poly const & b) const;
    Poly mod(Poly const & a, Poly const & b) const;
    /// a / b, throwing unless b divides a.
    Poly exact_div(Poly const & a, Poly const & b) const;
    Poly monic(Poly const & a) const;
    /// Monic gcd; gcd(0, 0) = 0.
    Poly gcd(Poly const & a, Poly const & b) const;
    Poly pow(Poly const & a, std::uint64_t e) const;
    Poly powmod(Poly const & a, std::uint64_t e, Poly const & m) const;
    Poly derivative(Poly const & a) const;
    Elem eval(Poly const & a, Elem x) const;

    bool is_irreducible(Poly const & f) const;

    /// Monic irreducible factors with multiplicities, sorted by poly_less.
    /// Square-free decomposition, distinct-degree, then equal-degree
    /// splitting (deterministic search for a splitting polynomial).
    PolyFactors factor(Poly const & f) const;
    /// Trial division by all monic irreducibles of degree <= 4; only valid
    /// for deg f <= 9.  Same output format as factor().
    PolyFactors factor_by_trial_division(Poly const & f) const;

    /// All monic irreducibles of the given degree, in increasing encoding.
    std::vector<Poly> monic_irreducibles(unsigned deg) const;
    /// The first entry of monic_irreducibles(deg).
    Poly first_monic_irreducible(unsigned deg) const;

    /// Polynomial of degree < len whose coefficients are the base-q digits
    /// of index.
    Poly from_index(std::uint64_t index, unsigned len) const;
    std::uint64_t to_index(Poly const & a) const;

    std::string to_string(Poly const & a) const;

  private:
    PolyFactors square_free(Poly const & f) const;
    std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly const & f) const;
    void equal_degree(Poly const & f, unsigned d, std::vector<Poly> & out) const;
    Poly pth_root(Poly const & f) const;
};

/* Ideal of F_q[x], stored by its monic generator. */
class PolyIdeal
{
    Poly gen_;

  public:
    PolyIdeal() : gen_({1}) {}
    /// gen must be monic and nonzero.
    explicit PolyIdeal(Poly gen);

    Poly const & generator() const { return gen_; }
    int degree() const { return gen_.degree(); }

    friend bool operator==(PolyIdeal const &, PolyIdeal const &) = default;
    friend bool operator<(PolyIdeal const & a, PolyIdeal const & b)
    {
        return poly_less(a.gen_, b.gen_);
    }
};

/* F_q[x] as a residually finite Dedekind domain.  N(<g>) = q^deg g; the
 * residues modulo <g> are the polynomials of degree < deg g, indexed by
 * PolyRing::to_index. */
class PolyDomain
{
    PolyRing ring_;

  public:
    using Element = Poly;
    using Ideal = PolyIdeal;

    explicit PolyDomain(FieldPtr field) : ring_(std::move(field)) {}

    PolyRing const & ring() const { return ring_; }
    FiniteField const & field() const { return ring_.field(); }

    std::string name() const;
    nlohmann::json describe() const;

    Element zero() const { return {}; }
    Element one() const { return ring_.one(); }
    bool is_zero(Element const & x) const { return x.is_zero(); }
    Element multiply(Element const & x, Element const & y) const { return ring_.mul(x, y); }

    Ideal principal(Element const & x) const;
    Ideal unit_ideal() const { return PolyIdeal(); }
    bool is_unit_ideal(Ideal const & I) const { return I.degree() == 0; }

    std::uint64_t norm(Ideal const & I) const;
    Factorization<Ideal> factor(Ideal const & I) const;
    Ideal product(Ideal const & I, Ideal const & J) const;
    Ideal sum(Ideal const & I, Ideal const & J) const;
    Ideal sum(Ideal const & I, Element const & x) const;
    bool contains(Ideal const & I, Element const & x) const;
    Ideal exact_quotient(Ideal const & I, Ideal const & J) const;

    Element reduce(Ideal const & I, Element const & x) const;
    Element residue(Ideal const & I, std::uint64_t index) const;
    std::uint64_t residue_index(Ideal const & I, Element const & reduced) const;

    nlohmann::json element_json(Element const & x) const { return x.coeffs(); }
    nlohmann::json ideal_json(Ideal const & I) const { return I.generator().coeffs(); }
};

static_assert(Domain<PolyDomain>);

} // namespace amap

#endif
