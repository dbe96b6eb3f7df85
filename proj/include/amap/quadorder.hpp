#ifndef AMAP_QUADORDER_HPP
#define AMAP_QUADORDER_HPP

#include "amap/domain.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace amap {

/* x + y*omega in the {1, omega} basis of the maximal order. */
struct QuadInt
{
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(QuadInt const &, QuadInt const &) = default;
};

namespace detail {
struct QuadFactorCache;
}

/*
 * Nonzero ideal of an imaginary quadratic maximal order, kept in Hermite
 * normal form: the Z-basis is {a, b + c*omega} with a, c > 0, 0 <= b < a,
 * c | a and c | b.  The HNF is unique, so equality is matrix equality.
 *
 * The prime factorization is computed on first request and shared by all
 * copies of the ideal.
 */
class QuadIdeal
{
    std::int64_t d_ = 0;
    std::int64_t a_ = 1, b_ = 0, c_ = 1;
    std::shared_ptr<detail::QuadFactorCache> cache_;

    friend class QuadraticOrder;
    QuadIdeal(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c);

  public:
    std::int64_t d() const { return d_; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::uint64_t norm() const { return static_cast<std::uint64_t>(a_) * static_cast<std::uint64_t>(c_); }

    friend bool operator==(QuadIdeal const & x, QuadIdeal const & y)
    {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator<(QuadIdeal const & x, QuadIdeal const & y);
};

enum class SplitType { Split, Ramified, Inert };

struct PrimeSplitting
{
    SplitType type;
    std::vector<QuadIdeal> primes; // sorted by HNF
};

/*
 * The maximal order O_K of K = Q(sqrt(d)), d < 0 squarefree, with
 * omega = sqrt(d) if d = 2,3 mod 4 and omega = (1 + sqrt(d))/2 if d = 1 mod 4.
 * omega satisfies omega^2 = t*omega - n with t = trace, n = norm of omega.
 */
class QuadraticOrder
{
  public:
    using Element = QuadInt;
    using Ideal = QuadIdeal;

    explicit QuadraticOrder(std::int64_t d);

    std::int64_t d() const { return d_; }
    std::int64_t discriminant() const { return disc_; }
    std::int64_t omega_trace() const { return t_; }
    std::int64_t omega_norm() const { return n_; }

    std::string name() const;
    nlohmann::json describe() const { return {{"kind", "quad"}, {"d", d_}}; }

    Element zero() const { return {0, 0}; }
    Element one() const { return {1, 0}; }
    bool is_zero(Element const & z) const { return z.x == 0 && z.y == 0; }
    Element add(Element const & u, Element const & v) const;
    Element subtract(Element const & u, Element const & v) const;
    Element multiply(Element const & u, Element const & v) const;
    Element power(Element const & u, unsigned e) const;
    Element times_omega(Element const & u) const;
    /// Field norm x^2 + t*x*y + n*y^2.
    std::uint64_t element_norm(Element const & u) const;

    /// HNF of the Z-module spanned by g and omega*g over all generators.
    Ideal ideal_from_generators(std::span<QuadInt const> gens) const;
    Ideal ideal_from_generators(std::initializer_list<QuadInt> gens) const
    {
        return ideal_from_generators(std::span<QuadInt const>(gens.begin(), gens.size()));
    }
    /// Validates the HNF shape and closure under multiplication by omega.
    Ideal ideal_from_hnf(std::int64_t a, std::int64_t b, std::int64_t c) const;

    Ideal principal(Element const & z) const;
    Ideal unit_ideal() const { return QuadIdeal(d_, 1, 0, 1); }
    bool is_unit_ideal(Ideal const & I) const { return I.a() == 1 && I.c() == 1; }

    std::uint64_t norm(Ideal const & I) const;
    Ideal sum(Ideal const & I, Ideal const & J) const;
    Ideal sum(Ideal const & I, Element const & z) const;
    Ideal product(Ideal const & I, Ideal const & J) const;
    bool contains(Ideal const & I, Element const & z) const;
    /// J subset of I (equivalently I | J).
    bool contains(Ideal const & I, Ideal const & J) const;

    PrimeSplitting rational_prime_splitting(std::uint64_t p) const;
    Factorization<Ideal> factor(Ideal const & I) const;
    /// I / J by exponent subtraction; throws unless J | I.
    Ideal exact_quotient(Ideal const & I, Ideal const & J) const;

    /// Representative with 0 <= y < c, then 0 <= x < a.
    Element reduce(Ideal const & I, Element const & z) const;
    Element residue(Ideal const & I, std::uint64_t index) const;
    std::uint64_t residue_index(Ideal const & I, Element const & reduced) const;

    nlohmann::json element_json(Element const & z) const { return {z.x, z.y}; }
    nlohmann::json ideal_json(Ideal const & I) const;

  private:
    std::int64_t d_;
    std::int64_t disc_;
    std::int64_t t_;
    std::int64_t n_;

    void check_same_order(Ideal const & I) const;
    Factorization<Ideal> compute_factorization(Ideal const & I) const;
};

static_assert(Domain<QuadraticOrder>);

} // namespace amap

#endif
