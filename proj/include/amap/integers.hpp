#ifndef AMAP_INTEGERS_HPP
#define AMAP_INTEGERS_HPP

#include "amap/domain.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace amap {

namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic primality test (trial division; inputs are desk-scale).
bool is_prime(std::uint64_t n);

/// Trial-division factorization of n >= 1, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

/// If n = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::int64_t floor_div(std::int64_t a, std::int64_t m);

} // namespace nt

/* Ideal n*Z of the integers, stored by its positive generator. */
class IntIdeal
{
    std::uint64_t gen_ = 1;

  public:
    IntIdeal() = default;
    explicit IntIdeal(std::int64_t generator);

    std::uint64_t generator() const { return gen_; }

    friend bool operator==(IntIdeal const &, IntIdeal const &) = default;
    friend auto operator<=>(IntIdeal const &, IntIdeal const &) = default;
};

/* The rational integers as a residually finite Dedekind domain.  Residues
 * modulo n are 0, ..., n-1. */
class IntegerDomain
{
  public:
    using Element = std::int64_t;
    using Ideal = IntIdeal;

    std::string name() const { return "Z"; }
    nlohmann::json describe() const { return {{"kind", "Z"}}; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element x) const { return x == 0; }
    Element multiply(Element x, Element y) const;

    Ideal principal(Element x) const { return IntIdeal(x); }
    Ideal unit_ideal() const { return IntIdeal(1); }
    bool is_unit_ideal(Ideal const & I) const { return I.generator() == 1; }

    std::uint64_t norm(Ideal const & I) const { return I.generator(); }
    Factorization<Ideal> factor(Ideal const & I) const;
    Ideal product(Ideal const & I, Ideal const & J) const;
    Ideal sum(Ideal const & I, Ideal const & J) const;
    Ideal sum(Ideal const & I, Element x) const;
    bool contains(Ideal const & I, Element x) const;
    Ideal exact_quotient(Ideal const & I, Ideal const & J) const;

    Element reduce(Ideal const & I, Element x) const;
    Element residue(Ideal const & I, std::uint64_t index) const;
    std::uint64_t residue_index(Ideal const & I, Element reduced) const;

    nlohmann::json element_json(Element x) const { return x; }
    nlohmann::json ideal_json(Ideal const & I) const { return I.generator(); }
};

static_assert(Domain<IntegerDomain>);

} // namespace amap

#endif
