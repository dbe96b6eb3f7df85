#ifndef AMAP_DOMAIN_HPP
#define AMAP_DOMAIN_HPP

// Shared interface of the residually finite Dedekind domains supported here
// (Z, F_q[x], imaginary quadratic maximal orders) and the arithmetic that is
// written once on top of it: Euler phi, multiplicative order, divisor
// enumeration, a-decomposition and linear-congruence counting.

#include "amap/errors.hpp"
#include "json.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace amap {

/* Prime factorization of a nonzero ideal.  Primes are normalized, distinct
 * and sorted by the ideal ordering (norm first); exponents are >= 1.  The
 * unit ideal has an empty factorization. */
template <class Ideal>
struct Factorization
{
    std::vector<std::pair<Ideal, unsigned>> factors;

    bool empty() const { return factors.empty(); }
    std::size_t size() const { return factors.size(); }

    unsigned exponent_of(Ideal const & p) const
    {
        for (auto const & [q, e] : factors)
            if (q == p)
                return e;
        return 0;
    }

    unsigned total_exponent() const
    {
        unsigned s = 0;
        for (auto const & f : factors)
            s += f.second;
        return s;
    }

    bool operator==(Factorization const &) const = default;
};

template <class D>
concept Domain = requires(D const & dom,
                          typename D::Element const & x,
                          typename D::Ideal const & I,
                          std::uint64_t idx) {
    { dom.name() } -> std::convertible_to<std::string>;
    { dom.zero() } -> std::same_as<typename D::Element>;
    { dom.one() } -> std::same_as<typename D::Element>;
    { dom.is_zero(x) } -> std::same_as<bool>;
    { dom.multiply(x, x) } -> std::same_as<typename D::Element>;
    { dom.principal(x) } -> std::same_as<typename D::Ideal>;
    { dom.unit_ideal() } -> std::same_as<typename D::Ideal>;
    { dom.is_unit_ideal(I) } -> std::same_as<bool>;
    { dom.norm(I) } -> std::same_as<std::uint64_t>;
    { dom.factor(I) } -> std::same_as<Factorization<typename D::Ideal>>;
    { dom.product(I, I) } -> std::same_as<typename D::Ideal>;
    { dom.sum(I, I) } -> std::same_as<typename D::Ideal>;
    { dom.sum(I, x) } -> std::same_as<typename D::Ideal>;
    { dom.contains(I, x) } -> std::same_as<bool>;
    { dom.exact_quotient(I, I) } -> std::same_as<typename D::Ideal>;
    { dom.reduce(I, x) } -> std::same_as<typename D::Element>;
    { dom.residue(I, idx) } -> std::same_as<typename D::Element>;
    { dom.residue_index(I, x) } -> std::same_as<std::uint64_t>;
    { dom.element_json(x) } -> std::same_as<nlohmann::json>;
    { dom.ideal_json(I) } -> std::same_as<nlohmann::json>;
    { dom.describe() } -> std::same_as<nlohmann::json>;
    { I < I } -> std::convertible_to<bool>;
    { I == I } -> std::convertible_to<bool>;
};

template <Domain D>
using element_t = typename D::Element;
template <Domain D>
using ideal_t = typename D::Ideal;

/* a*b, throwing instead of wrapping. */
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw SizeLimitExceeded("integer overflow in norm computation");
    return r;
}

template <Domain D>
ideal_t<D> ideal_power(D const & dom, ideal_t<D> const & p, unsigned e)
{
    ideal_t<D> r = dom.unit_ideal();
    for (unsigned i = 0; i < e; ++i)
        r = dom.product(r, p);
    return r;
}

template <Domain D>
ideal_t<D> from_factorization(D const & dom, Factorization<ideal_t<D>> const & f)
{
    ideal_t<D> r = dom.unit_ideal();
    for (auto const & [p, e] : f.factors)
        r = dom.product(r, ideal_power(dom, p, e));
    return r;
}

// Product formula over the prime divisors; phi(unit ideal) = 1.
template <Domain D>
std::uint64_t euler_phi(D const & dom, ideal_t<D> const & n)
{
    std::uint64_t phi = 1;
    for (auto const & [p, e] : dom.factor(n).factors) {
        std::uint64_t np = dom.norm(p);
        std::uint64_t pe1 = 1;
        for (unsigned i = 1; i < e; ++i)
            pe1 = checked_mul(pe1, np);
        phi = checked_mul(phi, checked_mul(pe1, np - 1));
    }
    return phi;
}

/* Least i >= 1 with a^i = 1 mod n.  Requires <a> + n = D.  Computed by
 * repeated multiplication, bounded by phi(n). */
template <Domain D>
std::uint64_t mult_order(D const & dom, element_t<D> const & a, ideal_t<D> const & n)
{
    if (!dom.is_unit_ideal(dom.sum(n, a)))
        throw NotCoprime("mult_order: element is not a unit modulo the ideal");
    if (dom.is_unit_ideal(n))
        return 1;
    auto const one = dom.reduce(n, dom.one());
    auto const base = dom.reduce(n, a);
    std::uint64_t const bound = euler_phi(dom, n);
    auto x = base;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (x == one)
            return k;
        x = dom.reduce(n, dom.multiply(x, base));
    }
    throw InternalError("mult_order: no order found below phi(n)");
}

/* All divisors of n, sorted by the ideal ordering (norm, then canonical
 * representative). */
template <Domain D>
std::vector<ideal_t<D>> divisors(D const & dom, ideal_t<D> const & n)
{
    auto const f = dom.factor(n);
    std::vector<ideal_t<D>> out{dom.unit_ideal()};
    for (auto const & [p, e] : f.factors) {
        std::vector<ideal_t<D>> next;
        next.reserve(out.size() * (e + 1));
        for (auto const & m : out) {
            ideal_t<D> cur = m;
            next.push_back(cur);
            for (unsigned i = 1; i <= e; ++i) {
                cur = dom.product(cur, p);
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <Domain D>
struct ADecomposition
{
    ideal_t<D> n0; // primes all dividing <a>
    ideal_t<D> n1; // coprime to <a>
};

template <Domain D>
ADecomposition<D> a_decomposition(D const & dom, element_t<D> const & a, ideal_t<D> const & n)
{
    if (dom.is_zero(a))
        throw InvalidArgument("a_decomposition: a must be nonzero");
    Factorization<ideal_t<D>> f0, f1;
    for (auto const & pe : dom.factor(n).factors) {
        // p | <a>  <=>  a in p
        if (dom.contains(pe.first, a))
            f0.factors.push_back(pe);
        else
            f1.factors.push_back(pe);
    }
    return {from_factorization(dom, f0), from_factorization(dom, f1)};
}

// Number of x mod n with a*x = b (mod n): 0 unless b in <a> + n.
template <Domain D>
std::uint64_t congruence_solution_count(D const & dom,
                                        element_t<D> const & a,
                                        element_t<D> const & b,
                                        ideal_t<D> const & n)
{
    auto const g = dom.sum(n, a);
    return dom.contains(g, b) ? dom.norm(g) : 0;
}

} // namespace amap

#endif
