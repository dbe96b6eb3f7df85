#ifndef AMAP_TESTS_SUPPORT_HPP
#define AMAP_TESTS_SUPPORT_HPP

// Seeded generators and brute-force oracles shared by the test suites.
// Oracles only use residue enumeration, multiplication and reduction, never
// the factorization-based formulas they are compared against.

#include "amap/domain.hpp"
#include "amap/integers.hpp"
#include "amap/poly.hpp"
#include "amap/quadorder.hpp"

#include <map>
#include <random>
#include <vector>

namespace amap::test {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng & rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <Domain D>
std::vector<element_t<D>> all_residues(D const & dom, ideal_t<D> const & n)
{
    std::vector<element_t<D>> out;
    for (std::uint64_t i = 0; i < dom.norm(n); ++i)
        out.push_back(dom.residue(n, i));
    return out;
}

template <Domain D>
bool congruent(D const & dom, ideal_t<D> const & n, element_t<D> const & x, element_t<D> const & y)
{
    return dom.reduce(n, x) == dom.reduce(n, y);
}

// #{x mod n : a x = b mod n}
template <Domain D>
std::uint64_t brute_solution_count(D const & dom, element_t<D> const & a, element_t<D> const & b,
                                   ideal_t<D> const & n)
{
    std::uint64_t c = 0;
    for (auto const & x : all_residues(dom, n))
        if (congruent(dom, n, dom.multiply(a, x), b))
            ++c;
    return c;
}

template <Domain D>
bool brute_is_unit(D const & dom, ideal_t<D> const & n, element_t<D> const & x,
                   std::vector<element_t<D>> const & residues)
{
    for (auto const & y : residues)
        if (congruent(dom, n, dom.multiply(x, y), dom.one()))
            return true;
    return false;
}

template <Domain D>
std::uint64_t brute_unit_count(D const & dom, ideal_t<D> const & n)
{
    auto const rs = all_residues(dom, n);
    std::uint64_t c = 0;
    for (auto const & x : rs)
        if (brute_is_unit(dom, n, x, rs))
            ++c;
    return c;
}

// Least k >= 1 with a^k = 1 mod n, by iterated multiplication; 0 if none
// within norm(n) steps.
template <Domain D>
std::uint64_t brute_order(D const & dom, element_t<D> const & a, ideal_t<D> const & n)
{
    auto x = a;
    for (std::uint64_t k = 1; k <= dom.norm(n); ++k) {
        if (congruent(dom, n, x, dom.one()))
            return k;
        x = dom.reduce(n, dom.multiply(x, a));
    }
    return 0;
}

inline PolyRing ring_of(std::uint64_t q) { return PolyRing(make_field(q)); }

inline Poly random_poly(PolyRing const & R, Rng & rng, int max_deg)
{
    int deg = static_cast<int>(uniform(rng, -1, max_deg));
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg + 1));
    for (auto & x : c)
        x = static_cast<std::uint32_t>(uniform(rng, 0, R.q() - 1));
    if (deg >= 0 && c.back() == 0)
        c.back() = 1;
    return Poly(std::move(c));
}

inline Poly random_monic(PolyRing const & R, Rng & rng, int min_deg, int max_deg)
{
    int deg = static_cast<int>(uniform(rng, min_deg, max_deg));
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg + 1));
    for (auto & x : c)
        x = static_cast<std::uint32_t>(uniform(rng, 0, R.q() - 1));
    c.back() = 1;
    return Poly(std::move(c));
}

inline QuadInt random_quad(Rng & rng, std::int64_t r)
{
    return {uniform(rng, -r, r), uniform(rng, -r, r)};
}

// Random nonzero ideal of bounded norm: product of random principal and
// two-generator ideals, retried until the norm fits.
inline QuadIdeal random_quad_ideal(QuadraticOrder const & O, Rng & rng, std::uint64_t max_norm)
{
    for (;;) {
        QuadInt g1 = random_quad(rng, 12), g2 = random_quad(rng, 12);
        if (O.is_zero(g1))
            continue;
        auto I = uniform(rng, 0, 1) ? O.principal(g1) : O.ideal_from_generators({g1, g2});
        if (O.norm(I) <= max_norm)
            return I;
    }
}

} // namespace amap::test

#endif
