#include "amap/quadorder.hpp"

#include "amap/errors.hpp"
#include "amap/integers.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>

namespace amap {

namespace detail {

struct QuadFactorCache
{
    std::once_flag once;
    std::optional<Factorization<QuadIdeal>> value;
};

} // namespace detail

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw SizeLimitExceeded("coordinate overflow in quadratic order arithmetic");
    return static_cast<std::int64_t>(v);
}

struct ExtGcd
{
    std::int64_t g, s, t; // g = s*a + t*b, g >= 0
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

struct Hnf
{
    std::int64_t a, b, c;
};

/* 2x2 HNF of the lattice spanned by the given vectors.  Throws if the
 * lattice is not of full rank. */
Hnf lattice_hnf(std::span<QuadInt const> vecs)
{
    // Pivot vector w with the gcd of all y's, plus gcd of the y=0 remainders.
    std::int64_t wx = 0, wy = 0, ax = 0;
    for (auto const & v : vecs) {
        if (v.y == 0) {
            ax = std::gcd(ax, v.x);
        } else if (wy == 0) {
            wx = v.x;
            wy = v.y;
        } else {
            auto [g, s, t] = ext_gcd(wy, v.y);
            std::int64_t nx = narrow(i128(s) * wx + i128(t) * v.x);
            // Unimodular complement has zero y-coordinate.
            std::int64_t rx = narrow(i128(v.y / g) * wx - i128(wy / g) * v.x);
            ax = std::gcd(ax, rx);
            wx = nx;
            wy = g;
        }
        if (ax != 0)
            wx = nt::floor_mod(wx, ax);
    }
    if (wy < 0) {
        wx = -wx;
        wy = -wy;
    }
    ax = ax < 0 ? -ax : ax;
    if (ax == 0 || wy == 0)
        throw InvalidArgument("generators do not span a nonzero ideal");
    return {ax, nt::floor_mod(wx, ax), wy};
}

bool lattice_contains(std::int64_t a, std::int64_t b, std::int64_t c, QuadInt const & z)
{
    if (z.y % c != 0)
        return false;
    i128 rem = i128(z.x) - i128(z.y / c) * b;
    return rem % a == 0;
}

bool squarefree(std::uint64_t n)
{
    for (auto [p, e] : nt::factor(n))
        if (e > 1)
            return false;
    return true;
}

} // namespace

QuadIdeal::QuadIdeal(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c)
    : d_(d), a_(a), b_(b), c_(c), cache_(std::make_shared<detail::QuadFactorCache>())
{
}

bool operator<(QuadIdeal const & x, QuadIdeal const & y)
{
    auto key = [](QuadIdeal const & I) {
        return std::tuple(I.norm(), I.a_, I.b_, I.c_, I.d_);
    };
    return key(x) < key(y);
}

QuadraticOrder::QuadraticOrder(std::int64_t d) : d_(d)
{
    if (d >= 0)
        throw InvalidArgument("quadratic order: d must be negative");
    if (!squarefree(static_cast<std::uint64_t>(-d)))
        throw InvalidArgument("quadratic order: d must be squarefree");
    if (nt::floor_mod(d, 4) == 1) {
        t_ = 1;
        n_ = (1 - d) / 4;
        disc_ = d;
    } else {
        t_ = 0;
        n_ = -d;
        disc_ = 4 * d;
    }
}

std::string QuadraticOrder::name() const
{
    if (t_ == 0)
        return "Z[sqrt(" + std::to_string(d_) + ")]";
    return "Z[(1+sqrt(" + std::to_string(d_) + "))/2]";
}

QuadInt QuadraticOrder::add(Element const & u, Element const & v) const
{
    return {narrow(i128(u.x) + v.x), narrow(i128(u.y) + v.y)};
}

QuadInt QuadraticOrder::subtract(Element const & u, Element const & v) const
{
    return {narrow(i128(u.x) - v.x), narrow(i128(u.y) - v.y)};
}

QuadInt QuadraticOrder::multiply(Element const & u, Element const & v) const
{
    i128 yy = i128(u.y) * v.y;
    return {narrow(i128(u.x) * v.x - yy * n_),
            narrow(i128(u.x) * v.y + i128(v.x) * u.y + yy * t_)};
}

QuadInt QuadraticOrder::power(Element const & u, unsigned e) const
{
    QuadInt r = one();
    for (unsigned i = 0; i < e; ++i)
        r = multiply(r, u);
    return r;
}

QuadInt QuadraticOrder::times_omega(Element const & u) const
{
    // omega*(x + y*omega) = -n*y + (x + t*y)*omega
    return {narrow(-i128(n_) * u.y), narrow(i128(u.x) + i128(t_) * u.y)};
}

std::uint64_t QuadraticOrder::element_norm(Element const & u) const
{
    i128 v = i128(u.x) * u.x + i128(t_) * u.x * u.y + i128(n_) * u.y * u.y;
    return static_cast<std::uint64_t>(narrow(v));
}

QuadIdeal QuadraticOrder::ideal_from_generators(std::span<QuadInt const> gens) const
{
    std::vector<QuadInt> vecs;
    vecs.reserve(2 * gens.size());
    for (auto const & g : gens) {
        if (is_zero(g))
            continue;
        vecs.push_back(g);
        vecs.push_back(times_omega(g));
    }
    if (vecs.empty())
        throw InvalidArgument("ideal generators are all zero");
    auto h = lattice_hnf(vecs);
    return ideal_from_hnf(h.a, h.b, h.c);
}

QuadIdeal QuadraticOrder::ideal_from_hnf(std::int64_t a, std::int64_t b, std::int64_t c) const
{
    if (a <= 0 || c <= 0 || b < 0 || b >= a)
        throw InvalidArgument("not a Hermite normal form");
    if (a % c != 0 || b % c != 0)
        throw InvalidArgument("HNF is not an ideal: c must divide a and b");
    // omega * basis must stay in the lattice
    if (!lattice_contains(a, b, c, times_omega({a, 0})) ||
        !lattice_contains(a, b, c, times_omega({b, c})))
        throw InvalidArgument("lattice is not closed under multiplication by omega");
    return QuadIdeal(d_, a, b, c);
}

QuadIdeal QuadraticOrder::principal(Element const & z) const
{
    if (is_zero(z))
        throw InvalidArgument("zero ideal is not allowed");
    return ideal_from_generators({z});
}

void QuadraticOrder::check_same_order(Ideal const & I) const
{
    if (I.d() != d_)
        throw InvalidArgument("ideal belongs to a different quadratic order");
}

std::uint64_t QuadraticOrder::norm(Ideal const & I) const
{
    check_same_order(I);
    return I.norm();
}

QuadIdeal QuadraticOrder::sum(Ideal const & I, Ideal const & J) const
{
    check_same_order(I);
    check_same_order(J);
    QuadInt v[] = {{I.a(), 0}, {I.b(), I.c()}, {J.a(), 0}, {J.b(), J.c()}};
    auto h = lattice_hnf(v);
    return ideal_from_hnf(h.a, h.b, h.c);
}

QuadIdeal QuadraticOrder::sum(Ideal const & I, Element const & z) const
{
    check_same_order(I);
    QuadInt v[] = {{I.a(), 0}, {I.b(), I.c()}, z, times_omega(z)};
    auto h = lattice_hnf(v);
    return ideal_from_hnf(h.a, h.b, h.c);
}

QuadIdeal QuadraticOrder::product(Ideal const & I, Ideal const & J) const
{
    check_same_order(I);
    check_same_order(J);
    QuadInt const bi[] = {{I.a(), 0}, {I.b(), I.c()}};
    QuadInt const bj[] = {{J.a(), 0}, {J.b(), J.c()}};
    std::vector<QuadInt> v;
    for (auto const & u : bi)
        for (auto const & w : bj)
            v.push_back(multiply(u, w));
    auto h = lattice_hnf(v);
    return ideal_from_hnf(h.a, h.b, h.c);
}

bool QuadraticOrder::contains(Ideal const & I, Element const & z) const
{
    check_same_order(I);
    return lattice_contains(I.a(), I.b(), I.c(), z);
}

bool QuadraticOrder::contains(Ideal const & I, Ideal const & J) const
{
    return contains(I, QuadInt{J.a(), 0}) && contains(I, QuadInt{J.b(), J.c()});
}

PrimeSplitting QuadraticOrder::rational_prime_splitting(std::uint64_t p) const
{
    if (!nt::is_prime(p))
        throw InvalidArgument("rational_prime_splitting: " + std::to_string(p) + " is not prime");
    auto const sp = static_cast<std::int64_t>(p);
    // Roots of the minimal polynomial X^2 - t X + n of omega modulo p.
    std::vector<std::int64_t> roots;
    for (std::int64_t r = 0; r < sp; ++r) {
        i128 v = i128(r) * r - i128(t_) * r + n_;
        if (v % sp == 0)
            roots.push_back(r);
    }
    PrimeSplitting out;
    if (roots.empty()) {
        out.type = SplitType::Inert;
        out.primes.push_back(principal({sp, 0}));
        return out;
    }
    out.type = roots.size() == 1 ? SplitType::Ramified : SplitType::Split;
    for (auto r : roots)
        out.primes.push_back(ideal_from_generators({QuadInt{sp, 0}, QuadInt{-r, 1}}));
    std::sort(out.primes.begin(), out.primes.end(), [](auto const & x, auto const & y) {
        return std::tuple(x.a(), x.b(), x.c()) < std::tuple(y.a(), y.b(), y.c());
    });
    return out;
}

Factorization<QuadIdeal> QuadraticOrder::compute_factorization(Ideal const & I) const
{
    Factorization<QuadIdeal> f;
    for (auto [p, e] : nt::factor(I.norm())) {
        for (auto const & P : rational_prime_splitting(p).primes) {
            unsigned k = 0;
            QuadIdeal Pk = P;
            while (contains(Pk, I)) {
                ++k;
                Pk = product(Pk, P);
            }
            if (k)
                f.factors.emplace_back(P, k);
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](auto const & x, auto const & y) { return x.first < y.first; });
    if (!(from_factorization(*this, f) == I))
        throw InternalError("ideal factorization does not reconstruct the ideal");
    return f;
}

Factorization<QuadIdeal> QuadraticOrder::factor(Ideal const & I) const
{
    check_same_order(I);
    auto & cache = *I.cache_;
    std::call_once(cache.once, [&] { cache.value = compute_factorization(I); });
    return *cache.value;
}

QuadIdeal QuadraticOrder::exact_quotient(Ideal const & I, Ideal const & J) const
{
    auto fi = factor(I);
    Factorization<QuadIdeal> out;
    for (auto const & [p, e] : fi.factors) {
        unsigned ej = factor(J).exponent_of(p);
        if (ej > e)
            throw InvalidArgument("exact_quotient: divisor does not divide the ideal");
        if (e > ej)
            out.factors.emplace_back(p, e - ej);
    }
    for (auto const & [p, e] : factor(J).factors)
        if (fi.exponent_of(p) == 0)
            throw InvalidArgument("exact_quotient: divisor does not divide the ideal");
    return from_factorization(*this, out);
}

QuadInt QuadraticOrder::reduce(Ideal const & I, Element const & z) const
{
    check_same_order(I);
    std::int64_t k = nt::floor_div(z.y, I.c());
    std::int64_t y = z.y - k * I.c();
    std::int64_t x = narrow(i128(z.x) - i128(k) * I.b());
    return {nt::floor_mod(x, I.a()), y};
}

QuadInt QuadraticOrder::residue(Ideal const & I, std::uint64_t index) const
{
    if (index >= I.norm())
        throw InvalidArgument("residue index out of range");
    auto const a = static_cast<std::uint64_t>(I.a());
    return {static_cast<std::int64_t>(index % a), static_cast<std::int64_t>(index / a)};
}

std::uint64_t QuadraticOrder::residue_index(Ideal const & I, Element const & reduced) const
{
    return static_cast<std::uint64_t>(reduced.y) * static_cast<std::uint64_t>(I.a()) +
           static_cast<std::uint64_t>(reduced.x);
}

nlohmann::json QuadraticOrder::ideal_json(Ideal const & I) const
{
    return {{"d", I.d()}, {"gens", {{I.a(), 0}, {I.b(), I.c()}}}};
}

} // namespace amap
