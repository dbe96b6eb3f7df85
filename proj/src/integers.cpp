#include "amap/integers.hpp"

#include <numeric>

namespace amap {

namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("factor: zero has no factorization");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    };
    strip(2);
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        strip(d);
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n)
{
    if (n < 2)
        return {0, 0};
    auto f = factor(n);
    if (f.size() != 1)
        return {0, 0};
    return f.front();
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m)
{
    return (a - floor_mod(a, m)) / m;
}

} // namespace nt

IntIdeal::IntIdeal(std::int64_t generator)
{
    if (generator == 0)
        throw InvalidArgument("zero ideal is not allowed");
    gen_ = generator < 0 ? static_cast<std::uint64_t>(-(generator + 1)) + 1
                         : static_cast<std::uint64_t>(generator);
}

IntegerDomain::Element IntegerDomain::multiply(Element x, Element y) const
{
    Element r;
    if (__builtin_mul_overflow(x, y, &r))
        throw SizeLimitExceeded("integer overflow in multiplication");
    return r;
}

Factorization<IntIdeal> IntegerDomain::factor(Ideal const & I) const
{
    Factorization<IntIdeal> f;
    for (auto [p, e] : nt::factor(I.generator()))
        f.factors.emplace_back(IntIdeal(static_cast<std::int64_t>(p)), e);
    return f;
}

IntIdeal IntegerDomain::product(Ideal const & I, Ideal const & J) const
{
    return IntIdeal(static_cast<std::int64_t>(checked_mul(I.generator(), J.generator())));
}

IntIdeal IntegerDomain::sum(Ideal const & I, Ideal const & J) const
{
    return IntIdeal(static_cast<std::int64_t>(std::gcd(I.generator(), J.generator())));
}

IntIdeal IntegerDomain::sum(Ideal const & I, Element x) const
{
    std::uint64_t ax = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
    return IntIdeal(static_cast<std::int64_t>(std::gcd(I.generator(), ax)));
}

bool IntegerDomain::contains(Ideal const & I, Element x) const
{
    return reduce(I, x) == 0;
}

IntIdeal IntegerDomain::exact_quotient(Ideal const & I, Ideal const & J) const
{
    if (I.generator() % J.generator() != 0)
        throw InvalidArgument("exact_quotient: divisor does not divide the ideal");
    return IntIdeal(static_cast<std::int64_t>(I.generator() / J.generator()));
}

IntegerDomain::Element IntegerDomain::reduce(Ideal const & I, Element x) const
{
    return nt::floor_mod(x, static_cast<std::int64_t>(I.generator()));
}

IntegerDomain::Element IntegerDomain::residue(Ideal const & I, std::uint64_t index) const
{
    if (index >= I.generator())
        throw InvalidArgument("residue index out of range");
    return static_cast<Element>(index);
}

std::uint64_t IntegerDomain::residue_index(Ideal const &, Element reduced) const
{
    return static_cast<std::uint64_t>(reduced);
}

} // namespace amap
