#include "amap/finite_field.hpp"

#include "amap/errors.hpp"
#include "amap/integers.hpp"
#include "amap/poly.hpp"

namespace amap {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t v, std::uint32_t p, unsigned k)
{
    std::vector<std::uint32_t> d(k);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint32_t undigits(std::vector<std::uint32_t> const & d, std::uint32_t p)
{
    std::uint32_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        v = v * p + *it;
    return v;
}

std::uint32_t field_size(std::uint32_t p, unsigned k)
{
    if (!nt::is_prime(p))
        throw InvalidArgument("field characteristic must be prime, got " + std::to_string(p));
    if (k == 0)
        throw InvalidArgument("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > FiniteField::max_size)
            throw SizeLimitExceeded("field size exceeds supported maximum");
    }
    return static_cast<std::uint32_t>(q);
}

bool irreducible_over_prime_field(std::uint32_t p, std::vector<std::uint32_t> const & m)
{
    PolyRing ring(std::make_shared<FiniteField const>(p, 1));
    return ring.is_irreducible(Poly(m));
}

} // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned k)
    : p_(p), k_(k), q_(field_size(p, k))
{
    if (k_ == 1)
        return;
    // Lower coefficients scanned in increasing base-p encoding.
    for (std::uint32_t idx = 0; idx < q_; ++idx) {
        auto m = digits(idx, p_, k_);
        m.push_back(1);
        if (irreducible_over_prime_field(p_, m)) {
            modulus_ = std::move(m);
            break;
        }
    }
    if (modulus_.empty())
        throw InternalError("no irreducible polynomial found");
    init_extension();
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(modulus.empty() ? 0 : static_cast<unsigned>(modulus.size() - 1)),
      q_(0), modulus_(std::move(modulus))
{
    if (k_ < 2)
        throw InvalidArgument("explicit field modulus must have degree >= 2");
    q_ = field_size(p_, k_);
    for (auto c : modulus_)
        if (c >= p_)
            throw InvalidArgument("modulus coefficient out of range");
    if (modulus_.back() != 1)
        throw InvalidArgument("field modulus must be monic");
    if (!irreducible_over_prime_field(p_, modulus_))
        throw InvalidArgument("field modulus is not irreducible");
    init_extension();
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const
{
    auto da = digits(a, p_, k_);
    auto db = digits(b, p_, k_);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
    // Reduce by the monic modulus from the top.
    for (std::size_t i = prod.size(); i-- > k_;) {
        std::uint64_t c = prod[i];
        if (c == 0)
            continue;
        for (unsigned j = 0; j <= k_; ++j) {
            std::size_t pos = i - k_ + j;
            prod[pos] = (prod[pos] + (p_ - c) * modulus_[j]) % p_;
        }
    }
    std::vector<std::uint32_t> r(k_);
    for (unsigned i = 0; i < k_; ++i)
        r[i] = static_cast<std::uint32_t>(prod[i]);
    return undigits(r, p_);
}

void FiniteField::init_extension()
{
    std::uint32_t const order = q_ - 1;
    auto const primes = nt::factor(order);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1)
                r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    Elem gen = 0;
    for (Elem g = 2; g < q_ && gen == 0; ++g) {
        bool primitive = true;
        for (auto [r, e] : primes)
            if (slow_pow(g, order / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive)
            gen = g;
    }
    if (gen == 0)
        throw InternalError("no primitive element found");
    exp_.assign(order, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, gen);
    }
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const
{
    return static_cast<Elem>(nt::floor_mod(v, p_));
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const
{
    if (k_ == 1)
        return (a + b) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const
{
    if (k_ == 1)
        return (p_ - a) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const
{
    return add(a, neg(b));
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const
{
    if (k_ == 1)
        return static_cast<Elem>(std::uint64_t(a) * b % p_);
    if (a == 0 || b == 0)
        return 0;
    std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
    if (s >= q_ - 1)
        s -= q_ - 1;
    return exp_[s];
}

FiniteField::Elem FiniteField::inv(Elem a) const
{
    if (a == 0)
        throw InvalidArgument("division by zero in " + name());
    if (k_ == 1)
        return static_cast<Elem>(nt::powmod(a, p_ - 2, p_));
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    if (k_ == 1)
        return static_cast<Elem>(nt::powmod(a, e, p_));
    std::uint64_t l = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(log_[a]) * e % (q_ - 1));
    return exp_[l];
}

int FiniteField::quadratic_character(Elem a) const
{
    if (p_ == 2)
        throw InvalidArgument("quadratic character requires odd q");
    if (a == 0)
        return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

std::string FiniteField::name() const
{
    return "F_" + std::to_string(q_);
}

FieldPtr make_field(std::uint64_t q)
{
    auto [p, k] = nt::prime_power(q);
    if (p == 0)
        throw InvalidArgument("field size must be a prime power, got " + std::to_string(q));
    return std::make_shared<FiniteField const>(static_cast<std::uint32_t>(p), k);
}

} // namespace amap
