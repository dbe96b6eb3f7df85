#include "amap/poly.hpp"

#include "amap/errors.hpp"

#include <algorithm>

namespace amap {

bool poly_less(Poly const & a, Poly const & b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    auto const & ca = a.coeffs();
    auto const & cb = b.coeffs();
    return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

PolyRing::PolyRing(FieldPtr field) : field_(std::move(field))
{
    if (!field_)
        throw InvalidArgument("PolyRing needs a field");
}

Poly PolyRing::monomial(unsigned deg, Elem c) const
{
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(v));
}

Poly PolyRing::x_pow_minus_one(unsigned n) const
{
    std::vector<Elem> v(n + 1, 0);
    v[n] = 1;
    v[0] = field_->sub(v[0], 1);
    return Poly(std::move(v));
}

Poly PolyRing::add(Poly const & a, Poly const & b) const
{
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = field_->add(a.coeff(i), b.coeff(i));
    return Poly(std::move(v));
}

Poly PolyRing::sub(Poly const & a, Poly const & b) const
{
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = field_->sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(v));
}

Poly PolyRing::neg(Poly const & a) const
{
    std::vector<Elem> v(a.coeffs());
    for (auto & c : v)
        c = field_->neg(c);
    return Poly(std::move(v));
}

Poly PolyRing::scale(Poly const & a, Elem c) const
{
    std::vector<Elem> v(a.coeffs());
    for (auto & x : v)
        x = field_->mul(x, c);
    return Poly(std::move(v));
}

Poly PolyRing::mul(Poly const & a, Poly const & b) const
{
    if (a.is_zero() || b.is_zero())
        return {};
    auto const & ca = a.coeffs();
    auto const & cb = b.coeffs();
    std::vector<Elem> v(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0)
            continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
            v[i + j] = field_->add(v[i + j], field_->mul(ca[i], cb[j]));
    }
    return Poly(std::move(v));
}

std::pair<Poly, Poly> PolyRing::divmod(Poly const & a, Poly const & b) const
{
    if (b.is_zero())
        throw InvalidArgument("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Elem> r(a.coeffs());
    int const db = b.degree();
    std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
    Elem const lead_inv = field_->inv(b.leading());
    auto const & cb = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        Elem c = r[i];
        if (c == 0)
            continue;
        Elem f = field_->mul(c, lead_inv);
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = field_->sub(r[i - db + j], field_->mul(f, cb[j]));
    }
    r.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(r))};
}

Poly PolyRing::mod(Poly const & a, Poly const & b) const
{
    return divmod(a, b).second;
}

Poly PolyRing::exact_div(Poly const & a, Poly const & b) const
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InvalidArgument("exact_div: polynomial does not divide");
    return q;
}

Poly PolyRing::monic(Poly const & a) const
{
    if (a.is_zero())
        return a;
    return scale(a, field_->inv(a.leading()));
}

Poly PolyRing::gcd(Poly const & a, Poly const & b) const
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly PolyRing::pow(Poly const & a, std::uint64_t e) const
{
    Poly r = one(), b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        e >>= 1;
        if (e)
            b = mul(b, b);
    }
    return r;
}

Poly PolyRing::powmod(Poly const & a, std::uint64_t e, Poly const & m) const
{
    Poly r = mod(one(), m), b = mod(a, m);
    while (e) {
        if (e & 1)
            r = mod(mul(r, b), m);
        e >>= 1;
        if (e)
            b = mod(mul(b, b), m);
    }
    return r;
}

Poly PolyRing::derivative(Poly const & a) const
{
    if (a.degree() < 1)
        return {};
    std::vector<Elem> v(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i)
        v[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i)), a.coeff(i));
    return Poly(std::move(v));
}

PolyRing::Elem PolyRing::eval(Poly const & a, Elem x) const
{
    Elem r = 0;
    auto const & c = a.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = field_->add(field_->mul(r, x), *it);
    return r;
}

bool PolyRing::is_irreducible(Poly const & f) const
{
    int const n = f.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    Poly const xp = x();
    Poly h = xp;
    for (int i = 1; 2 * i <= n; ++i) {
        h = powmod(h, q(), f);
        if (gcd(f, sub(h, xp)).degree() != 0)
            return false;
    }
    return true;
}

Poly PolyRing::pth_root(Poly const & f) const
{
    std::uint32_t const p = field_->characteristic();
    std::uint64_t const e = q() / p; // c^(q/p) is the p-th root of c
    std::vector<Elem> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        v.push_back(field_->pow(f.coeff(i), e));
    return Poly(std::move(v));
}

PolyFactors PolyRing::square_free(Poly const & f) const
{
    PolyFactors out;
    std::uint32_t const p = field_->characteristic();
    Poly const g = derivative(f);
    if (g.is_zero()) {
        for (auto & [h, e] : square_free(pth_root(f)))
            out.emplace_back(std::move(h), e * p);
        return out;
    }
    Poly c = gcd(f, g);
    Poly w = exact_div(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = exact_div(w, y);
        if (fac.degree() > 0)
            out.emplace_back(monic(fac), i);
        w = std::move(y);
        c = exact_div(c, w);
        ++i;
    }
    if (c.degree() > 0)
        for (auto & [h, e] : square_free(pth_root(c)))
            out.emplace_back(std::move(h), e * p);
    return out;
}

std::vector<std::pair<Poly, unsigned>> PolyRing::distinct_degree(Poly const & f) const
{
    std::vector<std::pair<Poly, unsigned>> out;
    Poly const xp = x();
    Poly fs = f;
    Poly h = mod(xp, fs);
    for (unsigned i = 1; fs.degree() >= static_cast<int>(2 * i); ++i) {
        h = powmod(h, q(), fs);
        Poly g = gcd(fs, sub(h, xp));
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            fs = exact_div(fs, g);
            h = mod(h, fs);
        }
    }
    if (fs.degree() > 0)
        out.emplace_back(monic(fs), static_cast<unsigned>(fs.degree()));
    return out;
}

void PolyRing::equal_degree(Poly const & f, unsigned d, std::vector<Poly> & out) const
{
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(monic(f));
        return;
    }
    std::uint64_t const qq = q();
    bool const even = field_->characteristic() == 2;
    unsigned const n = static_cast<unsigned>(f.degree());
    // Candidates scanned in increasing encoding; some always splits.
    for (std::uint64_t idx = qq;; ++idx) {
        Poly h = from_index(idx, n);
        Poly t;
        if (even) {
            // Absolute trace to F_2 of h in F_q[x]/(g_i) = F_{2^(kd)}.
            unsigned const steps = field_->degree() * d;
            Poly s = mod(h, f);
            t = s;
            for (unsigned j = 1; j < steps; ++j) {
                s = mod(mul(s, s), f);
                t = add(t, s);
            }
        } else {
            // h^((q^d-1)/2) = (h^(1+q+...+q^(d-1)))^((q-1)/2)
            Poly s = mod(h, f);
            Poly acc = s;
            for (unsigned j = 1; j < d; ++j) {
                s = powmod(s, qq, f);
                acc = mod(mul(acc, s), f);
            }
            t = sub(powmod(acc, (qq - 1) / 2, f), one());
        }
        Poly u = gcd(f, t);
        if (u.degree() > 0 && u.degree() < f.degree()) {
            equal_degree(u, d, out);
            equal_degree(exact_div(f, u), d, out);
            return;
        }
    }
}

PolyFactors PolyRing::factor(Poly const & f) const
{
    if (f.is_zero())
        throw InvalidArgument("cannot factor the zero polynomial");
    PolyFactors out;
    if (f.degree() == 0)
        return out;
    for (auto const & [piece, mult] : square_free(monic(f))) {
        for (auto const & [g, d] : distinct_degree(piece)) {
            std::vector<Poly> irr;
            equal_degree(g, d, irr);
            for (auto & p : irr)
                out.emplace_back(std::move(p), mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](auto const & a, auto const & b) { return poly_less(a.first, b.first); });
    // A prime can surface from both the main loop and the p-th root branch.
    PolyFactors merged;
    for (auto & pe : out) {
        if (!merged.empty() && merged.back().first == pe.first)
            merged.back().second += pe.second;
        else
            merged.push_back(std::move(pe));
    }
    return merged;
}

std::vector<Poly> PolyRing::monic_irreducibles(unsigned deg) const
{
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i)
        count = checked_mul(count, q());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly m = add(from_index(idx, deg), monomial(deg));
        if (is_irreducible(m))
            out.push_back(std::move(m));
    }
    return out;
}

Poly PolyRing::first_monic_irreducible(unsigned deg) const
{
    if (deg == 0)
        throw InvalidArgument("irreducible polynomials have degree >= 1");
    for (std::uint64_t idx = 0;; ++idx) {
        Poly m = add(from_index(idx, deg), monomial(deg));
        if (is_irreducible(m))
            return m;
    }
}

PolyFactors PolyRing::factor_by_trial_division(Poly const & f) const
{
    if (f.is_zero())
        throw InvalidArgument("cannot factor the zero polynomial");
    if (f.degree() > 9)
        throw InvalidArgument("trial-division factorization limited to degree <= 9");
    PolyFactors out;
    Poly m = monic(f);
    for (unsigned d = 1; d <= 4 && m.degree() > 0; ++d) {
        for (auto const & g : monic_irreducibles(d)) {
            unsigned e = 0;
            for (;;) {
                auto [quo, rem] = divmod(m, g);
                if (!rem.is_zero())
                    break;
                m = std::move(quo);
                ++e;
            }
            if (e)
                out.emplace_back(g, e);
        }
    }
    if (m.degree() > 0)
        out.emplace_back(m, 1);
    std::sort(out.begin(), out.end(),
              [](auto const & a, auto const & b) { return poly_less(a.first, b.first); });
    return out;
}

Poly PolyRing::from_index(std::uint64_t index, unsigned len) const
{
    std::vector<Elem> v(len);
    for (unsigned i = 0; i < len; ++i) {
        v[i] = static_cast<Elem>(index % q());
        index /= q();
    }
    return Poly(std::move(v));
}

std::uint64_t PolyRing::to_index(Poly const & a) const
{
    std::uint64_t r = 0;
    auto const & c = a.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = checked_mul(r, q()) + *it;
    return r;
}

std::string PolyRing::to_string(Poly const & a) const
{
    if (a.is_zero())
        return "0";
    std::string s;
    for (int i = a.degree(); i >= 0; --i) {
        Elem c = a.coeff(static_cast<std::size_t>(i));
        if (c == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (c != 1 || i == 0)
            s += std::to_string(c) + (i ? "*" : "");
        if (i >= 1)
            s += "x";
        if (i > 1)
            s += "^" + std::to_string(i);
    }
    return s;
}

PolyIdeal::PolyIdeal(Poly gen) : gen_(std::move(gen))
{
    if (gen_.is_zero())
        throw InvalidArgument("zero ideal is not allowed");
    if (gen_.leading() != 1)
        throw InvalidArgument("ideal generator must be monic");
}

std::string PolyDomain::name() const
{
    return field().name() + "[x]";
}

nlohmann::json PolyDomain::describe() const
{
    nlohmann::json j = {{"kind", "poly"}, {"p", field().characteristic()}, {"k", field().degree()}};
    if (field().degree() > 1)
        j["modulus"] = field().modulus();
    return j;
}

PolyIdeal PolyDomain::principal(Element const & x) const
{
    if (x.is_zero())
        throw InvalidArgument("zero ideal is not allowed");
    return PolyIdeal(ring_.monic(x));
}

std::uint64_t PolyDomain::norm(Ideal const & I) const
{
    std::uint64_t n = 1;
    for (int i = 0; i < I.degree(); ++i)
        n = checked_mul(n, ring_.q());
    return n;
}

Factorization<PolyIdeal> PolyDomain::factor(Ideal const & I) const
{
    Factorization<PolyIdeal> f;
    for (auto & [p, e] : ring_.factor(I.generator()))
        f.factors.emplace_back(PolyIdeal(std::move(p)), e);
    return f;
}

PolyIdeal PolyDomain::product(Ideal const & I, Ideal const & J) const
{
    return PolyIdeal(ring_.mul(I.generator(), J.generator()));
}

PolyIdeal PolyDomain::sum(Ideal const & I, Ideal const & J) const
{
    return PolyIdeal(ring_.gcd(I.generator(), J.generator()));
}

PolyIdeal PolyDomain::sum(Ideal const & I, Element const & x) const
{
    return PolyIdeal(ring_.gcd(I.generator(), x));
}

bool PolyDomain::contains(Ideal const & I, Element const & x) const
{
    return ring_.mod(x, I.generator()).is_zero();
}

PolyIdeal PolyDomain::exact_quotient(Ideal const & I, Ideal const & J) const
{
    return PolyIdeal(ring_.exact_div(I.generator(), J.generator()));
}

Poly PolyDomain::reduce(Ideal const & I, Element const & x) const
{
    return ring_.mod(x, I.generator());
}

Poly PolyDomain::residue(Ideal const & I, std::uint64_t index) const
{
    if (index >= norm(I))
        throw InvalidArgument("residue index out of range");
    return ring_.from_index(index, static_cast<unsigned>(I.degree()));
}

std::uint64_t PolyDomain::residue_index(Ideal const &, Element const & reduced) const
{
    return ring_.to_index(reduced);
}

} // namespace amap
