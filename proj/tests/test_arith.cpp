#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "amap/errors.hpp"

using namespace amap;
using namespace amap::test;

namespace {

Poly P(std::vector<std::uint32_t> c) { return Poly(std::move(c)); }

} // namespace

TEST_CASE("integer factorization")
{
    IntegerDomain Z;
    auto f = Z.factor(IntIdeal(68));
    REQUIRE(f.size() == 2);
    CHECK(f.factors[0] == std::pair{IntIdeal(2), 2u});
    CHECK(f.factors[1] == std::pair{IntIdeal(17), 1u});
    CHECK(Z.factor(IntIdeal(1)).empty());
    CHECK(Z.factor(IntIdeal(-12)) == Z.factor(IntIdeal(12)));
    CHECK_THROWS_AS(IntIdeal(0), InvalidArgument);
}

TEST_CASE("integer helpers")
{
    CHECK(nt::prime_power(49) == std::pair<std::uint64_t, unsigned>{7, 2});
    CHECK(nt::prime_power(12).first == 0);
    CHECK(nt::prime_power(1).first == 0);
    CHECK(nt::is_prime(101));
    CHECK_FALSE(nt::is_prime(91));
    CHECK(nt::floor_mod(-7, 3) == 2);
    CHECK(nt::floor_div(-7, 3) == -3);
}

TEST_CASE("norm, phi and order over Z")
{
    IntegerDomain Z;
    CHECK(Z.norm(IntIdeal(6)) == 6);
    CHECK(euler_phi(Z, IntIdeal(24)) == 8);
    CHECK(euler_phi(Z, IntIdeal(1)) == 1);
    CHECK(mult_order(Z, 2, IntIdeal(7)) == 3);
    CHECK(mult_order(Z, 2, IntIdeal(1)) == 1);
    CHECK_THROWS_AS(mult_order(Z, 2, IntIdeal(6)), NotCoprime);
}

TEST_CASE("divisors and a-decomposition over Z")
{
    IntegerDomain Z;
    std::vector<std::uint64_t> got;
    for (auto const & d : divisors(Z, IntIdeal(12)))
        got.push_back(d.generator());
    CHECK(got == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(Z, IntIdeal(1)).size() == 1);

    auto d1 = a_decomposition(Z, 2, IntIdeal(24));
    CHECK(d1.n0 == IntIdeal(8));
    CHECK(d1.n1 == IntIdeal(3));
    auto d2 = a_decomposition(Z, 6, IntIdeal(35));
    CHECK(d2.n0 == IntIdeal(1));
    CHECK(d2.n1 == IntIdeal(35));
    CHECK_THROWS_AS(a_decomposition(Z, 0, IntIdeal(35)), InvalidArgument);
}

TEST_CASE("linear congruences over Z")
{
    IntegerDomain Z;
    CHECK(congruence_solution_count(Z, 2, 3, IntIdeal(4)) == 0);
    CHECK(congruence_solution_count(Z, 2, 2, IntIdeal(4)) == 2);
}

TEST_CASE("finite field construction")
{
    CHECK(make_field(8)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(make_field(9)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(make_field(4)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK_THROWS_AS(make_field(6), InvalidArgument);
    CHECK_THROWS_AS(FiniteField(2, std::vector<std::uint32_t>{1, 0, 1}), InvalidArgument); // (x+1)^2
    CHECK_NOTHROW(FiniteField(3, std::vector<std::uint32_t>{2, 2, 1}));
}

TEST_CASE("finite field axioms on random elements")
{
    Rng rng(11);
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 25, 27, 49}) {
        auto F = make_field(q);
        CAPTURE(q);
        std::uint64_t nonzero_squares = 0;
        for (FiniteField::Elem x = 1; x < q; ++x) {
            CHECK(F->mul(x, F->inv(x)) == 1);
            CHECK(F->pow(x, q - 1) == 1);
            if (q % 2)
                nonzero_squares += F->quadratic_character(x) == 1;
        }
        if (q % 2)
            CHECK(nonzero_squares == (q - 1) / 2);
        for (int i = 0; i < 200; ++i) {
            auto a = static_cast<FiniteField::Elem>(uniform(rng, 0, q - 1));
            auto b = static_cast<FiniteField::Elem>(uniform(rng, 0, q - 1));
            auto c = static_cast<FiniteField::Elem>(uniform(rng, 0, q - 1));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(F->sub(a, b), b) == a);
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        }
    }
}

TEST_CASE("polynomial factorization examples")
{
    PolyDomain D(make_field(2));
    auto f = D.factor(D.principal(P({1, 0, 0, 1})));
    REQUIRE(f.size() == 2);
    CHECK(f.factors[0].first.generator() == P({1, 1}));
    CHECK(f.factors[1].first.generator() == P({1, 1, 1}));
    CHECK(f.factors[0].second == 1);
    CHECK(D.factor(D.unit_ideal()).empty());
    CHECK_THROWS_AS(D.principal(P({})), InvalidArgument);
}

TEST_CASE("polynomial factorization agrees with trial division")
{
    Rng rng(12);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        auto R = ring_of(q);
        for (int i = 0; i < 120; ++i) {
            Poly f = random_monic(R, rng, 1, 8);
            CAPTURE(q);
            CAPTURE(R.to_string(f));
            auto fac = R.factor(f);
            CHECK(fac == R.factor_by_trial_division(f));
            Poly prod = R.one();
            for (auto const & [g, e] : fac) {
                CHECK(R.is_irreducible(g));
                CHECK(g.leading() == 1);
                prod = R.mul(prod, R.pow(g, e));
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("polynomial factorization of repeated and p-th power factors")
{
    auto R = ring_of(3);
    Poly g = P({1, 1});       // x + 1
    Poly h = P({1, 0, 1});    // x^2 + 1, irreducible over F_3
    Poly f = R.mul(R.pow(g, 3), R.pow(h, 4));
    auto fac = R.factor(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0] == std::pair{g, 3u});
    CHECK(fac[1] == std::pair{h, 4u});

    auto R4 = ring_of(4);
    Poly big = R4.x_pow_minus_one(12); // (x^3 - 1)^4 over F_4
    Poly prod = R4.one();
    for (auto const & [p, e] : R4.factor(big)) {
        CHECK(e == 4);
        prod = R4.mul(prod, R4.pow(p, e));
    }
    CHECK(prod == big);
}

TEST_CASE("norm, phi, order over F_q[x]")
{
    PolyDomain D3(make_field(3));
    CHECK(D3.norm(D3.principal(P({1, 0, 1}))) == 9);
    PolyDomain D2(make_field(2));
    CHECK(D2.norm(D2.unit_ideal()) == 1);
    auto n = D2.principal(P({1, 0, 0, 1}));
    CHECK(euler_phi(D2, n) == 3);
    CHECK(brute_unit_count(D2, n) == 3);
    auto m = D2.principal(P({1, 1, 1}));
    CHECK(mult_order(D2, P({0, 1}), m) == 3);
    CHECK(brute_order(D2, P({0, 1}), m) == 3);
}

TEST_CASE("divisors, a-decomposition and congruences over F_2[x]")
{
    PolyDomain D(make_field(2));
    std::vector<Poly> got;
    for (auto const & d : divisors(D, D.principal(P({1, 0, 0, 1}))))
        got.push_back(d.generator());
    CHECK(got == std::vector<Poly>{P({1}), P({1, 1}), P({1, 1, 1}), P({1, 0, 0, 1})});

    auto dec = a_decomposition(D, P({0, 1}), D.principal(P({0, 0, 0, 1, 1})));
    CHECK(dec.n0.generator() == P({0, 0, 0, 1}));
    CHECK(dec.n1.generator() == P({1, 1}));

    auto x2 = D.principal(P({0, 0, 1}));
    CHECK(congruence_solution_count(D, P({0, 1}), P({}), x2) == 2);
    CHECK(brute_solution_count(D, P({0, 1}), P({}), x2) == 2);
}

namespace {

template <Domain D, class GenIdeal, class GenElem>
void check_counts(D const & dom, GenIdeal gen_ideal, GenElem gen_elem, int rounds)
{
    for (int i = 0; i < rounds; ++i) {
        auto n = gen_ideal();
        auto a = gen_elem();
        auto b = gen_elem();
        CHECK(congruence_solution_count(dom, a, b, n) == brute_solution_count(dom, a, b, n));

        // Residues b grouped by gcd(<b>, n): the class of m has phi(n/m) members.
        std::map<ideal_t<D>, std::uint64_t> classes;
        for (auto const & r : all_residues(dom, n))
            ++classes[dom.sum(n, r)];
        std::uint64_t phi_sum = 0;
        for (auto const & m : divisors(dom, n)) {
            CHECK(classes[m] == euler_phi(dom, dom.exact_quotient(n, m)));
            phi_sum += euler_phi(dom, m);
        }
        CHECK(phi_sum == dom.norm(n));
        CHECK(classes.size() == divisors(dom, n).size());
    }
}

template <Domain D, class GenIdeal, class GenElem>
void check_arith_properties(D const & dom, GenIdeal gen_ideal, GenElem gen_elem, int rounds)
{
    for (int i = 0; i < rounds; ++i) {
        auto m = gen_ideal();
        auto n = gen_ideal();
        CHECK(dom.norm(dom.product(m, n)) == dom.norm(m) * dom.norm(n));
        if (dom.is_unit_ideal(dom.sum(m, n)))
            CHECK(euler_phi(dom, dom.product(m, n)) == euler_phi(dom, m) * euler_phi(dom, n));
        CHECK(euler_phi(dom, n) == brute_unit_count(dom, n));
        auto a = gen_elem();
        if (!dom.is_zero(a) && dom.is_unit_ideal(dom.sum(n, a))) {
            auto ord = mult_order(dom, a, n);
            CHECK(euler_phi(dom, n) % ord == 0);
            CHECK(ord == brute_order(dom, a, n));
        }
    }
}

} // namespace

TEST_CASE("congruence and residue-gcd counts over Z")
{
    IntegerDomain Z;
    Rng rng(21);
    check_counts(
        Z, [&] { return IntIdeal(uniform(rng, 1, 60)); }, [&] { return uniform(rng, -80, 80); }, 200);
    check_arith_properties(
        Z, [&] { return IntIdeal(uniform(rng, 1, 60)); }, [&] { return uniform(rng, -80, 80); }, 200);
}

TEST_CASE("congruence and residue-gcd counts over F_2[x] and F_3[x]")
{
    for (std::uint64_t q : {2, 3}) {
        PolyDomain D(make_field(q));
        auto const & R = D.ring();
        Rng rng(22 + q);
        auto gi = [&] { return D.principal(random_monic(R, rng, 0, 4)); };
        auto ge = [&] { return random_poly(R, rng, 5); };
        check_counts(D, gi, ge, 200);
        check_arith_properties(D, gi, ge, 120);
    }
}

TEST_CASE("phi of prime powers is a difference of norms")
{
    Rng rng(31);
    IntegerDomain Z;
    PolyDomain D(make_field(3));
    for (int i = 0; i < 40; ++i) {
        unsigned e = static_cast<unsigned>(uniform(rng, 1, 5));
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[static_cast<std::size_t>(uniform(rng, 0, 3))];
        auto pe = ideal_power(Z, IntIdeal(p), e);
        auto pe1 = ideal_power(Z, IntIdeal(p), e - 1);
        CHECK(euler_phi(Z, pe) == Z.norm(pe) - Z.norm(pe1));

        auto irr = D.ring().monic_irreducibles(static_cast<unsigned>(uniform(rng, 1, 2)));
        auto P1 = PolyIdeal(irr[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(irr.size()) - 1))]);
        unsigned e2 = static_cast<unsigned>(uniform(rng, 1, 3));
        auto Q = ideal_power(D, P1, e2);
        CHECK(euler_phi(D, Q) == D.norm(Q) - D.norm(ideal_power(D, P1, e2 - 1)));
    }
}
