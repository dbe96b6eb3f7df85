#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "amap/errors.hpp"

#include <set>

using namespace amap;
using namespace amap::test;

namespace {

struct Hnf
{
    std::int64_t a, b, c;
};

void check_hnf(QuadIdeal const & I, Hnf h)
{
    CHECK(I.a() == h.a);
    CHECK(I.b() == h.b);
    CHECK(I.c() == h.c);
}

} // namespace

TEST_CASE("order conventions")
{
    QuadraticOrder G(-1), S(-5), E(-3);
    CHECK(G.omega_trace() == 0);
    CHECK(G.omega_norm() == 1);
    CHECK(G.discriminant() == -4);
    CHECK(S.discriminant() == -20);
    CHECK(E.omega_trace() == 1);
    CHECK(E.omega_norm() == 1);
    CHECK(E.discriminant() == -3);
    // omega^2 = omega - 1 for d = -3
    CHECK(E.multiply({0, 1}, {0, 1}) == QuadInt{-1, 1});
    CHECK(S.element_norm({1, 1}) == 6);
    CHECK_THROWS_AS(QuadraticOrder(-4), InvalidArgument);
    CHECK_THROWS_AS(QuadraticOrder(3), InvalidArgument);
}

TEST_CASE("ideals from generators")
{
    QuadraticOrder S(-5), G(-1);
    auto p1 = S.ideal_from_generators({{2, 0}, {1, 1}});
    check_hnf(p1, {2, 1, 1});
    CHECK(S.norm(p1) == 2);
    CHECK(G.norm(G.principal({-2, 8})) == 68);
    auto one = S.ideal_from_generators({{1, 0}});
    check_hnf(one, {1, 0, 1});
    CHECK(S.is_unit_ideal(one));
    CHECK_THROWS_AS(S.ideal_from_generators({{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(S.ideal_from_hnf(2, 0, 1), InvalidArgument); // not closed under omega
}

TEST_CASE("sums and products in Z[sqrt(-5)]")
{
    QuadraticOrder S(-5);
    auto p1 = S.ideal_from_generators({{2, 0}, {1, 1}});
    auto p2 = S.ideal_from_generators({{3, 0}, {1, 1}});
    auto p3 = S.ideal_from_generators({{3, 0}, {2, 1}});
    CHECK(S.is_unit_ideal(S.sum(p2, p3)));
    CHECK(S.sum(p1, p1) == p1);
    CHECK(S.sum(S.principal({2, 0}), S.principal({1, 1})) == p1);
    CHECK(S.product(p1, p1) == S.principal({2, 0}));
    CHECK(S.product(p2, p3) == S.principal({3, 0}));
    CHECK(S.product(p1, S.unit_ideal()) == p1);
    QuadraticOrder G(-1);
    CHECK_THROWS_AS(S.sum(p1, G.unit_ideal()), InvalidArgument);
}

TEST_CASE("rational prime splitting")
{
    QuadraticOrder S(-5), G(-1);
    auto s2 = S.rational_prime_splitting(2);
    CHECK(s2.type == SplitType::Ramified);
    REQUIRE(s2.primes.size() == 1);
    check_hnf(s2.primes[0], {2, 1, 1});

    auto s3 = S.rational_prime_splitting(3);
    CHECK(s3.type == SplitType::Split);
    REQUIRE(s3.primes.size() == 2);
    CHECK(s3.primes[0] == S.ideal_from_generators({{3, 0}, {1, 1}}));
    CHECK(s3.primes[1] == S.ideal_from_generators({{3, 0}, {2, 1}}));

    auto g3 = G.rational_prime_splitting(3);
    CHECK(g3.type == SplitType::Inert);
    CHECK(G.norm(g3.primes[0]) == 9);
    CHECK_THROWS_AS(G.rational_prime_splitting(9), InvalidArgument);
}

TEST_CASE("splitting type matches the number of roots of x^2 - d")
{
    for (std::int64_t d : {-1, -2, -3, -5, -6, -7, -11, -15, -19, -23}) {
        QuadraticOrder O(d);
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
            CAPTURE(d);
            CAPTURE(p);
            auto sp = O.rational_prime_splitting(p);
            auto D = O.discriminant();
            if (nt::floor_mod(D, static_cast<std::int64_t>(p)) == 0) {
                CHECK(sp.type == SplitType::Ramified);
            } else if (p != 2) {
                bool square = false;
                for (std::uint64_t x = 1; x < p; ++x)
                    square |= (x * x) % p == static_cast<std::uint64_t>(nt::floor_mod(D, p));
                CHECK(sp.type == (square ? SplitType::Split : SplitType::Inert));
            }
            std::uint64_t norm_product = 1;
            for (auto const & P : sp.primes)
                norm_product *= O.norm(P);
            if (sp.type == SplitType::Ramified)
                norm_product *= norm_product;
            CHECK(norm_product == p * p);
            auto rebuilt = O.unit_ideal();
            for (auto const & P : sp.primes)
                rebuilt = O.product(rebuilt, sp.type == SplitType::Ramified ? O.product(P, P) : P);
            CHECK(rebuilt == O.principal({static_cast<std::int64_t>(p), 0}));
        }
    }
}

TEST_CASE("ideal factorization examples")
{
    QuadraticOrder S(-5), G(-1);
    auto p1 = S.ideal_from_generators({{2, 0}, {1, 1}});
    auto p2 = S.ideal_from_generators({{3, 0}, {1, 1}});
    auto p3 = S.ideal_from_generators({{3, 0}, {2, 1}});
    auto f6 = S.factor(S.principal({6, 0}));
    REQUIRE(f6.size() == 3);
    CHECK(f6.exponent_of(p1) == 2);
    CHECK(f6.exponent_of(p2) == 1);
    CHECK(f6.exponent_of(p3) == 1);

    auto f = G.factor(G.principal({-2, 8}));
    REQUIRE(f.size() == 2);
    CHECK(f.exponent_of(G.principal({1, 1})) == 2);
    CHECK(f.exponent_of(G.principal({-1, 4})) == 1);

    auto fa = G.factor(G.principal({3, -1}));
    REQUIRE(fa.size() == 2);
    CHECK(fa.exponent_of(G.principal({1, 1})) == 1);
    CHECK(fa.exponent_of(G.principal({1, -2})) == 1);
}

TEST_CASE("reduction modulo an ideal")
{
    QuadraticOrder S(-5), G(-1);
    auto six = S.principal({6, 0});
    CHECK(S.reduce(six, {7, 8}) == QuadInt{1, 2});
    auto p1 = S.ideal_from_generators({{2, 0}, {1, 1}});
    CHECK(S.reduce(p1, {1, 1}) == QuadInt{0, 0});
    auto n = G.principal({-2, 8});
    std::set<std::pair<std::int64_t, std::int64_t>> reps;
    for (std::int64_t x = -20; x <= 20; ++x)
        for (std::int64_t y = -20; y <= 20; ++y) {
            auto r = G.reduce(n, {x, y});
            reps.insert({r.x, r.y});
        }
    CHECK(reps.size() == 68);
}

namespace {

void random_ideal_properties(std::int64_t d, std::uint64_t seed)
{
    QuadraticOrder O(d);
    Rng rng(seed);
    for (int i = 0; i < 60; ++i) {
        auto I = random_quad_ideal(O, rng, 400);
        auto J = random_quad_ideal(O, rng, 400);
        CAPTURE(d);
        CAPTURE(I.a());
        CAPTURE(I.b());
        CAPTURE(I.c());
        auto IJ = O.product(I, J);
        CHECK(O.norm(IJ) == O.norm(I) * O.norm(J));
        // J | IJ and IJ is inside J.
        CHECK(O.contains(J, IJ));
        CHECK(O.exact_quotient(IJ, J) == I);
        // Closure of the HNF lattice under omega.
        CHECK(O.contains(I, O.times_omega({I.a(), 0})));
        CHECK(O.contains(I, O.times_omega({I.b(), I.c()})));
        // HNF is canonical: regenerating from the basis gives the same matrix.
        CHECK(O.ideal_from_generators({{I.a(), 0}, {I.b(), I.c()}}) == I);

        // Divisibility and containment agree on divisors.
        for (auto const & m : divisors(O, I)) {
            CHECK(O.contains(m, I));
            CHECK(O.norm(I) % O.norm(m) == 0);
        }
        auto f = O.factor(I);
        for (auto const & [p, e] : f.factors) {
            CHECK(O.contains(ideal_power(O, p, e), I));
            CHECK_FALSE(O.contains(ideal_power(O, p, e + 1), I));
        }
        CHECK(from_factorization(O, f) == I);
    }
}

} // namespace

TEST_CASE("random ideal properties")
{
    random_ideal_properties(-1, 41);
    random_ideal_properties(-5, 42);
    random_ideal_properties(-3, 43);
    random_ideal_properties(-23, 44);
}

TEST_CASE("quotient ring: unit count and reduction homomorphism")
{
    for (std::int64_t d : {-1, -5, -7}) {
        QuadraticOrder O(d);
        Rng rng(50 + static_cast<std::uint64_t>(-d));
        for (int i = 0; i < 25; ++i) {
            auto I = random_quad_ideal(O, rng, 200);
            CAPTURE(d);
            auto rs = all_residues(O, I);
            CHECK(rs.size() == O.norm(I));
            std::set<std::uint64_t> idx;
            for (auto const & r : rs) {
                CHECK(O.reduce(I, r) == r);
                idx.insert(O.residue_index(I, r));
            }
            CHECK(idx.size() == rs.size());
            CHECK(brute_unit_count(O, I) == euler_phi(O, I));
            for (int k = 0; k < 20; ++k) {
                auto x = random_quad(rng, 40), y = random_quad(rng, 40);
                CHECK(O.reduce(I, O.add(x, y)) == O.reduce(I, O.add(O.reduce(I, x), O.reduce(I, y))));
                CHECK(O.reduce(I, O.multiply(x, y)) ==
                      O.reduce(I, O.multiply(O.reduce(I, x), O.reduce(I, y))));
            }
        }
    }
}

TEST_CASE("maximal-ideal powers in D/p^alpha have the expected size")
{
    // In D/p^alpha the image of p^i has norm(p^(alpha - i)) elements.
    for (std::int64_t d : {-1, -5, -2}) {
        QuadraticOrder O(d);
        for (std::uint64_t p : {2, 3, 5}) {
            auto P = O.rational_prime_splitting(p).primes.front();
            for (unsigned alpha = 1; O.norm(ideal_power(O, P, alpha)) <= 256; ++alpha) {
                auto n = ideal_power(O, P, alpha);
                for (unsigned i = 0; i <= alpha; ++i) {
                    auto Pi = ideal_power(O, P, i);
                    std::uint64_t count = 0;
                    for (auto const & r : all_residues(O, n))
                        count += O.contains(Pi, r);
                    CHECK(count == O.norm(ideal_power(O, P, alpha - i)));
                }
            }
        }
    }
}

TEST_CASE("congruence and residue-gcd counts over Z[i] and Z[sqrt(-5)]")
{
    for (std::int64_t d : {-1, -5}) {
        QuadraticOrder O(d);
        Rng rng(60 + static_cast<std::uint64_t>(-d));
        for (int i = 0; i < 200; ++i) {
            auto n = random_quad_ideal(O, rng, 120);
            auto a = random_quad(rng, 15), b = random_quad(rng, 15);
            CHECK(congruence_solution_count(O, a, b, n) == brute_solution_count(O, a, b, n));
            std::map<QuadIdeal, std::uint64_t> classes;
            for (auto const & r : all_residues(O, n))
                ++classes[O.sum(n, r)];
            std::uint64_t phi_sum = 0;
            for (auto const & m : divisors(O, n)) {
                CHECK(classes[m] == euler_phi(O, O.exact_quotient(n, m)));
                phi_sum += euler_phi(O, m);
            }
            CHECK(phi_sum == O.norm(n));
            if (!O.is_zero(a) && O.is_unit_ideal(O.sum(n, a)))
                CHECK(mult_order(O, a, n) == brute_order(O, a, n));
        }
    }
}

TEST_CASE("ideal JSON form")
{
    QuadraticOrder S(-5);
    auto p1 = S.ideal_from_generators({{2, 0}, {1, 1}});
    auto j = S.ideal_json(p1);
    CHECK(j["d"] == -5);
    CHECK(j["gens"] == nlohmann::json::parse("[[2,0],[1,1]]"));
}
