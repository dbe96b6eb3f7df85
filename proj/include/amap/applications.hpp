#ifndef AMAP_APPLICATIONS_HPP
#define AMAP_APPLICATIONS_HPP

// Maps over finite fields whose dynamics reduce to an a-map: Redei
// functions, Chebyshev polynomials, linearized polynomials, and the generic
// trees of elliptic-curve endomorphism maps.

#include "amap/graphs.hpp"
#include "amap/poly.hpp"
#include "amap/quadorder.hpp"
#include "amap/trees.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amap {

/* A point of P^1(F_q): a field element or infinity. */
struct ProjectivePoint
{
    std::optional<FiniteField::Elem> value; // empty = infinity

    bool is_infinity() const { return !value; }
    friend bool operator==(ProjectivePoint const &, ProjectivePoint const &) = default;
};

struct AppReport
{
    bool passed = false;
    std::string predicted_code;
    std::string brute_code;
    std::uint64_t node_count = 0;
    nlohmann::json json;
};

/// R_n(x, a) = N/D where (x + sqrt(a))^n = N + D sqrt(a); poles go to infinity.
ProjectivePoint redei_eval(FiniteField const & f, std::uint64_t n, FiniteField::Elem a,
                           ProjectivePoint const & x);

/// Redei map on P^1(F_q) minus the square roots of a, against the
/// prediction for the n-map on Z/(q - chi(a)).
AppReport redei_check(std::uint64_t q, std::uint64_t n, FiniteField::Elem a,
                      std::uint64_t max_nodes = default_max_nodes);

FiniteField::Elem chebyshev_eval(FiniteField const & f, std::uint64_t n, FiniteField::Elem x);

/// Every periodic point c other than +-2 must carry T_{a0(n)} when
/// chi(c^2 - 4) = 1 and T_{a1(n)} when it is -1, where a0, a1 are the
/// n-parts of q - 1 and q + 1.  Points +-2 are reported, not checked.
AppReport chebyshev_check(std::uint64_t q, std::uint64_t n,
                          std::uint64_t max_nodes = default_max_nodes);

/// L_f on F_{q^n}, the multiplication map by f on F_q[x]/(x^n - 1), and
/// the closed-form prediction must share one canonical code.
AppReport linearized_check(std::uint64_t q, std::uint64_t n, Poly const & f,
                           std::uint64_t max_nodes = default_max_nodes);

struct EcTrees
{
    RootedTree tree_plus;  // chi = +1, from <pi^n - 1>
    RootedTree tree_minus; // chi = -1, from <pi^n + 1>
    NuSeries nu_plus;
    NuSeries nu_minus;
    nlohmann::json json;
};

EcTrees ec_generic_trees(std::int64_t d, QuadInt a, QuadInt pi, unsigned n);

} // namespace amap

#endif
