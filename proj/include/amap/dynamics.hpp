#ifndef AMAP_DYNAMICS_HPP
#define AMAP_DYNAMICS_HPP

// Predicted and brute-force functional graphs of the a-map x -> a*x on D/n.

#include "amap/domain.hpp"
#include "amap/graphs.hpp"
#include "amap/trees.hpp"

#include <string>
#include <vector>

namespace amap {

/* The ideals a_1, a_2, ... with a_1 = gcd(n0, <a>) and
 * a_{i+1} = gcd(n0 / (a_1 ... a_i), <a>), stopping once their product is n0.
 * Every prime of n0 must divide <a>. */
template <Domain D>
std::vector<ideal_t<D>> nu_ideals(D const & dom, element_t<D> const & a, ideal_t<D> const & n0)
{
    if (dom.is_zero(a))
        throw InvalidArgument("nu-series: a must be nonzero");
    auto const f = dom.factor(n0);
    for (auto const & [p, e] : f.factors)
        if (!dom.contains(p, a))
            throw InvalidArgument("nu-series: every prime of n0 must divide <a>");

    std::vector<ideal_t<D>> out;
    unsigned const max_steps = f.total_exponent();
    auto rest = n0;
    while (!dom.is_unit_ideal(rest)) {
        if (out.size() == max_steps)
            throw InternalError("nu-series did not terminate");
        auto g = dom.sum(rest, a);
        if (dom.is_unit_ideal(g))
            throw InternalError("nu-series stalled at a unit gcd");
        rest = dom.exact_quotient(rest, g);
        out.push_back(std::move(g));
    }
    return out;
}

template <Domain D>
NuSeries nu_series(D const & dom, element_t<D> const & a, ideal_t<D> const & n0)
{
    NuSeries v;
    for (auto const & g : nu_ideals(dom, a, n0))
        v.push_back(dom.norm(g));
    return v;
}

template <Domain D>
struct Summand
{
    ideal_t<D> divisor;
    std::uint64_t multiplicity;
    std::uint64_t cycle_len;
};

template <Domain D>
struct Prediction
{
    FunctionalGraph graph;
    std::vector<Summand<D>> summands;
    RootedTree tree;
    NuSeries nu;
    ideal_t<D> n0;
    ideal_t<D> n1;
};

/* Sum over m | n1 of phi(m)/ord(a,m) copies of Cyc(ord(a,m), T_{n0(a)}),
 * for an explicitly given split n = n0 * n1. */
template <Domain D>
Prediction<D> predict_from_split(D const & dom, element_t<D> const & a,
                                 ideal_t<D> const & n0, ideal_t<D> const & n1)
{
    Prediction<D> p{{}, {}, RootedTree(), nu_series(dom, a, n0), n0, n1};
    p.tree = elementary_tree(p.nu);
    for (auto const & m : divisors(dom, n1)) {
        std::uint64_t const phi = euler_phi(dom, m);
        std::uint64_t const ord = mult_order(dom, a, m);
        if (phi % ord != 0)
            throw InternalError("order does not divide phi");
        p.summands.push_back({m, phi / ord, ord});
        p.graph.add(repeat(phi / ord, cyc(ord, p.tree)));
    }
    return p;
}

template <Domain D>
Prediction<D> predicted_graph(D const & dom, element_t<D> const & a, ideal_t<D> const & n)
{
    if (dom.is_zero(a))
        throw InvalidArgument("prediction requires a nonzero multiplier");
    auto const [n0, n1] = a_decomposition(dom, a, n);
    return predict_from_split(dom, a, n0, n1);
}

/// Successor table of x -> a*x on residues indexed by residue_index.
template <Domain D>
std::vector<std::uint64_t> amap_successors(D const & dom, element_t<D> const & a,
                                           ideal_t<D> const & n,
                                           std::uint64_t max_nodes = default_max_nodes)
{
    std::uint64_t const size = dom.norm(n);
    check_size(size, max_nodes);
    auto const ar = dom.reduce(n, a);
    std::vector<std::uint64_t> succ(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        auto const x = dom.residue(n, i);
        succ[i] = dom.residue_index(n, dom.reduce(n, dom.multiply(ar, x)));
    }
    return succ;
}

template <Domain D>
FunctionalGraph brute_amap_graph(D const & dom, element_t<D> const & a, ideal_t<D> const & n,
                                 std::uint64_t max_nodes = default_max_nodes)
{
    return brute_graph(amap_successors(dom, a, n, max_nodes));
}

/// Rebuilds the graph with the first summand's cycle length increased by one.
template <Domain D>
void corrupt(Prediction<D> & p)
{
    if (p.summands.empty())
        throw InternalError("prediction has no summands");
    p.summands.front().cycle_len += 1;
    p.graph = FunctionalGraph();
    for (auto const & s : p.summands)
        p.graph.add(repeat(s.multiplicity, cyc(s.cycle_len, p.tree)));
}

template <Domain D>
nlohmann::json prediction_json(D const & dom, Prediction<D> const & p)
{
    nlohmann::json summands = nlohmann::json::array();
    for (auto const & s : p.summands)
        summands.push_back({{"divisor", dom.ideal_json(s.divisor)},
                            {"cycle_len", s.cycle_len},
                            {"multiplicity", s.multiplicity}});
    return {{"n0", dom.ideal_json(p.n0)},
            {"n1", dom.ideal_json(p.n1)},
            {"nu_series", p.nu},
            {"tree", to_bracket(p.tree)},
            {"summands", summands},
            {"predicted_code", p.graph.code()}};
}

struct VerifyOptions
{
    bool corrupt_prediction = false;
    std::uint64_t max_nodes = default_max_nodes;
};

struct Report
{
    bool isomorphic = false;
    std::string predicted_code;
    std::string brute_code;
    std::uint64_t node_count = 0;
    nlohmann::json json;
};

template <Domain D>
Report verify(D const & dom, element_t<D> const & a, ideal_t<D> const & n,
              VerifyOptions const & opt = {})
{
    auto brute = brute_amap_graph(dom, a, n, opt.max_nodes);
    auto pred = predicted_graph(dom, a, n);
    if (opt.corrupt_prediction)
        corrupt(pred);

    Report r;
    r.predicted_code = pred.graph.code();
    r.brute_code = brute.code();
    r.isomorphic = r.predicted_code == r.brute_code;
    r.node_count = brute.node_count();
    r.json = prediction_json(dom, pred);
    r.json["domain"] = dom.describe();
    r.json["a"] = dom.element_json(a);
    r.json["n"] = dom.ideal_json(n);
    r.json["isomorphic"] = r.isomorphic;
    r.json["brute_code"] = r.brute_code;
    r.json["node_count"] = r.node_count;
    r.json["predicted_node_count"] = pred.graph.node_count();
    return r;
}

} // namespace amap

#endif
