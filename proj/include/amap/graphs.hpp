#ifndef AMAP_GRAPHS_HPP
#define AMAP_GRAPHS_HPP

#include "amap/trees.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace amap {

inline constexpr std::uint64_t default_max_nodes = 1'000'000;

/// Throws SizeLimitExceeded if n > max_nodes.
void check_size(std::uint64_t n, std::uint64_t max_nodes);

/* Functional graph of an explicit map on {0, ..., size-1}, together with
 * per-node data: whether the node is periodic, and the tree of non-periodic
 * preimages hanging at each node. */
struct GraphAnalysis
{
    FunctionalGraph graph;
    std::vector<char> periodic;
    std::vector<RootedTree> tree_at;
};

GraphAnalysis analyze(std::span<std::uint64_t const> succ);
FunctionalGraph brute_graph(std::span<std::uint64_t const> succ);

template <class F>
FunctionalGraph brute_graph(std::uint64_t size, F && successor)
{
    std::vector<std::uint64_t> succ(size);
    for (std::uint64_t i = 0; i < size; ++i)
        succ[i] = successor(i);
    return brute_graph(succ);
}

/* Explicit successor map realizing a graph.  All cycle nodes are numbered
 * first (components in canonical order), then tree nodes breadth first. */
struct Materialized
{
    std::vector<std::uint64_t> succ;
    std::uint64_t cycle_nodes = 0;
};

Materialized materialize(FunctionalGraph const & g, std::uint64_t max_nodes = default_max_nodes);

/// Functional graph of the product map (x, y) -> (f(x), g(y)).
FunctionalGraph tensor(FunctionalGraph const & a, FunctionalGraph const & b,
                       std::uint64_t max_nodes = default_max_nodes);

/* A rooted tree T (root has no successor) or the extended tree {T} (root is
 * a fixed point). */
struct TreeArg
{
    RootedTree tree;
    bool extended = false;
};

/// Hanging tree at the pair of roots in the product of two (extended) trees.
RootedTree restricted_tensor(TreeArg const & a, TreeArg const & b,
                             std::uint64_t max_nodes = default_max_nodes);

/// DOT digraph of the canonical realization of g: one edge per node.
std::string to_dot(FunctionalGraph const & g, std::uint64_t max_nodes = default_max_nodes);

} // namespace amap

#endif
