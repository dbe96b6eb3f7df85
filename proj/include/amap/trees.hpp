#ifndef AMAP_TREES_HPP
#define AMAP_TREES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace amap {

/*
 * Unlabeled rooted tree.  Children are kept sorted in canonical order, so
 * two trees are isomorphic iff they compare equal.  Nodes are immutable and
 * shared between trees.
 *
 * The canonical order is the string order of canonical codes: a leaf is
 * "()", an inner node is "(" + children codes + ")".
 */
class RootedTree
{
    struct Node;
    std::shared_ptr<Node const> n_;

    explicit RootedTree(std::shared_ptr<Node const> n) : n_(std::move(n)) {}

  public:
    /// The single-node tree.
    RootedTree();
    static RootedTree with_children(std::vector<RootedTree> children);

    std::vector<RootedTree> const & children() const;
    bool is_leaf() const { return children().empty(); }
    std::uint64_t node_count() const;
    unsigned height() const;
    std::size_t hash() const;

    std::string code() const;
    void append_code(std::string & out) const;

    friend int compare(RootedTree const & a, RootedTree const & b);
    friend bool operator==(RootedTree const & a, RootedTree const & b) { return compare(a, b) == 0; }
    friend bool operator<(RootedTree const & a, RootedTree const & b) { return compare(a, b) < 0; }
};

/* One connected component: a cycle of the given length, with the trees
 * hanging at consecutive cycle nodes.  The sequence is stored in its least
 * rotation. */
class Component
{
    std::uint64_t len_;
    std::vector<RootedTree> hanging_;

  public:
    Component(std::vector<RootedTree> hanging);

    std::uint64_t cycle_length() const { return len_; }
    std::vector<RootedTree> const & hanging() const { return hanging_; }
    std::uint64_t node_count() const;
    std::string code() const;

    friend bool operator==(Component const & a, Component const & b)
    {
        return a.hanging_ == b.hanging_;
    }
};

/* Functional graph up to isomorphism: a multiset of components. */
class FunctionalGraph
{
    std::vector<Component> comps_;

  public:
    FunctionalGraph() = default;
    explicit FunctionalGraph(std::vector<Component> comps) : comps_(std::move(comps)) {}

    std::vector<Component> const & components() const { return comps_; }
    void add(Component c) { comps_.push_back(std::move(c)); }
    void add(FunctionalGraph const & g);
    std::uint64_t node_count() const;
    std::uint64_t cycle_node_count() const;

    /// Component codes sorted and joined by ';'.
    std::string code() const;
};

using NuSeries = std::vector<std::uint64_t>;

/// Throws InvalidArgument unless v is non-increasing with entries >= 1.
void check_nu_series(NuSeries const & v);

/// The elementary tree T_V; the empty series gives the single node.
RootedTree elementary_tree(NuSeries const & v);
/// The partial tree T_V^k, 0 <= k <= len(V).
RootedTree partial_tree(NuSeries const & v, std::size_t k);

/// m copies of T around an m-cycle.
FunctionalGraph cyc(std::uint64_t m, RootedTree const & t);
/// The extended tree {T} = Cyc(1, T).
inline FunctionalGraph extended(RootedTree const & t) { return cyc(1, t); }
FunctionalGraph disjoint_sum(std::vector<FunctionalGraph> const & gs);
/// k copies of g.
FunctionalGraph repeat(std::uint64_t k, FunctionalGraph const & g);

inline std::string canonical_code(RootedTree const & t) { return t.code(); }
inline std::string canonical_code(FunctionalGraph const & g) { return g.code(); }

/// Bracket notation, e.g. "<<2x*>>" for T_(2,2); repeated children are grouped.
std::string to_bracket(RootedTree const & t);

} // namespace amap

#endif
