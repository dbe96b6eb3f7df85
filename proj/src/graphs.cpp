#include "amap/graphs.hpp"

#include "amap/domain.hpp"

#include <algorithm>
#include <deque>

namespace amap {

void check_size(std::uint64_t n, std::uint64_t max_nodes)
{
    if (n > max_nodes)
        throw SizeLimitExceeded("graph with " + std::to_string(n) +
                                " nodes exceeds the limit of " + std::to_string(max_nodes));
}

GraphAnalysis analyze(std::span<std::uint64_t const> succ)
{
    std::size_t const n = succ.size();
    std::vector<std::uint64_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (succ[i] >= n)
            throw InvalidArgument("successor " + std::to_string(succ[i]) + " out of range");
        ++indeg[succ[i]];
    }

    // Reverse adjacency in CSR form.
    std::vector<std::uint64_t> start(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        ++start[succ[i] + 1];
    for (std::size_t i = 0; i < n; ++i)
        start[i + 1] += start[i];
    std::vector<std::uint64_t> pre(n);
    {
        auto pos = start;
        for (std::size_t i = 0; i < n; ++i)
            pre[pos[succ[i]]++] = i;
    }

    // Peel in-degree-zero nodes; what never peels lies on a cycle.
    std::vector<std::uint64_t> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0)
            order.push_back(i);
    for (std::size_t h = 0; h < order.size(); ++h)
        if (--indeg[succ[order[h]]] == 0)
            order.push_back(succ[order[h]]);

    GraphAnalysis out;
    out.periodic.assign(n, 1);
    for (auto v : order)
        out.periodic[v] = 0;
    out.tree_at.resize(n);

    auto build = [&](std::uint64_t v) {
        std::vector<RootedTree> kids;
        for (auto k = start[v]; k < start[v + 1]; ++k)
            if (!out.periodic[pre[k]])
                kids.push_back(out.tree_at[pre[k]]);
        out.tree_at[v] = RootedTree::with_children(std::move(kids));
    };
    // Peel order lists every node after all of its preimages.
    for (auto v : order)
        build(v);
    for (std::size_t v = 0; v < n; ++v)
        if (out.periodic[v])
            build(v);

    std::vector<char> seen(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (!out.periodic[v] || seen[v])
            continue;
        std::vector<RootedTree> hanging;
        for (auto u = v; !seen[u]; u = succ[u]) {
            seen[u] = 1;
            hanging.push_back(out.tree_at[u]);
        }
        out.graph.add(Component(std::move(hanging)));
    }
    return out;
}

FunctionalGraph brute_graph(std::span<std::uint64_t const> succ)
{
    return analyze(succ).graph;
}

Materialized materialize(FunctionalGraph const & g, std::uint64_t max_nodes)
{
    check_size(g.node_count(), max_nodes);
    auto comps = g.components();
    std::vector<std::string> codes;
    std::vector<std::size_t> idx(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        codes.push_back(comps[i].code());
        idx[i] = i;
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return codes[x] < codes[y]; });

    Materialized m;
    m.succ.reserve(g.node_count());
    struct Pending
    {
        RootedTree const * tree;
        std::uint64_t id;
    };
    std::deque<Pending> queue;
    for (auto i : idx) {
        auto const & c = comps[i];
        std::uint64_t const base = m.succ.size();
        std::uint64_t const len = c.cycle_length();
        for (std::uint64_t j = 0; j < len; ++j) {
            m.succ.push_back(base + (j + 1) % len);
            queue.push_back({&c.hanging()[j], base + j});
        }
    }
    m.cycle_nodes = m.succ.size();
    while (!queue.empty()) {
        auto [t, id] = queue.front();
        queue.pop_front();
        for (auto const & ch : t->children()) {
            queue.push_back({&ch, m.succ.size()});
            m.succ.push_back(id);
        }
    }
    return m;
}

FunctionalGraph tensor(FunctionalGraph const & a, FunctionalGraph const & b, std::uint64_t max_nodes)
{
    check_size(checked_mul(a.node_count(), b.node_count()), max_nodes);
    auto ma = materialize(a, max_nodes);
    auto mb = materialize(b, max_nodes);
    std::uint64_t const nb = mb.succ.size();
    std::vector<std::uint64_t> succ(ma.succ.size() * nb);
    for (std::uint64_t i = 0; i < ma.succ.size(); ++i)
        for (std::uint64_t j = 0; j < nb; ++j)
            succ[i * nb + j] = ma.succ[i] * nb + mb.succ[j];
    return brute_graph(succ);
}

namespace {

struct FlatTree
{
    std::vector<std::vector<std::uint64_t>> preimages; // node 0 is the root
};

FlatTree flatten(TreeArg const & arg)
{
    FlatTree f;
    std::vector<RootedTree const *> nodes{&arg.tree};
    f.preimages.emplace_back();
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        for (auto const & ch : nodes[h]->children()) {
            f.preimages[h].push_back(nodes.size());
            nodes.push_back(&ch);
            f.preimages.emplace_back();
        }
    }
    if (arg.extended)
        f.preimages[0].push_back(0);
    return f;
}

} // namespace

RootedTree restricted_tensor(TreeArg const & a, TreeArg const & b, std::uint64_t max_nodes)
{
    check_size(checked_mul(a.tree.node_count(), b.tree.node_count()), max_nodes);
    auto fa = flatten(a);
    auto fb = flatten(b);
    // Every pair other than (root, root) moves strictly away from the roots
    // in at least one coordinate, so the recursion terminates.
    auto rec = [&](auto & self, std::uint64_t i, std::uint64_t j) -> RootedTree {
        std::vector<RootedTree> kids;
        for (auto x : fa.preimages[i])
            for (auto y : fb.preimages[j]) {
                if (x == 0 && y == 0)
                    continue;
                kids.push_back(self(self, x, y));
            }
        return RootedTree::with_children(std::move(kids));
    };
    return rec(rec, 0, 0);
}

std::string to_dot(FunctionalGraph const & g, std::uint64_t max_nodes)
{
    auto m = materialize(g, max_nodes);
    std::string s = "digraph G {\n";
    for (std::uint64_t v = 0; v < m.succ.size(); ++v) {
        s += "  n" + std::to_string(v);
        s += v < m.cycle_nodes ? " [shape=box];\n" : ";\n";
    }
    for (std::uint64_t v = 0; v < m.succ.size(); ++v)
        s += "  n" + std::to_string(v) + " -> n" + std::to_string(m.succ[v]) + ";\n";
    s += "}\n";
    return s;
}

} // namespace amap
