#include "amap/trees.hpp"

#include "amap/errors.hpp"

#include <algorithm>

namespace amap {

struct RootedTree::Node
{
    std::vector<RootedTree> children;
    std::uint64_t count = 1;
    unsigned height = 0;
    std::size_t hash = 0x9e3779b97f4a7c15ull;
};

RootedTree::RootedTree()
{
    static auto const leaf = std::make_shared<Node const>();
    n_ = leaf;
}

RootedTree RootedTree::with_children(std::vector<RootedTree> children)
{
    if (children.empty())
        return RootedTree();
    std::sort(children.begin(), children.end());
    auto n = std::make_shared<Node>();
    std::size_t h = 0x51ed270b27a1f3d5ull;
    for (auto const & c : children) {
        n->count += c.node_count();
        n->height = std::max(n->height, c.height() + 1);
        h = (h ^ c.hash()) * 0x100000001b3ull + 0x2545f4914f6cdd1dull;
    }
    n->hash = h ^ (children.size() << 1);
    n->children = std::move(children);
    return RootedTree(std::move(n));
}

std::vector<RootedTree> const & RootedTree::children() const { return n_->children; }
std::uint64_t RootedTree::node_count() const { return n_->count; }
unsigned RootedTree::height() const { return n_->height; }
std::size_t RootedTree::hash() const { return n_->hash; }

int compare(RootedTree const & a, RootedTree const & b)
{
    if (a.n_ == b.n_)
        return 0;
    auto const & ca = a.children();
    auto const & cb = b.children();
    std::size_t const m = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < m; ++i)
        if (int c = compare(ca[i], cb[i]))
            return c;
    // "(" sorts before ")": the node with more children has the smaller code.
    if (ca.size() == cb.size())
        return 0;
    return ca.size() > cb.size() ? -1 : 1;
}

void RootedTree::append_code(std::string & out) const
{
    out += '(';
    for (auto const & c : children())
        c.append_code(out);
    out += ')';
}

std::string RootedTree::code() const
{
    std::string s;
    s.reserve(2 * node_count());
    append_code(s);
    return s;
}

namespace {

// Start index of the least rotation (two-pointer minimum expression).
std::size_t least_rotation(std::vector<RootedTree> const & s)
{
    std::size_t const n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int c = compare(s[(i + k) % n], s[(j + k) % n]);
        if (c == 0) {
            ++k;
            continue;
        }
        if (c > 0)
            i += k + 1;
        else
            j += k + 1;
        if (i == j)
            ++j;
        k = 0;
    }
    return std::min(i, j);
}

} // namespace

Component::Component(std::vector<RootedTree> hanging) : len_(hanging.size())
{
    if (hanging.empty())
        throw InvalidArgument("a cycle must have length >= 1");
    auto r = least_rotation(hanging);
    std::rotate(hanging.begin(), hanging.begin() + static_cast<std::ptrdiff_t>(r), hanging.end());
    hanging_ = std::move(hanging);
}

std::uint64_t Component::node_count() const
{
    std::uint64_t s = 0;
    for (auto const & t : hanging_)
        s += t.node_count();
    return s;
}

std::string Component::code() const
{
    std::string s = "C" + std::to_string(len_) + "[";
    for (std::size_t i = 0; i < hanging_.size(); ++i) {
        if (i)
            s += ',';
        hanging_[i].append_code(s);
    }
    s += ']';
    return s;
}

void FunctionalGraph::add(FunctionalGraph const & g)
{
    comps_.insert(comps_.end(), g.comps_.begin(), g.comps_.end());
}

std::uint64_t FunctionalGraph::node_count() const
{
    std::uint64_t s = 0;
    for (auto const & c : comps_)
        s += c.node_count();
    return s;
}

std::uint64_t FunctionalGraph::cycle_node_count() const
{
    std::uint64_t s = 0;
    for (auto const & c : comps_)
        s += c.cycle_length();
    return s;
}

std::string FunctionalGraph::code() const
{
    std::vector<std::string> codes;
    codes.reserve(comps_.size());
    for (auto const & c : comps_)
        codes.push_back(c.code());
    std::sort(codes.begin(), codes.end());
    std::string s;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i)
            s += ';';
        s += codes[i];
    }
    return s;
}

void check_nu_series(NuSeries const & v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            throw InvalidArgument("nu-series entries must be >= 1");
        if (i && v[i] > v[i - 1])
            throw InvalidArgument("nu-series must be non-increasing");
    }
}

namespace {

void push_copies(std::vector<RootedTree> & out, std::uint64_t k, RootedTree const & t)
{
    out.insert(out.end(), k, t);
}

// partial[k] = T_V^k for k = 0..d-1 (1-based nu in the recursion).
std::vector<RootedTree> partial_trees(NuSeries const & v, std::size_t upto)
{
    std::vector<RootedTree> partial{RootedTree()};
    for (std::size_t k = 1; k <= upto; ++k) {
        std::vector<RootedTree> kids;
        push_copies(kids, v[k - 1], partial[k - 1]);
        for (std::size_t i = 1; i < k; ++i)
            push_copies(kids, v[i - 1] - v[i], partial[i - 1]);
        partial.push_back(RootedTree::with_children(std::move(kids)));
    }
    return partial;
}

} // namespace

RootedTree partial_tree(NuSeries const & v, std::size_t k)
{
    check_nu_series(v);
    if (k > v.size())
        throw InvalidArgument("partial tree index exceeds nu-series length");
    return partial_trees(v, k)[k];
}

RootedTree elementary_tree(NuSeries const & v)
{
    check_nu_series(v);
    std::size_t const d = v.size();
    if (d == 0)
        return RootedTree();
    auto partial = partial_trees(v, d - 1);
    std::vector<RootedTree> kids;
    push_copies(kids, v[d - 1] - 1, partial[d - 1]);
    for (std::size_t i = 1; i < d; ++i)
        push_copies(kids, v[i - 1] - v[i], partial[i - 1]);
    return RootedTree::with_children(std::move(kids));
}

FunctionalGraph cyc(std::uint64_t m, RootedTree const & t)
{
    if (m == 0)
        throw InvalidArgument("Cyc: cycle length must be >= 1");
    return FunctionalGraph({Component(std::vector<RootedTree>(m, t))});
}

FunctionalGraph disjoint_sum(std::vector<FunctionalGraph> const & gs)
{
    FunctionalGraph out;
    for (auto const & g : gs)
        out.add(g);
    return out;
}

FunctionalGraph repeat(std::uint64_t k, FunctionalGraph const & g)
{
    FunctionalGraph out;
    for (std::uint64_t i = 0; i < k; ++i)
        out.add(g);
    return out;
}

std::string to_bracket(RootedTree const & t)
{
    if (t.is_leaf())
        return "*";
    std::string s = "<";
    auto const & ch = t.children();
    bool first = true;
    for (std::size_t i = 0; i < ch.size();) {
        std::size_t j = i;
        while (j < ch.size() && ch[j] == ch[i])
            ++j;
        if (!first)
            s += " + ";
        first = false;
        if (j - i > 1)
            s += std::to_string(j - i) + "x";
        s += to_bracket(ch[i]);
        i = j;
    }
    return s + ">";
}

} // namespace amap
