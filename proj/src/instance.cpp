#include "amap/instance.hpp"

#include "amap/errors.hpp"

#include <charconv>

namespace amap {

namespace {

using json = nlohmann::json;

std::int64_t as_int(json const & j, char const * what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

json const & field(json const & j, char const * key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Poly parse_poly(PolyDomain const & dom, json const & j, char const * what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + ": expected a coefficient list");
    auto const & F = dom.field();
    std::vector<std::uint32_t> c;
    for (auto const & e : j) {
        auto v = as_int(e, what);
        if (F.degree() == 1) {
            c.push_back(F.from_int(v));
        } else {
            if (v < 0 || static_cast<std::uint64_t>(v) >= F.size())
                throw InvalidArgument(std::string(what) + ": coefficient out of range");
            c.push_back(static_cast<std::uint32_t>(v));
        }
    }
    return Poly(std::move(c));
}

QuadInt parse_quad(json const & j, char const * what)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + ": expected a pair [x, y]");
    return {as_int(j[0], what), as_int(j[1], what)};
}

Instance::Variant parse_variant(json const & j)
{
    auto const & d = field(j, "domain");
    auto const & kind = field(d, "kind");
    if (!kind.is_string())
        throw ParseError("domain kind must be a string");
    auto const k = kind.get<std::string>();
    auto const & ja = field(j, "a");
    auto const & jn = field(j, "n");

    if (k == "Z") {
        IntegerDomain Z;
        auto n = as_int(jn, "n");
        if (n == 0)
            throw InvalidArgument("n must be nonzero");
        return TypedInstance<IntegerDomain>{Z, as_int(ja, "a"), IntIdeal(n)};
    }
    if (k == "poly") {
        auto p = as_int(field(d, "p"), "p");
        if (p < 2)
            throw InvalidArgument("characteristic must be prime");
        std::int64_t deg = d.contains("k") ? as_int(d.at("k"), "k") : 1;
        if (deg < 1)
            throw InvalidArgument("extension degree must be >= 1");
        FieldPtr F;
        if (d.contains("modulus") && deg > 1) {
            std::vector<std::uint32_t> m;
            for (auto const & c : d.at("modulus"))
                m.push_back(static_cast<std::uint32_t>(nt::floor_mod(as_int(c, "modulus"), p)));
            if (static_cast<std::int64_t>(m.size()) != deg + 1)
                throw InvalidArgument("field modulus must have degree k");
            F = std::make_shared<FiniteField const>(static_cast<std::uint32_t>(p), std::move(m));
        } else {
            F = std::make_shared<FiniteField const>(static_cast<std::uint32_t>(p),
                                                    static_cast<unsigned>(deg));
        }
        PolyDomain PD(F);
        auto a = parse_poly(PD, ja, "a");
        auto n = parse_poly(PD, jn, "n");
        return TypedInstance<PolyDomain>{PD, std::move(a), PD.principal(n)};
    }
    if (k == "quad") {
        QuadraticOrder O(as_int(field(d, "d"), "d"));
        auto a = parse_quad(ja, "a");
        json const * gens = &jn;
        if (jn.is_object()) {
            if (jn.contains("d") && as_int(jn.at("d"), "d") != O.d())
                throw InvalidArgument("ideal belongs to a different quadratic order");
            gens = &field(jn, "gens");
        }
        if (!gens->is_array() || gens->empty())
            throw ParseError("n: expected a non-empty generator list");
        std::vector<QuadInt> g;
        for (auto const & e : *gens)
            g.push_back(parse_quad(e, "n"));
        return TypedInstance<QuadraticOrder>{O, a, O.ideal_from_generators(g)};
    }
    throw ParseError("unknown domain kind \"" + k + "\"");
}

json domain_from_string(std::string const & s)
{
    if (s == "Z")
        return {{"kind", "Z"}};
    auto parts = std::vector<std::string>{};
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(':', start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    auto num = [&](std::string const & t) {
        auto v = parse_int_list(t);
        if (v.size() != 1)
            throw ParseError("bad number \"" + t + "\" in domain \"" + s + "\"");
        return v[0];
    };
    if (parts[0] == "poly" && (parts.size() == 2 || parts.size() == 3)) {
        json d = {{"kind", "poly"}, {"p", num(parts[1])}, {"k", 1}};
        if (parts.size() == 3)
            d["k"] = num(parts[2]);
        return d;
    }
    if (parts[0] == "quad" && parts.size() == 2)
        return {{"kind", "quad"}, {"d", num(parts[1])}};
    throw ParseError("unrecognized domain \"" + s + "\" (expected Z, poly:p[:k] or quad:d)");
}

} // namespace

std::vector<std::int64_t> parse_int_list(std::string const & s)
{
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (true) {
        while (i < s.size() && s[i] == ' ')
            ++i;
        std::int64_t v = 0;
        char const * b = s.data() + i;
        char const * e = s.data() + s.size();
        if (b != e && *b == '+')
            ++b;
        auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc())
            throw ParseError("expected an integer list, got \"" + s + "\"");
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - s.data());
        while (i < s.size() && s[i] == ' ')
            ++i;
        if (i == s.size())
            return out;
        if (s[i] != ',')
            throw ParseError("expected an integer list, got \"" + s + "\"");
        ++i;
    }
}

Instance Instance::from_json(json const & j)
{
    try {
        return Instance(parse_variant(j));
    } catch (json::exception const & e) {
        throw ParseError(std::string("malformed instance: ") + e.what());
    }
}

Instance Instance::from_strings(std::string const & domain, std::string const & a,
                                std::string const & n, std::string const & n_gens)
{
    json d = domain_from_string(domain);
    auto const kind = d["kind"].get<std::string>();
    json j = {{"domain", d}};
    if (a.empty())
        throw ParseError("missing --a");
    auto av = parse_int_list(a);
    if (kind == "Z") {
        if (av.size() != 1)
            throw ParseError("a must be a single integer in Z");
        j["a"] = av[0];
    } else {
        j["a"] = av;
    }
    if (kind == "quad") {
        if (n_gens.empty())
            throw ParseError("quadratic ideals take --n-gens \"x,y;x,y;...\"");
        json gens = json::array();
        std::size_t start = 0;
        for (;;) {
            auto pos = n_gens.find(';', start);
            gens.push_back(parse_int_list(n_gens.substr(start, pos - start)));
            if (pos == std::string::npos)
                break;
            start = pos + 1;
        }
        j["n"] = {{"gens", gens}};
    } else {
        if (n.empty())
            throw ParseError("missing --n");
        auto nv = parse_int_list(n);
        if (kind == "Z") {
            if (nv.size() != 1)
                throw ParseError("n must be a single integer in Z");
            j["n"] = nv[0];
        } else {
            j["n"] = nv;
        }
    }
    return from_json(j);
}

json Instance::header() const
{
    return std::visit(
        [](auto const & t) {
            return json{{"domain", t.dom.describe()},
                        {"a", t.dom.element_json(t.a)},
                        {"n", t.dom.ideal_json(t.n)},
                        {"norm", t.dom.norm(t.n)}};
        },
        v_);
}

std::uint64_t Instance::norm() const
{
    return std::visit([](auto const & t) { return t.dom.norm(t.n); }, v_);
}

json Instance::predict() const
{
    return std::visit(
        [&](auto const & t) {
            auto p = predicted_graph(t.dom, t.a, t.n);
            auto j = header();
            j.update(prediction_json(t.dom, p));
            j["node_count"] = p.graph.node_count();
            return j;
        },
        v_);
}

json Instance::brute(std::uint64_t max_nodes) const
{
    return std::visit(
        [&](auto const & t) {
            auto g = brute_amap_graph(t.dom, t.a, t.n, max_nodes);
            auto j = header();
            j["brute_code"] = g.code();
            j["node_count"] = g.node_count();
            j["component_count"] = g.components().size();
            j["cycle_node_count"] = g.cycle_node_count();
            return j;
        },
        v_);
}

Report Instance::verify(VerifyOptions const & opt) const
{
    return std::visit([&](auto const & t) { return amap::verify(t.dom, t.a, t.n, opt); }, v_);
}

std::string Instance::predicted_dot(std::uint64_t max_nodes) const
{
    return std::visit(
        [&](auto const & t) { return to_dot(predicted_graph(t.dom, t.a, t.n).graph, max_nodes); }, v_);
}

std::string Instance::brute_dot(std::uint64_t max_nodes) const
{
    return std::visit(
        [&](auto const & t) { return to_dot(brute_amap_graph(t.dom, t.a, t.n, max_nodes), max_nodes); },
        v_);
}

} // namespace amap
