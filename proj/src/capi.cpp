#include "amap/amap.h"

#include "amap/applications.hpp"
#include "amap/errors.hpp"
#include "amap/instance.hpp"

#include <optional>
#include <string>

struct amap_instance
{
    amap::Instance inst;
};

struct amap_report
{
    std::string json;
    std::optional<std::string> dot;
    bool ok = true;
};

namespace {

thread_local std::string last_error;

template <class F>
amap_status guarded(F && f)
{
    try {
        last_error.clear();
        f();
        return AMAP_OK;
    } catch (amap::ParseError const & e) {
        last_error = e.what();
        return AMAP_ERR_PARSE;
    } catch (amap::NotCoprime const & e) {
        last_error = e.what();
        return AMAP_ERR_NOT_COPRIME;
    } catch (amap::SizeLimitExceeded const & e) {
        last_error = e.what();
        return AMAP_ERR_SIZE_LIMIT;
    } catch (amap::InvalidArgument const & e) {
        last_error = e.what();
        return AMAP_ERR_INVALID_ARGUMENT;
    } catch (nlohmann::json::exception const & e) {
        last_error = e.what();
        return AMAP_ERR_PARSE;
    } catch (std::bad_alloc const &) {
        last_error = "out of memory";
        return AMAP_ERR_SIZE_LIMIT;
    } catch (std::exception const & e) {
        last_error = e.what();
        return AMAP_ERR_INTERNAL;
    }
}

amap_status null_arg(char const * what)
{
    last_error = std::string("null argument: ") + what;
    return AMAP_ERR_INVALID_ARGUMENT;
}

amap_report * make_report(nlohmann::json const & j, bool ok = true)
{
    auto * r = new amap_report;
    r->json = j.dump(2);
    r->ok = ok;
    return r;
}

std::uint64_t cap(std::uint64_t max_nodes)
{
    return max_nodes ? max_nodes : amap::default_max_nodes;
}

} // namespace

extern "C" {

const char * amap_version(void) { return "1.0.0"; }

const char * amap_last_error(void) { return last_error.c_str(); }

const char * amap_status_name(amap_status s)
{
    switch (s) {
    case AMAP_OK: return "ok";
    case AMAP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AMAP_ERR_PARSE: return "parse error";
    case AMAP_ERR_NOT_COPRIME: return "not coprime";
    case AMAP_ERR_SIZE_LIMIT: return "size limit exceeded";
    case AMAP_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

amap_status amap_instance_from_json(const char * json, amap_instance ** out)
{
    if (!json || !out)
        return null_arg("json/out");
    return guarded([&] {
        auto j = nlohmann::json::parse(json);
        *out = new amap_instance{amap::Instance::from_json(j)};
    });
}

amap_status amap_instance_from_args(const char * domain, const char * a, const char * n,
                                    const char * n_gens, amap_instance ** out)
{
    if (!domain || !out)
        return null_arg("domain/out");
    return guarded([&] {
        *out = new amap_instance{
            amap::Instance::from_strings(domain, a ? a : "", n ? n : "", n_gens ? n_gens : "")};
    });
}

void amap_instance_free(amap_instance * inst) { delete inst; }

amap_status amap_predict(const amap_instance * inst, uint64_t max_nodes, int with_dot, amap_report ** out)
{
    if (!inst || !out)
        return null_arg("instance/out");
    return guarded([&] {
        auto j = inst->inst.predict();
        std::optional<std::string> dot;
        if (with_dot)
            dot = inst->inst.predicted_dot(cap(max_nodes));
        *out = make_report(j);
        (*out)->dot = std::move(dot);
    });
}

amap_status amap_brute(const amap_instance * inst, uint64_t max_nodes, int with_dot, amap_report ** out)
{
    if (!inst || !out)
        return null_arg("instance/out");
    return guarded([&] {
        auto j = inst->inst.brute(cap(max_nodes));
        std::optional<std::string> dot;
        if (with_dot)
            dot = inst->inst.brute_dot(cap(max_nodes));
        *out = make_report(j);
        (*out)->dot = std::move(dot);
    });
}

amap_status amap_verify(const amap_instance * inst, uint64_t max_nodes, int corrupt, amap_report ** out)
{
    if (!inst || !out)
        return null_arg("instance/out");
    return guarded([&] {
        amap::VerifyOptions opt;
        opt.corrupt_prediction = corrupt != 0;
        opt.max_nodes = cap(max_nodes);
        auto r = inst->inst.verify(opt);
        *out = make_report(r.json, r.isomorphic);
    });
}

amap_status amap_redei(uint64_t q, uint64_t n, uint64_t a, uint64_t max_nodes, amap_report ** out)
{
    if (!out)
        return null_arg("out");
    return guarded([&] {
        if (a > UINT32_MAX)
            throw amap::InvalidArgument("a out of range");
        auto r = amap::redei_check(q, n, static_cast<std::uint32_t>(a), cap(max_nodes));
        *out = make_report(r.json, r.passed);
    });
}

amap_status amap_chebyshev(uint64_t q, uint64_t n, uint64_t max_nodes, amap_report ** out)
{
    if (!out)
        return null_arg("out");
    return guarded([&] {
        auto r = amap::chebyshev_check(q, n, cap(max_nodes));
        *out = make_report(r.json, r.passed);
    });
}

amap_status amap_linearized(uint64_t q, uint64_t n, const int64_t * coeffs, size_t len,
                            uint64_t max_nodes, amap_report ** out)
{
    if (!out || (!coeffs && len))
        return null_arg("coeffs/out");
    return guarded([&] {
        std::vector<std::uint32_t> c;
        for (size_t i = 0; i < len; ++i) {
            if (coeffs[i] < 0 || static_cast<std::uint64_t>(coeffs[i]) >= q)
                throw amap::InvalidArgument("coefficient out of range for F_" + std::to_string(q));
            c.push_back(static_cast<std::uint32_t>(coeffs[i]));
        }
        auto r = amap::linearized_check(q, n, amap::Poly(std::move(c)), cap(max_nodes));
        *out = make_report(r.json, r.passed);
    });
}

amap_status amap_ec_trees(int64_t d, int64_t ax, int64_t ay, int64_t pix, int64_t piy, unsigned n,
                          amap_report ** out)
{
    if (!out)
        return null_arg("out");
    return guarded([&] {
        auto r = amap::ec_generic_trees(d, {ax, ay}, {pix, piy}, n);
        *out = make_report(r.json);
    });
}

amap_status amap_tree(const uint64_t * nu, size_t len, amap_report ** out)
{
    if (!out || (!nu && len))
        return null_arg("nu/out");
    return guarded([&] {
        amap::NuSeries v(nu, nu + len);
        auto t = amap::elementary_tree(v);
        *out = make_report({{"nu_series", v},
                            {"code", t.code()},
                            {"tree", amap::to_bracket(t)},
                            {"node_count", t.node_count()},
                            {"height", t.height()}});
    });
}

const char * amap_report_json(const amap_report * r) { return r ? r->json.c_str() : nullptr; }

const char * amap_report_dot(const amap_report * r)
{
    return r && r->dot ? r->dot->c_str() : nullptr;
}

int amap_report_ok(const amap_report * r) { return r && r->ok ? 1 : 0; }

void amap_report_free(amap_report * r) { delete r; }

} // extern "C"
