#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amap/amap.h"

#include "json.hpp"

#include <string>
#include <thread>

using nlohmann::json;

namespace {

json report_json(amap_report const * r) { return json::parse(amap_report_json(r)); }

amap_instance * instance(char const * domain, char const * a, char const * n, char const * gens = "")
{
    amap_instance * inst = nullptr;
    REQUIRE(amap_instance_from_args(domain, a, n, gens, &inst) == AMAP_OK);
    REQUIRE(inst != nullptr);
    return inst;
}

} // namespace

TEST_CASE("status names and version")
{
    CHECK(std::string(amap_version()).size() > 0);
    CHECK(std::string(amap_status_name(AMAP_OK)) == "ok");
    CHECK(std::string(amap_status_name(AMAP_ERR_SIZE_LIMIT)) == "size limit exceeded");
}

TEST_CASE("verify through the C interface")
{
    auto * inst = instance("quad:-5", "1,1", "", "6,0");
    amap_report * r = nullptr;
    REQUIRE(amap_verify(inst, 0, 0, &r) == AMAP_OK);
    CHECK(amap_report_ok(r) == 1);
    auto j = report_json(r);
    CHECK(j["isomorphic"] == true);
    CHECK(j["node_count"] == 36);
    CHECK(j["nu_series"] == json::array({6, 2}));
    CHECK(amap_report_dot(r) == nullptr);
    amap_report_free(r);

    REQUIRE(amap_verify(inst, 0, 1, &r) == AMAP_OK);
    CHECK(amap_report_ok(r) == 0);
    CHECK(report_json(r)["isomorphic"] == false);
    amap_report_free(r);
    amap_instance_free(inst);
}

TEST_CASE("predict and brute with DOT")
{
    auto * inst = instance("Z", "2", "24");
    amap_report * p = nullptr, * b = nullptr;
    REQUIRE(amap_predict(inst, 0, 1, &p) == AMAP_OK);
    REQUIRE(amap_brute(inst, 0, 1, &b) == AMAP_OK);
    CHECK(report_json(p)["predicted_code"] == report_json(b)["brute_code"]);
    REQUIRE(amap_report_dot(p) != nullptr);
    // both realize the same canonical form
    CHECK(std::string(amap_report_dot(p)) == amap_report_dot(b));
    amap_report_free(p);
    amap_report_free(b);

    REQUIRE(amap_brute(inst, 10, 0, &b) == AMAP_ERR_SIZE_LIMIT);
    CHECK(std::string(amap_last_error()).find("24") != std::string::npos);
    amap_instance_free(inst);
}

TEST_CASE("instances from JSON")
{
    amap_instance * inst = nullptr;
    REQUIRE(amap_instance_from_json(R"({"domain":{"kind":"poly","p":3},"a":[0,1],"n":[0,0,1,1]})", &inst) ==
            AMAP_OK);
    amap_report * r = nullptr;
    REQUIRE(amap_verify(inst, 0, 0, &r) == AMAP_OK);
    CHECK(amap_report_ok(r) == 1);
    CHECK(report_json(r)["node_count"] == 27);
    amap_report_free(r);
    amap_instance_free(inst);

    CHECK(amap_instance_from_json("{not json", &inst) == AMAP_ERR_PARSE);
    CHECK(std::string(amap_last_error()).size() > 0);
    CHECK(amap_instance_from_json(R"({"domain":{"kind":"Z"},"a":2,"n":0})", &inst) == AMAP_ERR_INVALID_ARGUMENT);
    CHECK(amap_instance_from_json(R"({"domain":{"kind":"quad","d":-4},"a":[1,0],"n":[[2,0]]})", &inst) ==
          AMAP_ERR_INVALID_ARGUMENT);
    CHECK(amap_instance_from_json(R"({"domain":{"kind":"ring"},"a":1,"n":2})", &inst) != AMAP_OK);
}

TEST_CASE("argument errors")
{
    amap_instance * inst = nullptr;
    CHECK(amap_instance_from_args("Z", "x", "5", "", &inst) == AMAP_ERR_PARSE);
    CHECK(amap_instance_from_args("poly:6", "1", "1,1", "", &inst) == AMAP_ERR_INVALID_ARGUMENT);
    CHECK(amap_instance_from_args(nullptr, "1", "1", "", &inst) == AMAP_ERR_INVALID_ARGUMENT);
    CHECK(amap_verify(nullptr, 0, 0, nullptr) == AMAP_ERR_INVALID_ARGUMENT);

    inst = instance("Z", "0", "5");
    amap_report * r = nullptr;
    CHECK(amap_verify(inst, 0, 0, &r) == AMAP_ERR_INVALID_ARGUMENT);
    REQUIRE(amap_brute(inst, 0, 0, &r) == AMAP_OK);
    CHECK(report_json(r)["brute_code"] == "C1[(()()()())]");
    amap_report_free(r);
    amap_instance_free(inst);

    amap_report_free(nullptr);
    amap_instance_free(nullptr);
    CHECK(amap_report_json(nullptr) == nullptr);
}

TEST_CASE("applications through the C interface")
{
    amap_report * r = nullptr;
    REQUIRE(amap_redei(7, 2, 3, 0, &r) == AMAP_OK);
    CHECK(amap_report_ok(r) == 1);
    amap_report_free(r);
    CHECK(amap_redei(7, 2, 0, 0, &r) == AMAP_ERR_INVALID_ARGUMENT);

    REQUIRE(amap_chebyshev(11, 3, 0, &r) == AMAP_OK);
    CHECK(amap_report_ok(r) == 1);
    amap_report_free(r);

    int64_t f[] = {0, 1};
    REQUIRE(amap_linearized(2, 3, f, 2, 0, &r) == AMAP_OK);
    CHECK(report_json(r)["ring_agrees"] == true);
    amap_report_free(r);
    int64_t bad[] = {0, 2};
    CHECK(amap_linearized(2, 3, bad, 2, 0, &r) == AMAP_ERR_INVALID_ARGUMENT);

    REQUIRE(amap_ec_trees(-1, 3, -1, -3, 8, 1, &r) == AMAP_OK);
    auto j = report_json(r);
    CHECK(j["minus"]["tree"] == "<<2x*>>");
    CHECK(j["minus"]["nu_series"] == json::array({2, 2}));
    amap_report_free(r);

    uint64_t nu[] = {6, 2};
    REQUIRE(amap_tree(nu, 2, &r) == AMAP_OK);
    CHECK(report_json(r)["node_count"] == 12);
    amap_report_free(r);
    uint64_t up[] = {2, 6};
    CHECK(amap_tree(up, 2, &r) == AMAP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread")
{
    amap_instance * inst = nullptr;
    CHECK(amap_instance_from_args("Z", "x", "5", "", &inst) == AMAP_ERR_PARSE);
    std::string mine = amap_last_error();
    std::string theirs = "unset";
    std::thread t([&] { theirs = amap_last_error(); });
    t.join();
    CHECK(theirs.empty());
    CHECK(amap_last_error() == mine);
}
