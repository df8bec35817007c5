#include "digicon/digicon.h"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    digicon_string_free(s);
    return out;
}

struct Collected {
    std::vector<std::vector<uint32_t>> sets;
    std::size_t stop_after = 0;
};

int collect(const uint32_t* members, size_t count, void* user) {
    auto& c = *static_cast<Collected*>(user);
    c.sets.emplace_back(members, members + count);
    return c.stop_after != 0 && c.sets.size() >= c.stop_after;
}

} // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(digicon_version()) == "1.0.0");
    CHECK(std::string(digicon_status_name(DIGICON_ERR_BUDGET_EXCEEDED)) == "budget-exceeded");
    const auto b = digicon_default_budget();
    CHECK(b.max_subsets == (uint64_t{1} << 26));
    CHECK(b.workers == 1);
}

TEST_CASE("graph handles") {
    digicon_graph* c = nullptr;
    REQUIRE(digicon_graph_cycle(7, &c) == DIGICON_OK);
    digicon_graph* c2 = nullptr;
    REQUIRE(digicon_graph_power(c, 2, &c2) == DIGICON_OK);
    CHECK(digicon_graph_order(c2) == 7);
    CHECK(digicon_graph_edge_count(c2) == 14);

    char* count = nullptr;
    const auto budget = digicon_default_budget();
    REQUIRE(digicon_count_digitally_convex(c2, &budget, &count) == DIGICON_OK);
    CHECK(take(count) == "16");

    const uint32_t s[] = {0, 6};
    int convex = -1;
    REQUIRE(digicon_is_digitally_convex(c2, s, 2, &convex) == DIGICON_OK);
    CHECK(convex == 1);
    // N[{v1, v3}] is all of C_7^2, so the hull is everything.
    const uint32_t t[] = {0, 2};
    REQUIRE(digicon_is_digitally_convex(c2, t, 2, &convex) == DIGICON_OK);
    CHECK(convex == 0);

    uint32_t hull[7];
    size_t hull_size = 0;
    CHECK(digicon_convex_hull(c2, t, 2, hull, 1, &hull_size) == DIGICON_ERR_BUFFER_TOO_SMALL);
    CHECK(hull_size == 7);
    REQUIRE(digicon_convex_hull(c2, t, 2, hull, 7, &hull_size) == DIGICON_OK);
    CHECK(std::vector<uint32_t>(hull, hull + hull_size) == std::vector<uint32_t>{0, 1, 2, 3, 4, 5, 6});

    const uint32_t bad[] = {9};
    CHECK(digicon_is_digitally_convex(c2, bad, 1, &convex) == DIGICON_ERR_INVALID_PARAMETER);
    CHECK(std::string(digicon_last_error()).find("9") != std::string::npos);

    digicon_graph_free(c2);
    digicon_graph_free(c);
    digicon_graph_free(nullptr);
}

TEST_CASE("null arguments are rejected") {
    CHECK(digicon_graph_path(3, nullptr) == DIGICON_ERR_INVALID_PARAMETER);
    char* out = nullptr;
    CHECK(digicon_count_digitally_convex(nullptr, nullptr, &out) == DIGICON_ERR_INVALID_PARAMETER);
    CHECK(digicon_count_family(DIGICON_FAMILY_CYCLE, DIGICON_METHOD_RECURRENCE, nullptr, nullptr, &out) ==
          DIGICON_ERR_INVALID_PARAMETER);
}

TEST_CASE("family counts and error mapping") {
    auto params = digicon_params_unset();
    params.n = 10;
    char* out = nullptr;
    REQUIRE(digicon_count_family(DIGICON_FAMILY_CYCLE, DIGICON_METHOD_RECURRENCE, &params, nullptr, &out) ==
            DIGICON_OK);
    CHECK(take(out) == "122");

    params.n = 40;
    CHECK(digicon_count_family(DIGICON_FAMILY_PATH, DIGICON_METHOD_BRUTEFORCE, &params, nullptr, &out) ==
          DIGICON_ERR_BUDGET_EXCEEDED);
    CHECK(std::string(digicon_last_error()).find("2^40") != std::string::npos);

    params.n = 0;
    params.m = 2;
    CHECK(digicon_count_family(DIGICON_FAMILY_COMPLETE_PRODUCT, DIGICON_METHOD_FORMULA, &params, nullptr, &out) ==
          DIGICON_ERR_INVALID_PARAMETER);
    params.n = -5;
    CHECK(digicon_count_family(DIGICON_FAMILY_COMPLETE_PRODUCT, DIGICON_METHOD_FORMULA, &params, nullptr, &out) ==
          DIGICON_ERR_INVALID_PARAMETER);
    CHECK(digicon_count_family(static_cast<digicon_family>(42), DIGICON_METHOD_FORMULA, &params, nullptr, &out) ==
          DIGICON_ERR_INVALID_PARAMETER);

    digicon_family f;
    CHECK(digicon_family_from_name("path-grid", &f) == DIGICON_OK);
    CHECK(f == DIGICON_FAMILY_PATH_GRID);
    CHECK(digicon_family_from_name("tree", &f) == DIGICON_ERR_INVALID_PARAMETER);
    digicon_method m;
    CHECK(digicon_method_from_name("arrays", &m) == DIGICON_OK);
    CHECK(m == DIGICON_METHOD_ARRAYS);
}

TEST_CASE("enumeration with and without stopping") {
    auto params = digicon_params_unset();
    params.n = 3;
    params.m = 2;
    Collected all;
    REQUIRE(digicon_enumerate_family(DIGICON_FAMILY_PATH_GRID, DIGICON_METHOD_RECURRENCE, &params, nullptr, &collect,
                                     &all) == DIGICON_OK);
    CHECK(all.sets.size() == 16);

    Collected few;
    few.stop_after = 3;
    CHECK(digicon_enumerate_family(DIGICON_FAMILY_PATH_GRID, DIGICON_METHOD_BRUTEFORCE, &params, nullptr, &collect,
                                   &few) == DIGICON_STOPPED);
    CHECK(few.sets.size() == 3);

    digicon_graph* g = nullptr;
    REQUIRE(digicon_graph_for_family(DIGICON_FAMILY_PATH_GRID, &params, &g) == DIGICON_OK);
    Collected direct, parallel;
    digicon_budget one = digicon_default_budget(), many = one;
    many.workers = 8;
    REQUIRE(digicon_enumerate_digitally_convex(g, &one, &collect, &direct) == DIGICON_OK);
    REQUIRE(digicon_enumerate_digitally_convex(g, &many, &collect, &parallel) == DIGICON_OK);
    CHECK(direct.sets == all.sets);
    CHECK(parallel.sets == all.sets);
    Collected stopped;
    stopped.stop_after = 1;
    CHECK(digicon_enumerate_digitally_convex(g, &one, &collect, &stopped) == DIGICON_STOPPED);
    CHECK(stopped.sets.size() == 1);

    char* json = nullptr;
    REQUIRE(digicon_graph_to_json(g, &json) == DIGICON_OK);
    CHECK(take(json) == R"({"order":6,"edges":[[0,1],[0,2],[1,3],[2,3],[2,4],[3,5],[4,5]]})");
    digicon_graph_free(g);
}

TEST_CASE("labels") {
    auto params = digicon_params_unset();
    params.n = 7;
    params.k = 2;
    char* out = nullptr;
    REQUIRE(digicon_params_label(DIGICON_FAMILY_CYCLE_POWER, &params, &out) == DIGICON_OK);
    CHECK(take(out) == "n=7,k=2");
    REQUIRE(digicon_vertex_label(DIGICON_FAMILY_CYCLE_POWER, &params, 6, &out) == DIGICON_OK);
    CHECK(take(out) == "v7");
}

TEST_CASE("series and verification") {
    char* json = nullptr;
    REQUIRE(digicon_block_string_series(2, 6, DIGICON_METHOD_FORMULA, nullptr, &json) == DIGICON_OK);
    CHECK(take(json) == R"(["0","2","2","2","6","12","20"])");
    CHECK(digicon_block_string_series(1, 6, DIGICON_METHOD_FORMULA, nullptr, &json) == DIGICON_ERR_INVALID_PARAMETER);

    auto o = digicon_verify_options_default();
    o.max_n = 6;
    char* report = nullptr;
    int ok = 0;
    REQUIRE(digicon_verify("grid-p2", &o, DIGICON_FORMAT_PLAIN, &report, &ok) == DIGICON_OK);
    CHECK(ok == 1);
    CHECK(take(report).find("all 6 cases agree") != std::string::npos);
    CHECK(digicon_verify("oeis", &o, DIGICON_FORMAT_PLAIN, &report, &ok) == DIGICON_ERR_INVALID_PARAMETER);

    int match = 0;
    CHECK(digicon_compare_grid_with_bfile("/nonexistent", 4, nullptr, &json, &match) ==
          DIGICON_ERR_INVALID_PARAMETER);
}
