// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact integer equalities.

#include "digicon/convexity.hpp"
#include "digicon/cyclic_strings.hpp"
#include "digicon/errors.hpp"
#include "digicon/frontend.hpp"
#include "digicon/products.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace digicon;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass)
            detail = why;
        pass = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok)
            fail(why);
    }
};

std::string str(const BigCount& c) { return to_decimal(c); }

std::string nm(std::size_t n, std::size_t m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

EnumerationBudget fast_budget() {
    EnumerationBudget b;
    b.max_subsets = std::uint64_t{1} << 21;
    b.workers = std::max(1u, std::thread::hardware_concurrency());
    return b;
}

Outcome cycle_sequence() {
    Outcome o;
    const std::pair<std::size_t, long long> published[] = {
        {3, 2},       {4, 6},       {5, 12},      {6, 20},        {9, 74},        {10, 122},
        {11, 200},    {14, 842},    {15, 1362},   {19, 9350},     {20, 15126},    {23, 64080},
        {24, 103684}, {25, 167762}, {28, 710646}, {29, 1149852}, {30, 1860500}};
    for (auto [n, v] : published) {
        const auto got = count_cycle_power(1, n);
        o.expect(got == v, "n=" + std::to_string(n) + ": got " + str(got) + ", expected " + std::to_string(v));
    }
    const auto series = a_series(2, 30);
    for (std::size_t n = 3; n <= 30; ++n)
        o.expect(series[n] == count_cycle_power(1, n), "series and count differ at n=" + std::to_string(n));
    if (o.pass)
        o.detail = "n=3..30, 17 published coefficients";
    return o;
}

Outcome block_strings_oracle() {
    Outcome o;
    const auto b = fast_budget();
    for (std::size_t k = 2; k <= 5; ++k)
        for (std::size_t n = 1; n <= 18; ++n) {
            const auto listed = enumerate_B(k, n, b).size();
            const auto count = a_count(k, n);
            o.expect(count == listed, "k=" + std::to_string(k) + ",n=" + std::to_string(n) + ": a=" + str(count) +
                                          ", |B|=" + std::to_string(listed));
        }
    if (o.pass)
        o.detail = "k=2..5, n=1..18";
    return o;
}

Outcome series_consistency() {
    Outcome o;
    for (std::size_t k = 2; k <= 4; ++k) {
        const auto s = a_series(k, 40);
        o.expect(s[0] == 0, "x^0 coefficient nonzero for k=" + std::to_string(k));
        for (std::size_t n = 1; n <= 40; ++n)
            o.expect(s[n] == a_count(k, n), "k=" + std::to_string(k) + ",n=" + std::to_string(n) + ": series " +
                                                str(s[n]) + " vs " + str(a_count(k, n)));
    }
    if (o.pass)
        o.detail = "k=2..4, n<=40";
    return o;
}

Outcome cycle_power_bijection() {
    Outcome o;
    const auto b = fast_budget();
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 3; n <= 14; ++n) {
            const std::string at = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
            const auto sets = enumerate_digitally_convex(graph_power(make_cycle(n), k), b);
            const auto rec = count_cycle_power(k, n), blocks = a_count(k + 1, n);
            o.expect(sets.size() == rec && rec == blocks,
                     at + ": brute " + std::to_string(sets.size()) + ", recurrence " + str(rec) + ", a " + str(blocks));
            std::set<std::string> images;
            for (const auto& s : sets) {
                const auto image = string_from_convex_set(k, n, s);
                o.expect(convex_set_from_string(k, n, image) == s, at + ": round trip fails on " + s.to_json());
                images.insert(image.to_string());
            }
            for (const auto& str : enumerate_B(k + 1, n, b)) {
                o.expect(string_from_convex_set(k, n, convex_set_from_string(k, n, str)) == str,
                         at + ": inverse round trip fails on " + str.to_string());
                o.expect(images.contains(str.to_string()), at + ": " + str.to_string() + " not hit");
            }
            o.expect(images.size() == sets.size(), at + ": map is not injective");
        }
    if (o.pass)
        o.detail = "k=1..3, n=3..14, both directions";
    return o;
}

Outcome complete_products() {
    Outcome o;
    const auto b = fast_budget();
    o.expect(count_complete_product(3, 2) == 14, "(3,2) formula is not 14");
    o.expect(count_complete_product(2, 2) == 6, "(2,2) formula is not 6");
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m) {
            const auto sets = enumerate_digitally_convex(cartesian_product(make_complete(n), make_complete(m)), b);
            o.expect(count_complete_product(n, m) == sets.size(),
                     nm(n, m) + ": formula " + str(count_complete_product(n, m)) + ", brute " +
                         std::to_string(sets.size()));
            for (const auto& s : sets) {
                if (s.empty() || s == VertexSet::full(n * m))
                    continue;
                const auto f = product_factors(n, m, s);
                o.expect(f && f->first != VertexSet::full(n) && f->second != VertexSet::full(m),
                         nm(n, m) + ": " + s.to_json() + " is not a proper product");
            }
        }
    const Graph k32 = cartesian_product(make_complete(3), make_complete(2));
    o.expect(is_digitally_convex(k32, VertexSet(6, std::vector<Vertex>{product_vertex(2, 1, 0)})),
             "{(2,1)} rejected in K3 x K2");
    if (o.pass)
        o.detail = "n,m<=4; {(2,1)} convex in K3 x K2";
    return o;
}

VertexSet ladder(std::initializer_list<std::pair<char, int>> labels) {
    VertexSet s(6);
    for (auto [side, i] : labels)
        s.insert(side == 'v' ? ladder_v(i) : ladder_u(i));
    return s;
}

Outcome ladders() {
    Outcome o;
    const auto b = fast_budget();
    o.expect(count_grid_p2(1) == 2 && count_grid_p2(2) == 6 && count_grid_p2(3) == 16, "initial values differ");
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto brute = enumerate_digitally_convex(make_grid(n, 2), b);
        o.expect(count_grid_p2(n) == brute.size(),
                 "n=" + std::to_string(n) + ": recurrence " + str(count_grid_p2(n)) + ", brute " +
                     std::to_string(brute.size()));
        try {
            o.expect(generate_grid_p2(n) == brute, "n=" + std::to_string(n) + ": generated family differs");
        } catch (const InternalError& e) {
            o.fail("n=" + std::to_string(n) + ": " + e.what());
        }
    }
    for (std::size_t n = 4; n <= 16; ++n) {
        try {
            const auto f = generate_grid_p2_families(n);
            o.expect(f.from_minus_one.size() == count_grid_p2(n - 1) &&
                         f.from_minus_two.size() == 3 * count_grid_p2(n - 2) &&
                         f.from_minus_three.size() == 2 * count_grid_p2(n - 3),
                     "n=" + std::to_string(n) + ": family sizes are not 1x/3x/2x");
        } catch (const InternalError& e) {
            o.fail("n=" + std::to_string(n) + ": " + e.what());
        }
    }
    std::vector<VertexSet> listed{
        VertexSet(6),
        ladder({{'v', 1}}),
        ladder({{'v', 2}}),
        ladder({{'v', 3}}),
        ladder({{'u', 1}}),
        ladder({{'u', 2}}),
        ladder({{'u', 3}}),
        ladder({{'v', 1}, {'v', 3}}),
        ladder({{'v', 1}, {'u', 1}}),
        ladder({{'v', 3}, {'u', 3}}),
        ladder({{'u', 1}, {'u', 3}}),
        ladder({{'v', 1}, {'v', 3}, {'u', 1}}),
        ladder({{'v', 1}, {'u', 1}, {'u', 2}}),
        ladder({{'v', 2}, {'v', 3}, {'u', 3}}),
        ladder({{'v', 3}, {'u', 2}, {'u', 3}}),
        VertexSet::full(6),
    };
    std::sort(listed.begin(), listed.end());
    const auto generated = generate_grid_p2(3);
    if (generated != listed) {
        std::string diff;
        for (const auto& s : listed)
            if (!std::binary_search(generated.begin(), generated.end(), s))
                diff += " listed-only " + s.to_json() + (is_digitally_convex(make_grid(3, 2), s) ? "" : " (not convex)");
        for (const auto& s : generated)
            if (!std::binary_search(listed.begin(), listed.end(), s))
                diff += " generated-only " + s.to_json();
        o.fail("published 16-set list for n=3 not reproduced:" + diff);
    }
    if (o.pass)
        o.detail = "n<=8 element-wise, family checks n=4..16, 16-set list";
    return o;
}

Outcome arrays() {
    Outcome o;
    const auto b = fast_budget();
    const BinaryArray a({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}});
    o.expect(min_transform(a) == BinaryArray({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
             "3x3 example: got " + min_transform(a).to_json());
    std::size_t pairs = 0, round_trips = 0;
    for (std::size_t n = 1; n <= 20; ++n)
        for (std::size_t m = 1; n * m <= 20; ++m) {
            const auto brute = enumerate_digitally_convex(make_grid(n, m), b);
            const auto via_arrays = count_grid_via_arrays(n, m, b);
            o.expect(via_arrays == brute.size(),
                     nm(n, m) + ": arrays " + str(via_arrays) + ", brute " + std::to_string(brute.size()));
            ++pairs;
            if (n * m > 16)
                continue;
            for (const auto& s : brute) {
                o.expect(min_transform(array_from_set(n, m, s)) == indicator_array(n, m, s),
                         nm(n, m) + ": round trip fails on " + s.to_json());
                ++round_trips;
            }
        }
    if (o.pass)
        o.detail = std::to_string(pairs) + " grids with nm<=20, " + std::to_string(round_trips) + " round trips";
    return o;
}

Outcome oeis() {
    Outcome o;
    std::filesystem::path path = DIGICON_DEFAULT_BFILE;
    if (const char* env = std::getenv("DIGICON_A217637_BFILE"); env && *env)
        path = env;
    if (!std::filesystem::exists(path)) {
        o.fail("b-file for A217637 not found at " + path.string() +
               " (set DIGICON_A217637_BFILE); no comparison was possible");
        return o;
    }
    try {
        const auto report = compare_with_bfile(grid_table(20, fast_budget()), read_bfile(path));
        o.expect(report.all_match(), "mismatches: " + report.to_json());
        if (o.pass)
            o.detail = std::to_string(report.matched) + " overlapping indices match";
    } catch (const Error& e) {
        o.fail(e.what());
    }
    return o;
}

Outcome mis() {
    Outcome o;
    const auto b = fast_budget();
    std::vector<std::string> unproven_mismatches;
    std::size_t cases = 0;
    for (std::size_t n = 1; 2 * n <= 18; ++n)
        for (std::size_t m = 1; 2 * n * m <= 18; ++m) {
            const auto mis_count = count_mis_grid3(n, m, b);
            const auto convex = count_digitally_convex(make_grid(n, m), b);
            ++cases;
            if (mis_count == convex)
                continue;
            const std::string at = nm(n, m) + ": MIS " + str(mis_count) + ", convex " + str(convex);
            const bool proven = n == 2 || n == 3 || m == 2 || m == 3;
            if (proven)
                o.fail(at);
            else
                unproven_mismatches.push_back(at);
        }
    if (o.pass) {
        o.detail = std::to_string(cases) + " grids with 2nm<=18";
        if (!unproven_mismatches.empty()) {
            o.detail += "; reported only:";
            for (const auto& s : unproven_mismatches)
                o.detail += " " + s;
        }
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    EnumerationBudget one, eight;
    one.max_subsets = eight.max_subsets = std::uint64_t{1} << 21;
    eight.workers = 8;
    const std::vector<std::pair<std::string, Graph>> graphs{
        {"C_14^2", graph_power(make_cycle(14), 2)},
        {"C_20", make_cycle(20)},
        {"K4 x K4", cartesian_product(make_complete(4), make_complete(4))},
        {"P_8 x P_2", make_grid(8, 2)},
        {"P_4 x P_5", make_grid(4, 5)},
        {"P_18", make_path(18)},
    };
    for (const auto& [name, g] : graphs) {
        o.expect(enumerate_digitally_convex(g, one) == enumerate_digitally_convex(g, eight),
                 name + ": enumeration differs");
        o.expect(count_digitally_convex(g, one) == count_digitally_convex(g, eight), name + ": count differs");
    }
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{4, 5}, {3, 6}, {2, 9}})
        o.expect(distinct_array_images(n, m, one) == distinct_array_images(n, m, eight), nm(n, m) + ": arrays differ");
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{3, 3}, {2, 4}, {1, 9}})
        o.expect(count_mis_grid3(n, m, one) == count_mis_grid3(n, m, eight), nm(n, m) + ": MIS count differs");
    for (std::size_t k = 2; k <= 4; ++k)
        o.expect(enumerate_B(k, 16, one) == enumerate_B(k, 16, eight), "B_" + std::to_string(k) + " differs");
    const std::vector<std::pair<Family, FamilyParams>> families{
        {Family::cycle_power, {12, {}, 3}}, {Family::complete_product, {3, 4, {}}}, {Family::path_grid, {4, 4, {}}}};
    for (const auto& [family, params] : families)
        for (auto method : {Method::bruteforce, Method::recurrence, Method::formula, Method::bijection, Method::arrays}) {
            if (method_supports_enumerate(family, method, params))
                o.expect(enumerate_family(family, method, params, one) == enumerate_family(family, method, params, eight),
                         std::string(name_of(family)) + "/" + std::string(name_of(method)) + ": enumeration differs");
            if (method_supports_count(family, method, params))
                o.expect(count_family(family, method, params, one) == count_family(family, method, params, eight),
                         std::string(name_of(family)) + "/" + std::string(name_of(method)) + ": count differs");
        }
    for (const char* suite : {"cyclic-strings", "grid-arrays"}) {
        VerifyOptions a, c;
        a.max_n = c.max_n = 12;
        a.max_nm = c.max_nm = 12;
        a.budget = one;
        c.budget = eight;
        o.expect(run_verify_suite(suite, a).render(Format::jsonl) == run_verify_suite(suite, c).render(Format::jsonl),
                 std::string(suite) + ": report differs");
    }
    if (o.pass)
        o.detail = "workers=1 vs workers=8, byte-identical";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"cycle sequence n=3..30", cycle_sequence},
        {"block-string count equals enumeration", block_strings_oracle},
        {"generating function equals recurrence", series_consistency},
        {"cycle powers: brute force, recurrence, bijection", cycle_power_bijection},
        {"complete products", complete_products},
        {"ladder recurrence and generation", ladders},
        {"arrays and grid counts", arrays},
        {"OEIS A217637 b-file", oeis},
        {"maximal independent sets of P_n x P_m x P_2", mis},
        {"determinism across worker counts", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ["
                  << o.detail << "] " << t.str() << "s" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
