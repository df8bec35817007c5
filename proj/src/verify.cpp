#include "digicon/cyclic_strings.hpp"
#include "digicon/errors.hpp"
#include "digicon/frontend.hpp"
#include "digicon/products.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace digicon {

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

bool all_equal(const Values& values) {
    return std::all_of(values.begin(), values.end(),
                       [&](const auto& v) { return v.second == values.front().second; });
}

VerifyRow equality_row(std::string suite, std::string label, Values values) {
    VerifyRow row{std::move(suite), std::move(label), std::move(values), true, {}};
    row.ok = all_equal(row.values);
    return row;
}

void suite_cyclic_strings(const VerifyOptions& o, std::vector<VerifyRow>& rows) {
    const std::size_t max_k = o.max_k.value_or(5), max_n = o.max_n.value_or(18);
    for (std::size_t k = 2; k <= max_k; ++k) {
        const auto series = a_series(k, max_n);
        for (std::size_t n = 1; n <= max_n; ++n) {
            rows.push_back(equality_row("cyclic-strings", "k=" + std::to_string(k) + ",n=" + std::to_string(n),
                                        {{"bruteforce", to_decimal(count_B(k, n, o.budget))},
                                         {"recurrence", to_decimal(a_count(k, n))},
                                         {"series", to_decimal(series[n])}}));
        }
    }
}

// Both directions of the string bijection, checked element by element.
std::string cycle_bijection_problem(std::size_t k, std::size_t n, const EnumerationBudget& budget) {
    const auto convex = enumerate_digitally_convex(graph_power(make_cycle(n), k), budget);
    std::set<std::string> images;
    for (const auto& s : convex) {
        const auto str = string_from_convex_set(k, n, s);
        if (!is_member_B(k + 1, str))
            return "image " + str.to_string() + " of " + s.to_json() + " is outside B";
        if (convex_set_from_string(k, n, str) != s)
            return "round trip fails for " + s.to_json();
        if (!images.insert(str.to_string()).second)
            return "two sets map to " + str.to_string();
    }
    const auto strings = enumerate_B(k + 1, n, budget);
    if (strings.size() != images.size())
        return "image size differs from |B|";
    for (const auto& str : strings) {
        if (!images.contains(str.to_string()))
            return "string " + str.to_string() + " is not hit";
        if (string_from_convex_set(k, n, convex_set_from_string(k, n, str)) != str)
            return "inverse round trip fails for " + str.to_string();
    }
    return {};
}

void suite_cycle_power(const VerifyOptions& o, std::vector<VerifyRow>& rows) {
    const std::size_t max_k = o.max_k.value_or(3), max_n = o.max_n.value_or(14);
    for (std::size_t k = 1; k <= max_k; ++k) {
        const auto cycle_rec = cycle_power_recurrence(k);
        for (std::size_t n = 3; n <= max_n; ++n) {
            auto row = equality_row(
                "cycle-power-bijection", "k=" + std::to_string(k) + ",n=" + std::to_string(n),
                {{"bruteforce", to_decimal(count_digitally_convex(graph_power(make_cycle(n), k), o.budget))},
                 {"recurrence", to_decimal(count_cycle_power(k, n))},
                 {"bijection", to_decimal(count_B(k + 1, n, o.budget))},
                 {"cycle-recurrence", to_decimal(eval_recurrence(cycle_rec, static_cast<std::int64_t>(n)))}});
            if (auto problem = cycle_bijection_problem(k, n, o.budget); !problem.empty()) {
                row.ok = false;
                row.note = problem;
            }
            rows.push_back(std::move(row));
        }
    }
}

void suite_complete_product(const VerifyOptions& o, std::vector<VerifyRow>& rows) {
    const std::size_t max_n = o.max_n.value_or(4), max_m = o.max_m.value_or(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t m = 1; m <= max_m; ++m) {
            const Graph g = cartesian_product(make_complete(n), make_complete(m));
            auto sets = enumerate_digitally_convex(g, o.budget);
            auto row = equality_row("complete-product", "n=" + std::to_string(n) + ",m=" + std::to_string(m),
                                    {{"bruteforce", std::to_string(sets.size())},
                                     {"formula", to_decimal(count_complete_product(n, m))}});
            for (const auto& s : sets) {
                if (s.empty() || s == VertexSet::full(n * m))
                    continue;
                auto factors = product_factors(n, m, s);
                if (!factors || factors->first == VertexSet::full(n) || factors->second == VertexSet::full(m)) {
                    row.ok = false;
                    row.note = "set " + s.to_json() + " is not a proper product S1 x S2";
                    break;
                }
            }
            rows.push_back(std::move(row));
        }
    }
}

void suite_grid_p2(const VerifyOptions& o, std::vector<VerifyRow>& rows) {
    const std::size_t max_n = o.max_n.value_or(8);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto brute = enumerate_digitally_convex(make_grid(n, 2), o.budget);
        const auto generated = generate_grid_p2(n);
        auto row = equality_row("grid-p2", "n=" + std::to_string(n),
                                {{"bruteforce", std::to_string(brute.size())},
                                 {"recurrence", to_decimal(count_grid_p2(n))},
                                 {"arrays", to_decimal(count_grid_via_arrays(n, 2, o.budget))},
                                 {"generated", std::to_string(generated.size())}});
        if (generated != brute) {
            row.ok = false;
            row.note = "generated family differs from brute force";
        }
        rows.push_back(std::move(row));
    }
}

std::string array_round_trip_problem(std::size_t n, std::size_t m, const std::vector<VertexSet>& sets) {
    for (const auto& s : sets)
        if (min_transform(array_from_set(n, m, s)) != indicator_array(n, m, s))
            return "min_transform(array_from_set(S)) != S for " + s.to_json();
    return {};
}

void suite_grid_arrays(const VerifyOptions& o, std::vector<VerifyRow>& rows) {
    const std::size_t max_nm = o.max_nm.value_or(20);
    for (std::size_t n = 1; n <= max_nm; ++n) {
        for (std::size_t m = 1; n * m <= max_nm; ++m) {
            const auto brute = enumerate_digitally_convex(make_grid(n, m), o.budget);
            auto row = equality_row("grid-arrays", "n=" + std::to_string(n) + ",m=" + std::to_string(m),
                                    {{"bruteforce", std::to_string(brute.size())},
                                     {"arrays", to_decimal(count_grid_via_arrays(n, m, o.budget))}});
            if (n * m <= 16) {
                if (auto problem = array_round_trip_problem(n, m, brute); !problem.empty()) {
                    row.ok = false;
                    row.note = problem;
                }
            }
            rows.push_back(std::move(row));
        }
    }
}

void suite_oeis(const VerifyOptions& o, std::vector<VerifyRow>& rows, bool required) {
    if (!o.bfile) {
        if (required)
            throw InvalidParameter("suite 'oeis' needs --bfile");
        rows.push_back({"oeis", "A217637", {}, true, "skipped: no --bfile given"});
        return;
    }
    const auto report = compare_with_bfile(grid_table(o.max_nm.value_or(20), o.budget), read_bfile(*o.bfile));
    VerifyRow row{"oeis", "A217637",
                  {{"matched", std::to_string(report.matched)},
                   {"mismatches", std::to_string(report.mismatches.size())}},
                  report.all_match(), {}};
    if (!report.all_match())
        row.note = report.to_json();
    rows.push_back(std::move(row));
}

} // namespace

std::vector<std::string_view> verify_suite_names() {
    return {"cyclic-strings", "cycle-power-bijection", "complete-product", "grid-p2", "grid-arrays", "oeis", "all"};
}

VerifyReport run_verify_suite(std::string_view suite, const VerifyOptions& options) {
    options.budget.validate();
    VerifyReport report;
    auto& rows = report.rows;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "cyclic-strings") {
        suite_cyclic_strings(options, rows);
        known = true;
    }
    if (all || suite == "cycle-power-bijection") {
        suite_cycle_power(options, rows);
        known = true;
    }
    if (all || suite == "complete-product") {
        suite_complete_product(options, rows);
        known = true;
    }
    if (all || suite == "grid-p2") {
        suite_grid_p2(options, rows);
        known = true;
    }
    if (all || suite == "grid-arrays") {
        suite_grid_arrays(options, rows);
        known = true;
    }
    if (all || suite == "oeis") {
        suite_oeis(options, rows, !all);
        known = true;
    }
    if (!known)
        throw InvalidParameter("unknown verify suite '" + std::string(suite) + "'");
    return report;
}

bool VerifyReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
}

std::string VerifyReport::render(Format format) const {
    std::ostringstream out;
    switch (format) {
    case Format::jsonl:
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["suite"] = r.suite;
            j["case"] = r.case_label;
            j["values"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.values)
                j["values"][k] = v;
            j["ok"] = r.ok;
            if (!r.note.empty())
                j["note"] = r.note;
            out << j.dump() << '\n';
        }
        break;
    case Format::csv:
        out << "suite,case,values,ok,note\n";
        for (const auto& r : rows) {
            std::string values;
            for (const auto& [k, v] : r.values)
                values += (values.empty() ? "" : ";") + k + "=" + v;
            std::string note = r.note;
            std::replace(note.begin(), note.end(), '"', '\'');
            out << r.suite << ",\"" << r.case_label << "\",\"" << values << "\"," << (r.ok ? "true" : "false")
                << ",\"" << note << "\"\n";
        }
        break;
    case Format::plain: {
        std::size_t failed = 0;
        for (const auto& r : rows) {
            out << (r.ok ? "ok    " : "FAIL  ") << r.suite << "  " << r.case_label;
            for (const auto& [k, v] : r.values)
                out << "  " << k << "=" << v;
            if (!r.note.empty())
                out << "  # " << r.note;
            out << '\n';
            failed += r.ok ? 0 : 1;
        }
        out << (failed == 0 ? "all " + std::to_string(rows.size()) + " cases agree"
                            : std::to_string(failed) + " of " + std::to_string(rows.size()) + " cases failed")
            << '\n';
        break;
    }
    }
    return out.str();
}

} // namespace digicon
