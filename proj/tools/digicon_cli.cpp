// digicon: command-line front end over the C API.
//
//   digicon count     --family cycle --n 10 --method recurrence
//   digicon enumerate --family path-grid --n 3 --m 2 --format plain
//   digicon series    --k 2 --terms 20
//   digicon verify    --suite all
//   digicon oeis      --bfile b217637.txt --max-nm 20
//
// Exit status: 0 ok, 1 verification mismatch, 2 usage error, 3 budget exceeded,
// 4 unreadable or malformed input data.

#include "digicon/digicon.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit { exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_budget = 3, exit_data = 4 };

struct Options {
    std::string family;
    std::optional<int64_t> n, m, k;
    std::size_t terms = 20;
    std::string method;
    std::string format = "plain";
    uint32_t workers = 1;
    std::optional<uint64_t> max_subsets;
    bool print_graph = false;
    std::string suite = "all";
    std::optional<int64_t> max_n, max_k, max_m, max_nm;
    std::optional<std::string> bfile;
};

struct Failure {
    digicon_status status;
    std::string message;
    std::optional<int> exit_code = std::nullopt;
};

using CString = std::unique_ptr<char, decltype(&digicon_string_free)>;

CString adopt(char* s) { return {s, &digicon_string_free}; }

void check(digicon_status status) {
    if (status != DIGICON_OK && status != DIGICON_STOPPED)
        throw Failure{status, digicon_last_error()};
}

std::vector<std::string> names(const std::vector<const char*>& list) { return {list.begin(), list.end()}; }

const std::vector<std::string> family_names =
    names({"path", "cycle", "complete", "cycle-power", "complete-product", "path-grid"});
const std::vector<std::string> method_names = names({"bruteforce", "recurrence", "formula", "bijection", "arrays"});
const std::vector<std::string> format_names = names({"jsonl", "csv", "plain"});

digicon_family family_of(const std::string& name) {
    digicon_family f;
    check(digicon_family_from_name(name.c_str(), &f));
    return f;
}

digicon_method method_of(const std::string& name) {
    digicon_method m;
    check(digicon_method_from_name(name.c_str(), &m));
    return m;
}

digicon_format format_of(const std::string& name) {
    digicon_format f;
    check(digicon_format_from_name(name.c_str(), &f));
    return f;
}

digicon_params params_of(const Options& o) {
    digicon_params p = digicon_params_unset();
    if (o.n)
        p.n = *o.n;
    if (o.m)
        p.m = *o.m;
    if (o.k)
        p.k = *o.k;
    return p;
}

int64_t unset_or(const std::optional<int64_t>& v) { return v ? *v : DIGICON_UNSET; }

digicon_budget budget_of(const Options& o) {
    digicon_budget b = digicon_default_budget();
    if (const char* env = std::getenv("DIGICON_MAX_SUBSETS"); env && *env) {
        try {
            std::size_t used = 0;
            b.max_subsets = std::stoull(env, &used);
            if (env[used] != '\0' || b.max_subsets == 0)
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw Failure{DIGICON_ERR_INVALID_PARAMETER,
                          std::string("DIGICON_MAX_SUBSETS must be a positive integer, got '") + env + "'"};
        }
    }
    if (o.max_subsets)
        b.max_subsets = *o.max_subsets;
    b.workers = o.workers;
    return b;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void print_graph(const Options& o, digicon_family family, const digicon_params& params) {
    if (!o.print_graph)
        return;
    digicon_graph* g = nullptr;
    check(digicon_graph_for_family(family, &params, &g));
    std::unique_ptr<digicon_graph, decltype(&digicon_graph_free)> owned(g, &digicon_graph_free);
    char* json = nullptr;
    check(digicon_graph_to_json(g, &json));
    std::cerr << adopt(json).get() << '\n';
}

int run_count(const Options& o) {
    const auto family = family_of(o.family);
    const auto method = method_of(o.method.empty() ? "bruteforce" : o.method);
    const auto format = format_of(o.format);
    const auto params = params_of(o);
    const auto budget = budget_of(o);
    print_graph(o, family, params);

    char* raw = nullptr;
    check(digicon_count_family(family, method, &params, &budget, &raw));
    const CString count = adopt(raw);
    char* raw_label = nullptr;
    check(digicon_params_label(family, &params, &raw_label));
    const CString label = adopt(raw_label);
    const std::string method_name = o.method.empty() ? "bruteforce" : o.method;

    switch (format) {
    case DIGICON_FORMAT_PLAIN: std::cout << count.get() << '\n'; break;
    case DIGICON_FORMAT_CSV:
        std::cout << "family,params,method,count\n"
                  << o.family << ',' << csv_field(label.get()) << ',' << method_name << ',' << count.get() << '\n';
        break;
    case DIGICON_FORMAT_JSONL: {
        nlohmann::ordered_json j{{"family", o.family}, {"params", label.get()}, {"method", method_name},
                                 {"count", count.get()}};
        std::cout << j.dump() << '\n';
        break;
    }
    }
    return exit_ok;
}

struct EnumerateState {
    digicon_family family;
    digicon_params params;
    digicon_format format;
    std::size_t index = 0;
    std::optional<Failure> failure;
};

std::string label_of(const EnumerateState& st, uint32_t v) {
    char* raw = nullptr;
    check(digicon_vertex_label(st.family, &st.params, v, &raw));
    return adopt(raw).get();
}

int print_set(const uint32_t* members, size_t count, void* user) {
    auto& st = *static_cast<EnumerateState*>(user);
    try {
        switch (st.format) {
        case DIGICON_FORMAT_JSONL: {
            nlohmann::json j = std::vector<uint32_t>(members, members + count);
            std::cout << j.dump() << '\n';
            break;
        }
        case DIGICON_FORMAT_CSV: {
            std::cout << st.index << ',' << count << ',';
            for (size_t i = 0; i < count; ++i)
                std::cout << (i ? ";" : "") << members[i];
            std::cout << '\n';
            break;
        }
        case DIGICON_FORMAT_PLAIN: {
            std::cout << '{';
            for (size_t i = 0; i < count; ++i)
                std::cout << (i ? ", " : "") << label_of(st, members[i]);
            std::cout << "}\n";
            break;
        }
        }
    } catch (const Failure& f) {
        st.failure = f;
        return 1;
    }
    ++st.index;
    return 0;
}

int run_enumerate(const Options& o) {
    EnumerateState st{family_of(o.family), params_of(o), format_of(o.format), 0, std::nullopt};
    const auto method = method_of(o.method.empty() ? "bruteforce" : o.method);
    const auto budget = budget_of(o);
    print_graph(o, st.family, st.params);
    if (st.format == DIGICON_FORMAT_CSV)
        std::cout << "index,size,members\n";
    check(digicon_enumerate_family(st.family, method, &st.params, &budget, &print_set, &st));
    if (st.failure)
        throw *st.failure;
    return exit_ok;
}

int run_series(const Options& o) {
    int64_t k = 0;
    if (o.family.empty() || o.family == "cycle-power") {
        if (!o.k)
            throw Failure{DIGICON_ERR_INVALID_PARAMETER, "series needs --k"};
        k = o.family.empty() ? *o.k : *o.k + 1;
    } else if (o.family == "cycle") {
        if (o.k)
            throw Failure{DIGICON_ERR_INVALID_PARAMETER, "series for family 'cycle' takes no --k"};
        k = 2;
    } else {
        throw Failure{DIGICON_ERR_INVALID_PARAMETER, "series supports families cycle and cycle-power"};
    }
    if (k < 0 || k > UINT32_MAX)
        throw Failure{DIGICON_ERR_INVALID_PARAMETER, "--k out of range"};
    const auto method = method_of(o.method.empty() ? "formula" : o.method);
    const auto format = format_of(o.format);
    const auto budget = budget_of(o);

    char* raw = nullptr;
    check(digicon_block_string_series(static_cast<uint32_t>(k), o.terms, method, &budget, &raw));
    const auto coefficients = nlohmann::json::parse(adopt(raw).get());

    if (format == DIGICON_FORMAT_CSV)
        std::cout << "n,coefficient\n";
    for (std::size_t n = 1; n < coefficients.size(); ++n) {
        const auto c = coefficients[n].get<std::string>();
        switch (format) {
        case DIGICON_FORMAT_PLAIN: std::cout << n << ' ' << c << '\n'; break;
        case DIGICON_FORMAT_CSV: std::cout << n << ',' << c << '\n'; break;
        case DIGICON_FORMAT_JSONL: {
            nlohmann::ordered_json j{{"n", n}, {"coefficient", c}};
            std::cout << j.dump() << '\n';
            break;
        }
        }
    }
    return exit_ok;
}

void require_readable(const std::optional<std::string>& path) {
    if (path && !std::ifstream(*path))
        throw Failure{DIGICON_ERR_INVALID_PARAMETER, "cannot read b-file '" + *path + "'", exit_data};
}

int run_verify(const Options& o) {
    require_readable(o.bfile);
    digicon_verify_options v = digicon_verify_options_default();
    v.max_n = unset_or(o.max_n);
    v.max_k = unset_or(o.max_k);
    v.max_m = unset_or(o.max_m);
    v.max_nm = unset_or(o.max_nm);
    v.bfile = o.bfile ? o.bfile->c_str() : nullptr;
    v.budget = budget_of(o);
    char* raw = nullptr;
    int all_ok = 0;
    check(digicon_verify(o.suite.c_str(), &v, format_of(o.format), &raw, &all_ok));
    std::cout << adopt(raw).get();
    return all_ok ? exit_ok : exit_mismatch;
}

int run_oeis(const Options& o) {
    require_readable(o.bfile);
    const auto budget = budget_of(o);
    const int64_t max_nm = o.max_nm.value_or(20);
    if (max_nm < 1)
        throw Failure{DIGICON_ERR_INVALID_PARAMETER, "--max-nm must be at least 1"};
    char* raw = nullptr;
    int all_match = 0;
    check(digicon_compare_grid_with_bfile(o.bfile->c_str(), static_cast<size_t>(max_nm), &budget, &raw, &all_match));
    std::cout << nlohmann::json::parse(adopt(raw).get()).dump(format_of(o.format) == DIGICON_FORMAT_PLAIN ? 2 : -1)
              << '\n';
    return all_match ? exit_ok : exit_mismatch;
}

int exit_code_for(digicon_status status) {
    switch (status) {
    case DIGICON_ERR_INVALID_PARAMETER:
    case DIGICON_ERR_DOMAIN: return exit_usage;
    case DIGICON_ERR_BUDGET_EXCEEDED: return exit_budget;
    case DIGICON_ERR_PARSE:
    case DIGICON_ERR_EMPTY_OVERLAP: return exit_data;
    default: return exit_data;
    }
}

void add_family_options(CLI::App* sub, Options& o, bool family_required) {
    auto* f = sub->add_option("--family", o.family, "graph family")->check(CLI::IsMember(family_names));
    if (family_required)
        f->required();
    sub->add_option("--n", o.n, "order (rows for products)");
    sub->add_option("--m", o.m, "second factor size");
    sub->add_option("--k", o.k, "cycle power exponent");
}

void add_common_options(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(format_names));
    sub->add_option("--workers", o.workers, "enumeration threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-subsets", o.max_subsets, "brute-force cap on 2^n (env DIGICON_MAX_SUBSETS)")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact counts and enumerations of digitally convex sets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(digicon_version()));

    auto* count = app.add_subcommand("count", "count the digitally convex sets of a family member");
    add_family_options(count, o, true);
    count->add_option("--method", o.method, "bruteforce (default), recurrence, formula, bijection, arrays")
        ->check(CLI::IsMember(method_names));
    count->add_flag("--print-graph", o.print_graph, "write the graph as JSON to stderr");
    add_common_options(count, o);

    auto* enumerate = app.add_subcommand("enumerate", "list the digitally convex sets of a family member");
    add_family_options(enumerate, o, true);
    enumerate->add_option("--method", o.method, "bruteforce (default), recurrence, formula, bijection, arrays")
        ->check(CLI::IsMember(method_names));
    enumerate->add_flag("--print-graph", o.print_graph, "write the graph as JSON to stderr");
    add_common_options(enumerate, o);

    auto* series = app.add_subcommand("series", "coefficients of the block-string series a_k");
    add_family_options(series, o, false);
    series->add_option("--terms", o.terms, "highest power of x")->capture_default_str();
    series->add_option("--method", o.method, "formula (default), recurrence, bruteforce")
        ->check(CLI::IsMember(method_names));
    add_common_options(series, o);

    auto* verify = app.add_subcommand("verify", "cross-check counts computed by independent methods");
    verify->add_option("--suite", o.suite, "suite name")
        ->check(CLI::IsMember(names({"cyclic-strings", "cycle-power-bijection", "complete-product", "grid-p2",
                                     "grid-arrays", "oeis", "all"})))
        ->capture_default_str();
    verify->add_option("--max-n", o.max_n, "largest n");
    verify->add_option("--max-k", o.max_k, "largest k");
    verify->add_option("--max-m", o.max_m, "largest m");
    verify->add_option("--max-nm", o.max_nm, "largest grid size n*m");
    verify->add_option("--bfile", o.bfile, "b-file for the oeis suite");
    add_common_options(verify, o);

    auto* oeis = app.add_subcommand("oeis", "compare grid counts, read by antidiagonals, with a b-file");
    oeis->add_option("--bfile", o.bfile, "b-file path")->required();
    oeis->add_option("--max-nm", o.max_nm, "largest grid size n*m (default 20)");
    add_common_options(oeis, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (*count)
            return run_count(o);
        if (*enumerate)
            return run_enumerate(o);
        if (*series)
            return run_series(o);
        if (*verify)
            return run_verify(o);
        return run_oeis(o);
    } catch (const Failure& f) {
        const int code = f.exit_code.value_or(exit_code_for(f.status));
        std::cerr << "error: " << f.message << '\n';
        if (code == exit_usage) {
            for (auto* sub : app.get_subcommands())
                std::cerr << '\n' << sub->help();
        }
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_data;
    }
}
