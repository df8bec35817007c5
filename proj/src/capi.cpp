#include "digicon/digicon.h"

#include "digicon/convexity.hpp"
#include "digicon/cyclic_strings.hpp"
#include "digicon/errors.hpp"
#include "digicon/frontend.hpp"
#include "digicon/graph.hpp"
#include "digicon/sequence.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct digicon_graph {
    digicon::Graph graph;
};

namespace {

thread_local std::string last_error;

digicon_status fail(digicon_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs `body`, translating library exceptions into status codes.
template <class Body>
digicon_status guarded(Body&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const digicon::BudgetExceeded& e) {
        return fail(DIGICON_ERR_BUDGET_EXCEEDED, e.what());
    } catch (const digicon::InvalidParameter& e) {
        return fail(DIGICON_ERR_INVALID_PARAMETER, e.what());
    } catch (const digicon::DomainError& e) {
        return fail(DIGICON_ERR_DOMAIN, e.what());
    } catch (const digicon::ParseError& e) {
        return fail(DIGICON_ERR_PARSE, e.what());
    } catch (const digicon::EmptyOverlap& e) {
        return fail(DIGICON_ERR_EMPTY_OVERLAP, e.what());
    } catch (const digicon::InternalError& e) {
        return fail(DIGICON_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DIGICON_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DIGICON_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DIGICON_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p)
        throw digicon::InvalidParameter(std::string(what) + " must not be NULL");
}

digicon::EnumerationBudget to_budget(const digicon_budget* b) {
    digicon::EnumerationBudget out;
    if (b) {
        out.max_subsets = b->max_subsets;
        out.workers = b->workers;
    }
    out.validate();
    return out;
}

std::optional<std::size_t> to_param(int64_t value, const char* name) {
    if (value == DIGICON_UNSET)
        return std::nullopt;
    if (value < 0)
        throw digicon::InvalidParameter(std::string("parameter ") + name + " must be nonnegative");
    return static_cast<std::size_t>(value);
}

digicon::FamilyParams to_params(const digicon_params* p) {
    require(p, "params");
    return {to_param(p->n, "n"), to_param(p->m, "m"), to_param(p->k, "k")};
}

digicon::Family to_family(digicon_family f) {
    switch (f) {
    case DIGICON_FAMILY_PATH: return digicon::Family::path;
    case DIGICON_FAMILY_CYCLE: return digicon::Family::cycle;
    case DIGICON_FAMILY_COMPLETE: return digicon::Family::complete;
    case DIGICON_FAMILY_CYCLE_POWER: return digicon::Family::cycle_power;
    case DIGICON_FAMILY_COMPLETE_PRODUCT: return digicon::Family::complete_product;
    case DIGICON_FAMILY_PATH_GRID: return digicon::Family::path_grid;
    }
    throw digicon::InvalidParameter("unknown family code " + std::to_string(static_cast<int>(f)));
}

digicon::Method to_method(digicon_method m) {
    switch (m) {
    case DIGICON_METHOD_BRUTEFORCE: return digicon::Method::bruteforce;
    case DIGICON_METHOD_RECURRENCE: return digicon::Method::recurrence;
    case DIGICON_METHOD_FORMULA: return digicon::Method::formula;
    case DIGICON_METHOD_BIJECTION: return digicon::Method::bijection;
    case DIGICON_METHOD_ARRAYS: return digicon::Method::arrays;
    }
    throw digicon::InvalidParameter("unknown method code " + std::to_string(static_cast<int>(m)));
}

digicon::Format to_format(digicon_format f) {
    switch (f) {
    case DIGICON_FORMAT_JSONL: return digicon::Format::jsonl;
    case DIGICON_FORMAT_CSV: return digicon::Format::csv;
    case DIGICON_FORMAT_PLAIN: return digicon::Format::plain;
    }
    throw digicon::InvalidParameter("unknown format code " + std::to_string(static_cast<int>(f)));
}

digicon::VertexSet to_set(const digicon_graph* g, const uint32_t* members, size_t count) {
    require(g, "graph");
    if (count > 0)
        require(members, "members");
    return digicon::VertexSet(g->graph.order(), std::span<const uint32_t>(members, count));
}

digicon_status make_graph(digicon::Graph graph, digicon_graph** out) {
    require(out, "out");
    *out = new digicon_graph{std::move(graph)};
    return DIGICON_OK;
}

digicon_status visit_sets(const std::vector<digicon::VertexSet>& sets, digicon_set_visitor visit, void* user) {
    require(reinterpret_cast<const void*>(visit), "visitor");
    for (const auto& s : sets) {
        const auto members = s.members();
        if (visit(members.data(), members.size(), user) != 0)
            return DIGICON_STOPPED;
    }
    return DIGICON_OK;
}

} // namespace

extern "C" {

const char* digicon_version(void) { return "1.0.0"; }

const char* digicon_last_error(void) { return last_error.c_str(); }

const char* digicon_status_name(digicon_status status) {
    switch (status) {
    case DIGICON_OK: return "ok";
    case DIGICON_ERR_INVALID_PARAMETER: return "invalid-parameter";
    case DIGICON_ERR_BUDGET_EXCEEDED: return "budget-exceeded";
    case DIGICON_ERR_DOMAIN: return "domain-error";
    case DIGICON_ERR_PARSE: return "parse-error";
    case DIGICON_ERR_EMPTY_OVERLAP: return "empty-overlap";
    case DIGICON_ERR_INTERNAL: return "internal-error";
    case DIGICON_ERR_BUFFER_TOO_SMALL: return "buffer-too-small";
    case DIGICON_STOPPED: return "stopped";
    }
    return "unknown";
}

void digicon_string_free(char* s) { std::free(s); }

digicon_budget digicon_default_budget(void) {
    return {digicon::EnumerationBudget::default_max_subsets, 1};
}

digicon_params digicon_params_unset(void) { return {DIGICON_UNSET, DIGICON_UNSET, DIGICON_UNSET}; }

digicon_status digicon_family_from_name(const char* name, digicon_family* out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        static constexpr digicon_family codes[] = {DIGICON_FAMILY_PATH, DIGICON_FAMILY_CYCLE,
                                                   DIGICON_FAMILY_COMPLETE, DIGICON_FAMILY_CYCLE_POWER,
                                                   DIGICON_FAMILY_COMPLETE_PRODUCT, DIGICON_FAMILY_PATH_GRID};
        auto f = digicon::parse_family(name);
        if (!f)
            return fail(DIGICON_ERR_INVALID_PARAMETER, std::string("unknown family '") + name + "'");
        *out = codes[static_cast<int>(*f)];
        return DIGICON_OK;
    });
}

digicon_status digicon_method_from_name(const char* name, digicon_method* out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        auto m = digicon::parse_method(name);
        if (!m)
            return fail(DIGICON_ERR_INVALID_PARAMETER, std::string("unknown method '") + name + "'");
        *out = static_cast<digicon_method>(static_cast<int>(*m));
        return DIGICON_OK;
    });
}

digicon_status digicon_format_from_name(const char* name, digicon_format* out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        auto f = digicon::parse_format(name);
        if (!f)
            return fail(DIGICON_ERR_INVALID_PARAMETER, std::string("unknown format '") + name + "'");
        *out = static_cast<digicon_format>(static_cast<int>(*f));
        return DIGICON_OK;
    });
}

digicon_status digicon_graph_path(size_t n, digicon_graph** out) {
    return guarded([&] { return make_graph(digicon::make_path(n), out); });
}

digicon_status digicon_graph_cycle(size_t n, digicon_graph** out) {
    return guarded([&] { return make_graph(digicon::make_cycle(n), out); });
}

digicon_status digicon_graph_complete(size_t n, digicon_graph** out) {
    return guarded([&] { return make_graph(digicon::make_complete(n), out); });
}

digicon_status digicon_graph_power(const digicon_graph* g, size_t d, digicon_graph** out) {
    return guarded([&] {
        require(g, "graph");
        return make_graph(digicon::graph_power(g->graph, d), out);
    });
}

digicon_status digicon_graph_cartesian_product(const digicon_graph* g, const digicon_graph* h, digicon_graph** out) {
    return guarded([&] {
        require(g, "graph");
        require(h, "graph");
        return make_graph(digicon::cartesian_product(g->graph, h->graph), out);
    });
}

digicon_status digicon_graph_for_family(digicon_family family, const digicon_params* params, digicon_graph** out) {
    return guarded([&] { return make_graph(digicon::build_family_graph(to_family(family), to_params(params)), out); });
}

void digicon_graph_free(digicon_graph* g) { delete g; }

size_t digicon_graph_order(const digicon_graph* g) { return g ? g->graph.order() : 0; }

size_t digicon_graph_edge_count(const digicon_graph* g) { return g ? g->graph.edge_count() : 0; }

digicon_status digicon_graph_to_json(const digicon_graph* g, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(g->graph.to_json());
        return DIGICON_OK;
    });
}

digicon_status digicon_has_private_neighbor(const digicon_graph* g, uint32_t v, const uint32_t* members,
                                            size_t count, int* out) {
    return guarded([&] {
        auto s = to_set(g, members, count);
        require(out, "out");
        *out = digicon::has_private_neighbor(g->graph, v, s) ? 1 : 0;
        return DIGICON_OK;
    });
}

digicon_status digicon_is_digitally_convex(const digicon_graph* g, const uint32_t* members, size_t count, int* out) {
    return guarded([&] {
        auto s = to_set(g, members, count);
        require(out, "out");
        *out = digicon::is_digitally_convex(g->graph, s) ? 1 : 0;
        return DIGICON_OK;
    });
}

digicon_status digicon_convex_hull(const digicon_graph* g, const uint32_t* members, size_t count,
                                   uint32_t* out_members, size_t capacity, size_t* out_count) {
    return guarded([&] {
        auto s = to_set(g, members, count);
        require(out_count, "out_count");
        const auto hull = digicon::digital_convex_hull(g->graph, s).members();
        *out_count = hull.size();
        if (hull.size() > capacity)
            return fail(DIGICON_ERR_BUFFER_TOO_SMALL,
                        "hull has " + std::to_string(hull.size()) + " members, capacity " + std::to_string(capacity));
        if (!hull.empty())
            require(out_members, "out_members");
        std::copy(hull.begin(), hull.end(), out_members);
        return DIGICON_OK;
    });
}

digicon_status digicon_count_digitally_convex(const digicon_graph* g, const digicon_budget* budget,
                                              char** out_decimal) {
    return guarded([&] {
        require(g, "graph");
        require(out_decimal, "out_decimal");
        *out_decimal = dup_string(digicon::to_decimal(digicon::count_digitally_convex(g->graph, to_budget(budget))));
        return DIGICON_OK;
    });
}

digicon_status digicon_enumerate_digitally_convex(const digicon_graph* g, const digicon_budget* budget,
                                                  digicon_set_visitor visit, void* user) {
    return guarded([&] {
        require(g, "graph");
        require(reinterpret_cast<const void*>(visit), "visitor");
        const auto b = to_budget(budget);
        if (b.workers > 1)
            return visit_sets(digicon::enumerate_digitally_convex(g->graph, b), visit, user);
        struct Stop {};
        try {
            digicon::for_each_digitally_convex(g->graph, b, [&](const digicon::VertexSet& s) {
                const auto members = s.members();
                if (visit(members.data(), members.size(), user) != 0)
                    throw Stop{};
            });
        } catch (const Stop&) {
            return DIGICON_STOPPED;
        }
        return DIGICON_OK;
    });
}

digicon_status digicon_count_family(digicon_family family, digicon_method method, const digicon_params* params,
                                    const digicon_budget* budget, char** out_decimal) {
    return guarded([&] {
        require(out_decimal, "out_decimal");
        const auto count =
            digicon::count_family(to_family(family), to_method(method), to_params(params), to_budget(budget));
        *out_decimal = dup_string(digicon::to_decimal(count));
        return DIGICON_OK;
    });
}

digicon_status digicon_enumerate_family(digicon_family family, digicon_method method, const digicon_params* params,
                                        const digicon_budget* budget, digicon_set_visitor visit, void* user) {
    return guarded([&] {
        require(reinterpret_cast<const void*>(visit), "visitor");
        const auto sets =
            digicon::enumerate_family(to_family(family), to_method(method), to_params(params), to_budget(budget));
        return visit_sets(sets, visit, user);
    });
}

digicon_status digicon_vertex_label(digicon_family family, const digicon_params* params, uint32_t v, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(digicon::vertex_label(to_family(family), to_params(params), v));
        return DIGICON_OK;
    });
}

digicon_status digicon_params_label(digicon_family family, const digicon_params* params, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(digicon::params_label(to_family(family), to_params(params)));
        return DIGICON_OK;
    });
}

digicon_status digicon_block_string_series(uint32_t k, size_t terms, digicon_method method,
                                           const digicon_budget* budget, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        const auto series = digicon::block_string_series(k, terms, to_method(method), to_budget(budget));
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : series.coefficients)
            j.push_back(digicon::to_decimal(c));
        *out_json = dup_string(j.dump());
        return DIGICON_OK;
    });
}

digicon_status digicon_compare_grid_with_bfile(const char* path, size_t max_nm, const digicon_budget* budget,
                                               char** out_json, int* out_all_match) {
    return guarded([&] {
        require(path, "path");
        require(out_json, "out_json");
        require(out_all_match, "out_all_match");
        const auto bfile = digicon::read_bfile(path);
        const auto report = digicon::compare_with_bfile(digicon::grid_table(max_nm, to_budget(budget)), bfile);
        *out_json = dup_string(report.to_json());
        *out_all_match = report.all_match() ? 1 : 0;
        return DIGICON_OK;
    });
}

digicon_verify_options digicon_verify_options_default(void) {
    return {DIGICON_UNSET, DIGICON_UNSET, DIGICON_UNSET, DIGICON_UNSET, nullptr, digicon_default_budget()};
}

digicon_status digicon_verify(const char* suite, const digicon_verify_options* options, digicon_format format,
                              char** out_report, int* out_all_ok) {
    return guarded([&] {
        require(suite, "suite");
        require(options, "options");
        require(out_report, "out_report");
        require(out_all_ok, "out_all_ok");
        digicon::VerifyOptions o;
        o.max_n = to_param(options->max_n, "max_n");
        o.max_k = to_param(options->max_k, "max_k");
        o.max_m = to_param(options->max_m, "max_m");
        o.max_nm = to_param(options->max_nm, "max_nm");
        if (options->bfile)
            o.bfile = options->bfile;
        o.budget = to_budget(&options->budget);
        const auto report = digicon::run_verify_suite(suite, o);
        *out_report = dup_string(report.render(to_format(format)));
        *out_all_ok = report.ok() ? 1 : 0;
        return DIGICON_OK;
    });
}

} // extern "C"
