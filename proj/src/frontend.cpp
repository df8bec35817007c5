#include "digicon/frontend.hpp"

#include "digicon/cyclic_strings.hpp"
#include "digicon/errors.hpp"
#include "digicon/products.hpp"

#include <algorithm>
#include <array>

namespace digicon {

namespace {

constexpr std::array family_names{
    std::pair{Family::path, std::string_view{"path"}},
    std::pair{Family::cycle, std::string_view{"cycle"}},
    std::pair{Family::complete, std::string_view{"complete"}},
    std::pair{Family::cycle_power, std::string_view{"cycle-power"}},
    std::pair{Family::complete_product, std::string_view{"complete-product"}},
    std::pair{Family::path_grid, std::string_view{"path-grid"}},
};

constexpr std::array method_names{
    std::pair{Method::bruteforce, std::string_view{"bruteforce"}},
    std::pair{Method::recurrence, std::string_view{"recurrence"}},
    std::pair{Method::formula, std::string_view{"formula"}},
    std::pair{Method::bijection, std::string_view{"bijection"}},
    std::pair{Method::arrays, std::string_view{"arrays"}},
};

constexpr std::array format_names{
    std::pair{Format::jsonl, std::string_view{"jsonl"}},
    std::pair{Format::csv, std::string_view{"csv"}},
    std::pair{Format::plain, std::string_view{"plain"}},
};

template <class Table, class Key>
auto lookup_by_name(const Table& table, std::string_view name) -> std::optional<Key> {
    for (auto [key, n] : table)
        if (n == name)
            return key;
    return std::nullopt;
}

template <class Table, class Key>
std::string_view lookup_name(const Table& table, Key key) {
    for (auto [k, n] : table)
        if (k == key)
            return n;
    return "?";
}

struct Needs {
    bool n, m, k;
};

Needs needs_of(Family f) {
    switch (f) {
    case Family::path:
    case Family::cycle:
    case Family::complete: return {true, false, false};
    case Family::cycle_power: return {true, false, true};
    case Family::complete_product:
    case Family::path_grid: return {true, true, false};
    }
    return {true, false, false};
}

[[noreturn]] void not_applicable(Family f, Method m, std::string_view what) {
    throw InvalidParameter("method '" + std::string(name_of(m)) + "' cannot " + std::string(what) +
                           " family '" + std::string(name_of(f)) + "'");
}

std::size_t cycle_exponent(Family f, const FamilyParams& p) { return f == Family::cycle ? 1 : *p.k; }

std::vector<VertexSet> sorted(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    return sets;
}

} // namespace

std::optional<Family> parse_family(std::string_view name) {
    return lookup_by_name<decltype(family_names), Family>(family_names, name);
}
std::optional<Method> parse_method(std::string_view name) {
    return lookup_by_name<decltype(method_names), Method>(method_names, name);
}
std::optional<Format> parse_format(std::string_view name) {
    return lookup_by_name<decltype(format_names), Format>(format_names, name);
}
std::string_view name_of(Family f) { return lookup_name(family_names, f); }
std::string_view name_of(Method m) { return lookup_name(method_names, m); }
std::string_view name_of(Format f) { return lookup_name(format_names, f); }

void validate_params(Family family, const FamilyParams& params) {
    const Needs needs = needs_of(family);
    auto check = [&](bool needed, const std::optional<std::size_t>& value, std::string_view flag) {
        if (needed && !value)
            throw InvalidParameter("family '" + std::string(name_of(family)) + "' needs --" + std::string(flag));
        if (!needed && value)
            throw InvalidParameter("family '" + std::string(name_of(family)) + "' takes no --" + std::string(flag));
    };
    check(needs.n, params.n, "n");
    check(needs.m, params.m, "m");
    check(needs.k, params.k, "k");
}

std::string params_label(Family family, const FamilyParams& params) {
    validate_params(family, params);
    std::string out = "n=" + std::to_string(*params.n);
    if (params.m)
        out += ",m=" + std::to_string(*params.m);
    if (params.k)
        out += ",k=" + std::to_string(*params.k);
    return out;
}

Graph build_family_graph(Family family, const FamilyParams& params) {
    validate_params(family, params);
    const std::size_t n = *params.n;
    switch (family) {
    case Family::path: return make_path(n);
    case Family::cycle: return make_cycle(n);
    case Family::complete: return make_complete(n);
    case Family::cycle_power: {
        if (*params.k == 0)
            throw InvalidParameter("cycle power exponent k must be at least 1");
        return graph_power(make_cycle(n), *params.k);
    }
    case Family::complete_product: {
        if (n == 0 || *params.m == 0)
            throw InvalidParameter("complete product dimensions must be at least 1");
        return cartesian_product(make_complete(n), make_complete(*params.m));
    }
    case Family::path_grid: return make_grid(n, *params.m);
    }
    throw InvalidParameter("unknown family");
}

std::string vertex_label(Family family, const FamilyParams& params, Vertex v) {
    validate_params(family, params);
    if (params.m) {
        const std::size_t m = *params.m;
        return "(" + std::to_string(v / m + 1) + "," + std::to_string(v % m + 1) + ")";
    }
    return "v" + std::to_string(v + 1);
}

bool method_supports_count(Family family, Method method, const FamilyParams& params) {
    switch (method) {
    case Method::bruteforce: return true;
    case Method::recurrence:
        return family == Family::cycle || family == Family::cycle_power ||
               (family == Family::path_grid && (params.m == 2u || params.n == 2u));
    case Method::formula: return family == Family::complete || family == Family::complete_product;
    case Method::bijection: return family == Family::cycle || family == Family::cycle_power;
    case Method::arrays: return family == Family::path_grid;
    }
    return false;
}

bool method_supports_enumerate(Family family, Method method, const FamilyParams& params) {
    if (method == Method::recurrence)
        return family == Family::path_grid && params.m == 2u;
    return method_supports_count(family, method, params);
}

BigCount count_family(Family family, Method method, const FamilyParams& params, const EnumerationBudget& budget) {
    validate_params(family, params);
    budget.validate();
    if (!method_supports_count(family, method, params))
        not_applicable(family, method, "count");
    const std::size_t n = *params.n;
    switch (method) {
    case Method::bruteforce: return count_digitally_convex(build_family_graph(family, params), budget);
    case Method::recurrence:
        if (family == Family::path_grid)
            return count_grid_p2(*params.m == 2 ? n : *params.m);
        return count_cycle_power(cycle_exponent(family, params), n);
    case Method::formula:
        if (family == Family::complete) {
            if (n == 0)
                throw InvalidParameter("complete graph order must be at least 1");
            return 2;
        }
        return count_complete_product(n, *params.m);
    case Method::bijection: {
        build_family_graph(family, params); // parameter validation only
        return count_B(cycle_exponent(family, params) + 1, n, budget);
    }
    case Method::arrays: return count_grid_via_arrays(n, *params.m, budget);
    }
    throw InvalidParameter("unknown method");
}

std::vector<VertexSet> enumerate_family(Family family, Method method, const FamilyParams& params,
                                        const EnumerationBudget& budget) {
    validate_params(family, params);
    budget.validate();
    if (!method_supports_enumerate(family, method, params))
        not_applicable(family, method, "enumerate");
    const std::size_t n = *params.n;
    switch (method) {
    case Method::bruteforce: return enumerate_digitally_convex(build_family_graph(family, params), budget);
    case Method::recurrence: return generate_grid_p2(n);
    case Method::formula: {
        if (family == Family::complete) {
            make_complete(n); // rejects n = 0
            return {VertexSet(n), VertexSet::full(n)};
        }
        const std::size_t m = *params.m;
        if (n == 0 || m == 0)
            throw InvalidParameter("complete product dimensions must be at least 1");
        budget.require(static_cast<unsigned>(std::min<std::size_t>(n + m, 64)));
        std::vector<VertexSet> out{VertexSet(n * m), VertexSet::full(n * m)};
        const std::uint64_t row_full = (std::uint64_t{1} << n) - 1, col_full = (std::uint64_t{1} << m) - 1;
        for (std::uint64_t rows = 1; rows < row_full; ++rows) {
            for (std::uint64_t cols = 1; cols < col_full; ++cols) {
                VertexSet s(n * m);
                for (Vertex a = 0; a < n; ++a)
                    if ((rows >> a) & 1u)
                        for (Vertex b = 0; b < m; ++b)
                            if ((cols >> b) & 1u)
                                s.insert(product_vertex(m, a, b));
                out.push_back(std::move(s));
            }
        }
        return sorted(std::move(out));
    }
    case Method::bijection: {
        build_family_graph(family, params);
        const std::size_t k = cycle_exponent(family, params);
        std::vector<VertexSet> out;
        for (const auto& s : enumerate_B(k + 1, n, budget))
            out.push_back(convex_set_from_string(k, n, s));
        return sorted(std::move(out));
    }
    case Method::arrays: {
        std::vector<VertexSet> out;
        for (auto mask : distinct_array_images(n, *params.m, budget))
            out.push_back(VertexSet::from_mask(n * *params.m, mask));
        return out;
    }
    }
    throw InvalidParameter("unknown method");
}

PowerSeries block_string_series(std::size_t k, std::size_t terms, Method method, const EnumerationBudget& budget) {
    switch (method) {
    case Method::formula: return a_series(k, terms);
    case Method::recurrence: {
        PowerSeries out;
        out.coefficients.push_back(0);
        if (terms > 0) {
            auto values = eval_recurrence_range(a_recurrence(k), 1, static_cast<std::int64_t>(terms));
            out.coefficients.insert(out.coefficients.end(), values.begin(), values.end());
        }
        return out;
    }
    case Method::bruteforce: {
        budget.require(static_cast<unsigned>(std::min<std::size_t>(terms, 64)));
        PowerSeries out;
        out.coefficients.push_back(0);
        for (std::size_t n = 1; n <= terms; ++n)
            out.coefficients.push_back(count_B(k, n, budget));
        return out;
    }
    default:
        throw InvalidParameter("series supports methods formula, recurrence and bruteforce");
    }
}

std::int64_t antidiagonal_index(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0)
        throw InvalidParameter("grid dimensions must be at least 1");
    const auto d = static_cast<std::int64_t>(n + m - 1);
    return (d - 1) * d / 2 + static_cast<std::int64_t>(n);
}

std::vector<SequenceEntry> grid_table(std::size_t max_nm, const EnumerationBudget& budget) {
    std::vector<SequenceEntry> out;
    for (std::size_t n = 1; n <= max_nm; ++n)
        for (std::size_t m = 1; n * m <= max_nm; ++m)
            out.push_back({antidiagonal_index(n, m), count_grid_via_arrays(n, m, budget)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return out;
}

} // namespace digicon
