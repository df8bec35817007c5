#pragma once

// Family/method dispatch and the bundled verification suites. This is the
// layer the C API and the command-line tool are built on.

#include "digicon/bigcount.hpp"
#include "digicon/convexity.hpp"
#include "digicon/graph.hpp"
#include "digicon/sequence.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace digicon {

enum class Family { path, cycle, complete, cycle_power, complete_product, path_grid };
enum class Method { bruteforce, recurrence, formula, bijection, arrays };
enum class Format { jsonl, csv, plain };

std::optional<Family> parse_family(std::string_view name);
std::optional<Method> parse_method(std::string_view name);
std::optional<Format> parse_format(std::string_view name);
std::string_view name_of(Family f);
std::string_view name_of(Method m);
std::string_view name_of(Format f);

struct FamilyParams {
    std::optional<std::size_t> n, m, k;
};

/// Throws InvalidParameter when a required parameter is missing or a foreign one is set.
void validate_params(Family family, const FamilyParams& params);

/// "n=10", "n=7,k=2", "n=3,m=2"
std::string params_label(Family family, const FamilyParams& params);

Graph build_family_graph(Family family, const FamilyParams& params);

/// 1-based label of vertex v: "v3" for single graphs, "(2,1)" for products.
std::string vertex_label(Family family, const FamilyParams& params, Vertex v);

bool method_supports_count(Family family, Method method, const FamilyParams& params);
bool method_supports_enumerate(Family family, Method method, const FamilyParams& params);

/// n_D of the family member by the requested method.
BigCount count_family(Family family, Method method, const FamilyParams& params, const EnumerationBudget& budget);

/// Digitally convex sets of the family member, produced by `method`, in increasing bitmask order.
std::vector<VertexSet> enumerate_family(Family family, Method method, const FamilyParams& params,
                                        const EnumerationBudget& budget);

/// x^0 .. x^terms of the block-string series a_k via the chosen method
/// (formula = generating function, recurrence, bruteforce). The x^0 term is 0.
PowerSeries block_string_series(std::size_t k, std::size_t terms, Method method, const EnumerationBudget& budget);

// --- grid table and b-files --------------------------------------------------------

/// Position of (n, m) when the square table n_D(P_n □ P_m) is read by antidiagonals, offset 1.
std::int64_t antidiagonal_index(std::size_t n, std::size_t m);

/// count_grid_via_arrays for every (n, m) with n * m <= max_nm, keyed by antidiagonal_index.
std::vector<SequenceEntry> grid_table(std::size_t max_nm, const EnumerationBudget& budget);

// --- verification suites -----------------------------------------------------------

struct VerifyOptions {
    std::optional<std::size_t> max_n, max_k, max_m, max_nm;
    std::optional<std::filesystem::path> bfile;
    EnumerationBudget budget;
};

struct VerifyRow {
    std::string suite;
    std::string case_label;
    std::vector<std::pair<std::string, std::string>> values;
    bool ok = true;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool ok() const;
    std::string render(Format format) const;
};

std::vector<std::string_view> verify_suite_names();

/// Runs a bundled suite ("all" runs each of them). Throws InvalidParameter on an unknown name.
VerifyReport run_verify_suite(std::string_view suite, const VerifyOptions& options);

} // namespace digicon
