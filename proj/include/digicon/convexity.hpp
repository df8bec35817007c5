#pragma once

#include "digicon/bigcount.hpp"
#include "digicon/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace digicon {

/// Caps brute-force searches. The search space of an n-vertex graph is 2^n subsets.
struct EnumerationBudget {
    static constexpr std::uint64_t default_max_subsets = std::uint64_t{1} << 26;

    std::uint64_t max_subsets = default_max_subsets;
    unsigned workers = 1;

    /// Throws InvalidParameter unless max_subsets >= 1 and workers >= 1.
    void validate() const;
    /// Throws BudgetExceeded unless 2^bits <= max_subsets.
    void require(unsigned bits) const;
};

/// True iff N[v] - N[S - {v}] is nonempty.
bool has_private_neighbor(const Graph& g, Vertex v, const VertexSet& s);

/// True iff no vertex outside S has its closed neighbourhood inside N[S].
bool is_digitally_convex(const Graph& g, const VertexSet& s);

/// Smallest digitally convex superset of S.
VertexSet digital_convex_hull(const Graph& g, const VertexSet& s);

using VertexSetVisitor = std::function<void(const VertexSet&)>;

/**
 * Visits every digitally convex set of `g` in increasing bitmask order.
 * With budget.workers > 1 the subset range is split into contiguous blocks
 * that run concurrently; the visitor is still called from the calling thread
 * in canonical order.
 */
void for_each_digitally_convex(const Graph& g, const EnumerationBudget& budget,
                               const VertexSetVisitor& visit);

std::vector<VertexSet> enumerate_digitally_convex(const Graph& g, const EnumerationBudget& budget);

/// Same as enumerate_digitally_convex but returns raw bitmasks (bit v = vertex v).
std::vector<std::uint64_t> enumerate_digitally_convex_masks(const Graph& g,
                                                            const EnumerationBudget& budget);

BigCount count_digitally_convex(const Graph& g, const EnumerationBudget& budget);

} // namespace digicon
