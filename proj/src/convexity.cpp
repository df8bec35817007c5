#include "digicon/convexity.hpp"

#include "digicon/errors.hpp"
#include "subset_kernel.hpp"

namespace digicon {

BudgetExceeded::BudgetExceeded(unsigned required_log2, std::uint64_t max_subsets)
    : Error("search space of 2^" + std::to_string(required_log2) + " subsets exceeds max_subsets=" +
            std::to_string(max_subsets) + "; raise the cap to at least 2^" +
            std::to_string(required_log2)),
      required_log2_(required_log2), max_subsets_(max_subsets) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

void EnumerationBudget::validate() const {
    if (max_subsets == 0)
        throw InvalidParameter("max_subsets must be at least 1");
    if (workers == 0)
        throw InvalidParameter("workers must be at least 1");
}

void EnumerationBudget::require(unsigned bits) const {
    validate();
    if (bits >= 64 || (std::uint64_t{1} << bits) > max_subsets)
        throw BudgetExceeded(bits, max_subsets);
}

namespace {

void check_universe(const Graph& g, const VertexSet& s) {
    if (s.universe_order() != g.order())
        throw InvalidParameter("vertex set universe (" + std::to_string(s.universe_order()) +
                               ") does not match graph order (" + std::to_string(g.order()) + ")");
}

// Vertices whose closed neighbourhood lies inside `covered`: V - N[V - covered].
VertexSet locally_dominated(const Graph& g, const VertexSet& covered) {
    return closed_neighborhood_of_set(g, covered.complement()).complement();
}

} // namespace

bool has_private_neighbor(const Graph& g, Vertex v, const VertexSet& s) {
    check_universe(g, s);
    VertexSet rest = s;
    if (rest.contains(v))
        rest.erase(v);
    return !g.closed_row(v).is_subset_of(closed_neighborhood_of_set(g, rest));
}

bool is_digitally_convex(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    return locally_dominated(g, closed_neighborhood_of_set(g, s)).is_subset_of(s);
}

VertexSet digital_convex_hull(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    VertexSet hull = s;
    for (;;) {
        VertexSet grown = hull | locally_dominated(g, closed_neighborhood_of_set(g, hull));
        if (grown == hull)
            return hull;
        hull = std::move(grown);
    }
}

std::vector<std::uint64_t> enumerate_digitally_convex_masks(const Graph& g,
                                                            const EnumerationBudget& budget) {
    budget.require(static_cast<unsigned>(g.order()));
    const detail::ConvexityTest convex(g);
    return detail::filter_masks(std::uint64_t{1} << g.order(), budget.workers, convex);
}

void for_each_digitally_convex(const Graph& g, const EnumerationBudget& budget,
                               const VertexSetVisitor& visit) {
    budget.require(static_cast<unsigned>(g.order()));
    const detail::ConvexityTest convex(g);
    const std::uint64_t total = std::uint64_t{1} << g.order();
    if (budget.workers == 1) {
        for (std::uint64_t m = 0; m < total; ++m)
            if (convex(m))
                visit(VertexSet::from_mask(g.order(), m));
        return;
    }
    for (auto m : detail::filter_masks(total, budget.workers, convex))
        visit(VertexSet::from_mask(g.order(), m));
}

std::vector<VertexSet> enumerate_digitally_convex(const Graph& g, const EnumerationBudget& budget) {
    std::vector<VertexSet> out;
    for_each_digitally_convex(g, budget, [&](const VertexSet& s) { out.push_back(s); });
    return out;
}

BigCount count_digitally_convex(const Graph& g, const EnumerationBudget& budget) {
    budget.require(static_cast<unsigned>(g.order()));
    const detail::ConvexityTest convex(g);
    return BigCount(detail::count_masks(std::uint64_t{1} << g.order(), budget.workers, convex));
}

} // namespace digicon
