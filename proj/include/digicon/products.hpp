#pragma once

#include "digicon/bigcount.hpp"
#include "digicon/convexity.hpp"
#include "digicon/graph.hpp"
#include "digicon/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace digicon {

/// rows x cols 0/1 array. Cell (i, j) corresponds to grid vertex i * cols + j.
class BinaryArray {
public:
    BinaryArray(std::size_t rows, std::size_t cols);
    /// Throws InvalidParameter on ragged or empty input or values other than 0/1.
    explicit BinaryArray(const std::vector<std::vector<int>>& cells);
    /// Bit i * cols + j of `mask` is cell (i, j). Requires rows * cols <= 64.
    static BinaryArray from_mask(std::size_t rows, std::size_t cols, std::uint64_t mask);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);
    std::uint64_t to_mask() const;

    /// Pointwise A <= B.
    bool pointwise_le(const BinaryArray& other) const;

    /// [[1,1,0],[1,1,1],[0,1,1]]
    std::string to_json() const;

    friend bool operator==(const BinaryArray&, const BinaryArray&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> cells_;
};

/// P_n □ P_m with the row-major labelling (i, j) -> i * m + j.
Graph make_grid(std::size_t n, std::size_t m);

// --- complete graphs ------------------------------------------------------------

/// 2 + (2^n - 2)(2^m - 2).
BigCount count_complete_product(std::size_t n, std::size_t m);

/// If S = S1 x S2 inside K_n □ K_m (vertex (a, b) -> a * m + b), returns the factors.
std::optional<std::pair<VertexSet, VertexSet>> product_factors(std::size_t n, std::size_t m,
                                                               const VertexSet& s);

// --- ladders P_n □ P_2 ----------------------------------------------------------

/// Ladder vertices: v_i -> (i-1, 0) -> 2(i-1), u_i -> (i-1, 1) -> 2(i-1)+1.
inline Vertex ladder_v(std::size_t i) { return static_cast<Vertex>(2 * (i - 1)); }
inline Vertex ladder_u(std::size_t i) { return static_cast<Vertex>(2 * (i - 1) + 1); }

/// Order-3 recurrence with initial terms 2, 6, 16 at n = 1, 2, 3.
LinearRecurrence grid_p2_recurrence();
BigCount count_grid_p2(std::size_t n);

/// The three disjoint families built from the convex sets of the three shorter ladders.
struct GridP2Families {
    std::vector<VertexSet> from_minus_one;   ///< one per set of P_{n-1} □ P_2
    std::vector<VertexSet> from_minus_two;   ///< three per set of P_{n-2} □ P_2
    std::vector<VertexSet> from_minus_three; ///< two per set of P_{n-3} □ P_2
};

/// Requires 4 <= n <= 31. Self-checks disjointness, cardinalities and convexity;
/// throws InternalError if any check fails.
GridP2Families generate_grid_p2_families(std::size_t n);

/// Every digitally convex set of P_n □ P_2 (1 <= n <= 31), in increasing bitmask order.
std::vector<VertexSet> generate_grid_p2(std::size_t n);

// --- grids P_n □ P_m and binary arrays -------------------------------------------

/// Each cell becomes the minimum over itself and its horizontal/vertical neighbours.
BinaryArray min_transform(const BinaryArray& a);
/// Each cell becomes the maximum over itself and its horizontal/vertical neighbours.
BinaryArray max_transform(const BinaryArray& a);

/// Row-major masks of the distinct images min_transform(A) over all 2^{nm} arrays, ascending.
std::vector<std::uint64_t> distinct_array_images(std::size_t n, std::size_t m,
                                                 const EnumerationBudget& budget = {});
BigCount count_grid_via_arrays(std::size_t n, std::size_t m, const EnumerationBudget& budget = {});

/// Indicator array of S in P_n □ P_m.
BinaryArray indicator_array(std::size_t n, std::size_t m, const VertexSet& s);
/// The set {(i, j) : a*_{ij} = 1}; throws DomainError if it is not digitally convex.
VertexSet set_from_array(const BinaryArray& astar);
/// max_transform of the indicator of S; throws DomainError unless S is convex in P_n □ P_m.
BinaryArray array_from_set(std::size_t n, std::size_t m, const VertexSet& s);

// --- maximal independent sets ----------------------------------------------------

BigCount count_maximal_independent_sets(const Graph& g, const EnumerationBudget& budget = {});
/// Maximal independent sets of P_n □ P_m □ P_2 by brute force over 2^{2nm} subsets.
BigCount count_mis_grid3(std::size_t n, std::size_t m, const EnumerationBudget& budget = {});

} // namespace digicon
