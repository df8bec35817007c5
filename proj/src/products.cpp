#include "digicon/products.hpp"

#include "digicon/errors.hpp"
#include "subset_kernel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <memory>

namespace digicon {

// --- BinaryArray ----------------------------------------------------------------

BinaryArray::BinaryArray(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {
    if (rows == 0 || cols == 0)
        throw InvalidParameter("array dimensions must be positive");
}

BinaryArray::BinaryArray(const std::vector<std::vector<int>>& cells)
    : BinaryArray(cells.size(), cells.empty() ? 0 : cells.front().size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (cells[i].size() != cols_)
            throw InvalidParameter("ragged array: row " + std::to_string(i) + " has " +
                                   std::to_string(cells[i].size()) + " cells, expected " + std::to_string(cols_));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (cells[i][j] != 0 && cells[i][j] != 1)
                throw InvalidParameter("array cells must be 0 or 1");
            cells_[i * cols_ + j] = static_cast<std::uint8_t>(cells[i][j]);
        }
    }
}

BinaryArray BinaryArray::from_mask(std::size_t rows, std::size_t cols, std::uint64_t mask) {
    BinaryArray a(rows, cols);
    if (rows * cols > 64)
        throw InvalidParameter("mask-backed arrays need rows * cols <= 64");
    for (std::size_t p = 0; p < rows * cols; ++p)
        a.cells_[p] = (mask >> p) & 1u;
    return a;
}

bool BinaryArray::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw InvalidParameter("array index out of range");
    return cells_[i * cols_ + j] != 0;
}

void BinaryArray::set(std::size_t i, std::size_t j, bool value) {
    if (i >= rows_ || j >= cols_)
        throw InvalidParameter("array index out of range");
    cells_[i * cols_ + j] = value ? 1 : 0;
}

std::uint64_t BinaryArray::to_mask() const {
    if (cells_.size() > 64)
        throw InvalidParameter("array larger than 64 cells has no mask form");
    std::uint64_t mask = 0;
    for (std::size_t p = 0; p < cells_.size(); ++p)
        mask |= std::uint64_t{cells_[p]} << p;
    return mask;
}

bool BinaryArray::pointwise_le(const BinaryArray& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvalidParameter("array dimensions differ");
    for (std::size_t p = 0; p < cells_.size(); ++p)
        if (cells_[p] > other.cells_[p])
            return false;
    return true;
}

std::string BinaryArray::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += ',';
            out += cells_[i * cols_ + j] ? '1' : '0';
        }
        out += ']';
    }
    return out + "]";
}

Graph make_grid(std::size_t n, std::size_t m) { return cartesian_product(make_path(n), make_path(m)); }

// --- complete graphs ------------------------------------------------------------

BigCount count_complete_product(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0)
        throw InvalidParameter("complete product dimensions must be at least 1");
    const BigCount one = 1;
    return 2 + ((one << n) - 2) * ((one << m) - 2);
}

std::optional<std::pair<VertexSet, VertexSet>> product_factors(std::size_t n, std::size_t m,
                                                               const VertexSet& s) {
    if (s.universe_order() != n * m)
        throw InvalidParameter("vertex set universe does not match n * m");
    VertexSet rows(n), cols(m);
    for (Vertex v : s.members()) {
        rows.insert(static_cast<Vertex>(v / m));
        cols.insert(static_cast<Vertex>(v % m));
    }
    VertexSet product(n * m);
    for (Vertex a : rows.members())
        for (Vertex b : cols.members())
            product.insert(product_vertex(m, a, b));
    if (product != s)
        return std::nullopt;
    return std::pair{std::move(rows), std::move(cols)};
}

// --- ladders --------------------------------------------------------------------

LinearRecurrence grid_p2_recurrence() {
    LinearRecurrence rec;
    rec.taps = {{1, 1}, {2, 3}, {3, 2}};
    rec.initial_terms = {{1, 2}, {2, 6}, {3, 16}};
    rec.first_recurrent_index = 4;
    return rec;
}

BigCount count_grid_p2(std::size_t n) {
    if (n == 0)
        throw InvalidParameter("ladder length n must be at least 1");
    return eval_recurrence(grid_p2_recurrence(), static_cast<std::int64_t>(n));
}

namespace {

constexpr std::size_t max_ladder = 31;

using Masks = std::vector<std::uint64_t>;

std::uint64_t bit_v(std::size_t i) { return std::uint64_t{1} << ladder_v(i); }
std::uint64_t bit_u(std::size_t i) { return std::uint64_t{1} << ladder_u(i); }

struct MaskFamilies {
    Masks one, two, three;
};

// Extends the convex sets of the three shorter ladders to P_n □ P_2 (n >= 4).
MaskFamilies extend_ladder(std::size_t n, const Masks& minus_one, const Masks& minus_two,
                           const Masks& minus_three) {
    MaskFamilies f;
    const auto vn = bit_v(n), un = bit_u(n);
    const auto v1 = bit_v(n - 1), u1 = bit_u(n - 1);
    const auto v2 = bit_v(n - 2), u2 = bit_u(n - 2);
    const auto v3 = bit_v(n - 3), u3 = bit_u(n - 3);

    f.one.reserve(minus_one.size());
    for (auto s : minus_one)
        f.one.push_back((s & (v1 | u1)) ? (s | vn | un) : s);

    f.two.reserve(3 * minus_two.size());
    for (auto s : minus_two) {
        const bool has_v2 = s & v2, has_u2 = s & u2;
        if (has_v2 && has_u2) {
            f.two.insert(f.two.end(), {s, s | v1, s | u1});
        } else if (has_v2) {
            f.two.insert(f.two.end(), {s | vn, s | v1, s | u1});
        } else if (has_u2) {
            f.two.insert(f.two.end(), {s | v1, s | u1, s | un});
        } else {
            f.two.insert(f.two.end(), {s | vn, s | un});
            const bool has_v3 = s & v3, has_u3 = s & u3;
            if (!has_v3 && !has_u3)
                f.two.push_back(s | vn | un);
            else if (has_v3 && !has_u3)
                f.two.push_back(s | v1);
            else if (!has_v3 && has_u3)
                f.two.push_back(s | u1);
            else
                throw InternalError("P_" + std::to_string(n - 2) +
                                    " x P_2 set holds both row n-3 vertices but neither row n-2 vertex");
        }
    }

    f.three.reserve(2 * minus_three.size());
    for (auto s : minus_three) {
        if (s & (v3 | u3))
            f.three.insert(f.three.end(), {s | v2 | vn, s | u2 | un});
        else
            f.three.insert(f.three.end(), {s | v1, s | u1});
    }
    return f;
}

void check_ladder_step(std::size_t n, const MaskFamilies& f, const Masks& minus_one,
                       const Masks& minus_two, const Masks& minus_three, Masks& merged) {
    const std::string where = "ladder generation at n=" + std::to_string(n) + ": ";
    if (f.one.size() != minus_one.size() || f.two.size() != 3 * minus_two.size() ||
        f.three.size() != 2 * minus_three.size())
        throw InternalError(where + "family sizes are not 1x, 3x, 2x");

    merged.clear();
    merged.reserve(f.one.size() + f.two.size() + f.three.size());
    merged.insert(merged.end(), f.one.begin(), f.one.end());
    merged.insert(merged.end(), f.two.begin(), f.two.end());
    merged.insert(merged.end(), f.three.begin(), f.three.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw InternalError(where + "families overlap");

    if (BigCount(merged.size()) != count_grid_p2(n))
        throw InternalError(where + "family total differs from the recurrence");

    const detail::ConvexityTest convex(make_grid(n, 2));
    for (auto s : merged)
        if (!convex(s))
            throw InternalError(where + "generated a set that is not digitally convex");
}

struct LadderState {
    Masks minus_three, minus_two, minus_one;
    MaskFamilies last;
};

// Runs the generation up to n and returns the convex sets of the last three ladders.
LadderState build_ladders(std::size_t n) {
    LadderState st;
    const EnumerationBudget base_budget;
    st.minus_three = enumerate_digitally_convex_masks(make_grid(1, 2), base_budget);
    st.minus_two = enumerate_digitally_convex_masks(make_grid(2, 2), base_budget);
    st.minus_one = enumerate_digitally_convex_masks(make_grid(3, 2), base_budget);
    Masks merged;
    for (std::size_t k = 4; k <= n; ++k) {
        st.last = extend_ladder(k, st.minus_one, st.minus_two, st.minus_three);
        check_ladder_step(k, st.last, st.minus_one, st.minus_two, st.minus_three, merged);
        st.minus_three = std::move(st.minus_two);
        st.minus_two = std::move(st.minus_one);
        st.minus_one = std::move(merged);
        merged = {};
    }
    return st;
}

std::vector<VertexSet> to_sets(std::size_t order, const Masks& masks) {
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (auto m : masks)
        out.push_back(VertexSet::from_mask(order, m));
    return out;
}

void check_ladder_length(std::size_t n, std::size_t lowest) {
    if (n < lowest || n > max_ladder)
        throw InvalidParameter("ladder length must be in [" + std::to_string(lowest) + ", " +
                               std::to_string(max_ladder) + "]");
}

} // namespace

GridP2Families generate_grid_p2_families(std::size_t n) {
    check_ladder_length(n, 4);
    auto st = build_ladders(n);
    return {to_sets(2 * n, st.last.one), to_sets(2 * n, st.last.two), to_sets(2 * n, st.last.three)};
}

std::vector<VertexSet> generate_grid_p2(std::size_t n) {
    check_ladder_length(n, 1);
    if (n <= 3)
        return enumerate_digitally_convex(make_grid(n, 2), EnumerationBudget{});
    return to_sets(2 * n, build_ladders(n).minus_one);
}

// --- grids and arrays -----------------------------------------------------------

BinaryArray min_transform(const BinaryArray& a) {
    BinaryArray out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            bool v = a.at(i, j);
            if (i > 0) v = v && a.at(i - 1, j);
            if (i + 1 < a.rows()) v = v && a.at(i + 1, j);
            if (j > 0) v = v && a.at(i, j - 1);
            if (j + 1 < a.cols()) v = v && a.at(i, j + 1);
            out.set(i, j, v);
        }
    }
    return out;
}

BinaryArray max_transform(const BinaryArray& a) {
    BinaryArray out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            bool v = a.at(i, j);
            if (i > 0) v = v || a.at(i - 1, j);
            if (i + 1 < a.rows()) v = v || a.at(i + 1, j);
            if (j > 0) v = v || a.at(i, j - 1);
            if (j + 1 < a.cols()) v = v || a.at(i, j + 1);
            out.set(i, j, v);
        }
    }
    return out;
}

namespace {

// min_transform on the row-major mask form; out-of-grid neighbours count as 1.
struct MaskErosion {
    MaskErosion(std::size_t n, std::size_t m) : shift(static_cast<unsigned>(m)) {
        full = detail::low_bits(static_cast<unsigned>(n * m));
        for (std::size_t i = 0; i < n; ++i) {
            first_col |= std::uint64_t{1} << (i * m);
            last_col |= std::uint64_t{1} << (i * m + m - 1);
        }
        first_row = detail::low_bits(shift);
        last_row = first_row << ((n - 1) * m);
    }

    std::uint64_t operator()(std::uint64_t a) const {
        return a & ((a >> 1) | last_col) & ((a << 1) | first_col) & ((a >> shift) | last_row) &
               ((a << shift) | first_row) & full;
    }

    unsigned shift;
    std::uint64_t full = 0, first_col = 0, last_col = 0, first_row = 0, last_row = 0;
};

class ImageBitmap {
public:
    explicit ImageBitmap(std::uint64_t universe) : words_((universe + 63) / 64) {
        for (auto& w : words_)
            w.store(0, std::memory_order_relaxed);
    }
    void mark(std::uint64_t x) { words_[x / 64].fetch_or(std::uint64_t{1} << (x % 64), std::memory_order_relaxed); }
    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (const auto& w : words_)
            c += static_cast<std::uint64_t>(std::popcount(w.load(std::memory_order_relaxed)));
        return c;
    }
    std::vector<std::uint64_t> members() const {
        std::vector<std::uint64_t> out;
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (auto w = words_[i].load(std::memory_order_relaxed); w != 0; w &= w - 1)
                out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
        return out;
    }

private:
    std::vector<std::atomic<std::uint64_t>> words_;
};

std::unique_ptr<ImageBitmap> sweep_images(std::size_t n, std::size_t m, const EnumerationBudget& budget) {
    if (n == 0 || m == 0)
        throw InvalidParameter("grid dimensions must be at least 1");
    budget.require(n * m >= 64 ? 64u : static_cast<unsigned>(n * m));
    const std::uint64_t total = std::uint64_t{1} << (n * m);
    auto images = std::make_unique<ImageBitmap>(total);
    const MaskErosion erode(n, m);
    detail::for_blocks(total, budget.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t a = begin; a < end; ++a)
            images->mark(erode(a));
    });
    return images;
}

} // namespace

std::vector<std::uint64_t> distinct_array_images(std::size_t n, std::size_t m, const EnumerationBudget& budget) {
    return sweep_images(n, m, budget)->members();
}

BigCount count_grid_via_arrays(std::size_t n, std::size_t m, const EnumerationBudget& budget) {
    return BigCount(sweep_images(n, m, budget)->count());
}

BinaryArray indicator_array(std::size_t n, std::size_t m, const VertexSet& s) {
    if (s.universe_order() != n * m)
        throw InvalidParameter("vertex set universe does not match n * m");
    BinaryArray b(n, m);
    for (Vertex v : s.members())
        b.set(v / m, v % m, true);
    return b;
}

VertexSet set_from_array(const BinaryArray& astar) {
    const std::size_t n = astar.rows(), m = astar.cols();
    VertexSet s(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (astar.at(i, j))
                s.insert(product_vertex(m, static_cast<Vertex>(i), static_cast<Vertex>(j)));
    if (!is_digitally_convex(make_grid(n, m), s))
        throw DomainError("array " + astar.to_json() + " is not the image of any array");
    return s;
}

BinaryArray array_from_set(std::size_t n, std::size_t m, const VertexSet& s) {
    if (n == 0 || m == 0)
        throw InvalidParameter("grid dimensions must be at least 1");
    if (!is_digitally_convex(make_grid(n, m), s))
        throw DomainError("set " + s.to_json() + " is not digitally convex in P_" + std::to_string(n) +
                          " x P_" + std::to_string(m));
    return max_transform(indicator_array(n, m, s));
}

// --- maximal independent sets ----------------------------------------------------

BigCount count_maximal_independent_sets(const Graph& g, const EnumerationBudget& budget) {
    budget.require(static_cast<unsigned>(std::min<std::size_t>(g.order(), 64)));
    const auto rows = detail::open_row_masks(g);
    const detail::UnionTable open(rows);
    const std::uint64_t full = detail::low_bits(static_cast<unsigned>(g.order()));
    return BigCount(detail::count_masks(std::uint64_t{1} << g.order(), budget.workers, [&](std::uint64_t s) {
        const std::uint64_t nb = open(s);
        return (s & nb) == 0 && (s | nb) == full;
    }));
}

BigCount count_mis_grid3(std::size_t n, std::size_t m, const EnumerationBudget& budget) {
    if (n == 0 || m == 0)
        throw InvalidParameter("grid dimensions must be at least 1");
    budget.require(2 * n * m >= 64 ? 64u : static_cast<unsigned>(2 * n * m));
    return count_maximal_independent_sets(cartesian_product(make_grid(n, m), make_path(2)), budget);
}

} // namespace digicon
