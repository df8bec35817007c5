#pragma once

// Bitmask kernels shared by the brute-force searches. Graphs here have at
// most 63 vertices; bit v of a mask stands for vertex v.

#include "digicon/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

namespace digicon::detail {

inline std::uint64_t low_bits(unsigned n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::vector<std::uint64_t> closed_row_masks(const Graph& g) {
    std::vector<std::uint64_t> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        rows[v] = g.closed_row(v).to_mask();
    return rows;
}

inline std::vector<std::uint64_t> open_row_masks(const Graph& g) {
    auto rows = closed_row_masks(g);
    for (Vertex v = 0; v < g.order(); ++v)
        rows[v] &= ~(std::uint64_t{1} << v);
    return rows;
}

/// Union of rows[v] over the members of a mask, via per-chunk lookup tables.
class UnionTable {
public:
    explicit UnionTable(std::span<const std::uint64_t> rows) {
        const auto n = static_cast<unsigned>(rows.size());
        const unsigned chunks = std::max(1u, (n + 15) / 16);
        width_ = std::max(1u, (n + chunks - 1) / chunks);
        for (unsigned base = 0; base < n; base += width_) {
            const unsigned w = std::min(width_, n - base);
            std::vector<std::uint64_t> table(std::size_t{1} << w, 0);
            for (std::uint64_t x = 1; x < table.size(); ++x)
                table[x] = table[x & (x - 1)] | rows[base + std::countr_zero(x)];
            tables_.push_back(std::move(table));
        }
        chunk_mask_ = low_bits(width_);
    }

    std::uint64_t operator()(std::uint64_t mask) const {
        std::uint64_t out = 0;
        for (const auto& t : tables_) {
            out |= t[mask & chunk_mask_];
            mask >>= width_;
        }
        return out;
    }

private:
    unsigned width_ = 1;
    std::uint64_t chunk_mask_ = 1;
    std::vector<std::vector<std::uint64_t>> tables_;
};

/// Digital convexity of a mask: every vertex outside S must touch V - N[S].
struct ConvexityTest {
    explicit ConvexityTest(const Graph& g)
        : rows(closed_row_masks(g)), table(rows), full(low_bits(static_cast<unsigned>(g.order()))) {}

    bool operator()(std::uint64_t s) const {
        const std::uint64_t uncovered = full & ~table(s);
        return (full & ~s & ~table(uncovered)) == 0;
    }

    std::vector<std::uint64_t> rows;
    UnionTable table;
    std::uint64_t full;
};

/**
 * Splits [0, total) into `workers` contiguous blocks and runs
 * fn(block, begin, end) for each, concurrently when workers > 1.
 * Exceptions from any block are rethrown on the calling thread.
 */
template <class Fn>
void for_blocks(std::uint64_t total, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total)));
    if (workers == 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t step = total / workers;
    const std::uint64_t extra = total % workers;
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::uint64_t begin = 0;
    for (unsigned b = 0; b < workers; ++b) {
        const std::uint64_t end = begin + step + (b < extra ? 1 : 0);
        threads.emplace_back([&, b, begin, end] {
            try {
                fn(b, begin, end);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

/// Masks in [0, total) accepted by `keep`, in increasing order, for any worker count.
template <class Pred>
std::vector<std::uint64_t> filter_masks(std::uint64_t total, unsigned workers, const Pred& keep) {
    const unsigned blocks = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total)));
    std::vector<std::vector<std::uint64_t>> parts(blocks);
    for_blocks(total, blocks, [&](unsigned b, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t m = begin; m < end; ++m)
            if (keep(m))
                parts[b].push_back(m);
    });
    std::vector<std::uint64_t> out;
    std::size_t n = 0;
    for (const auto& p : parts)
        n += p.size();
    out.reserve(n);
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

template <class Pred>
std::uint64_t count_masks(std::uint64_t total, unsigned workers, const Pred& keep) {
    const unsigned blocks = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total)));
    std::vector<std::uint64_t> counts(blocks, 0);
    for_blocks(total, blocks, [&](unsigned b, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t c = 0;
        for (std::uint64_t m = begin; m < end; ++m)
            c += keep(m) ? 1 : 0;
        counts[b] = c;
    });
    std::uint64_t sum = 0;
    for (auto c : counts)
        sum += c;
    return sum;
}

} // namespace digicon::detail
