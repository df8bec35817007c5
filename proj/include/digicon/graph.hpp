#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace digicon {

using Vertex = std::uint32_t;

/**
 * A subset of the vertices {0, ..., universe_order - 1}, stored as a bit vector.
 *
 * Ordering compares the sets as the integers sum(2^v), so sorting a
 * collection of sets reproduces the brute-force enumeration order.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe_order);
    VertexSet(std::size_t universe_order, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe_order);
    /// Bit v of `mask` selects vertex v. Requires universe_order <= 64.
    static VertexSet from_mask(std::size_t universe_order, std::uint64_t mask);

    std::size_t universe_order() const noexcept { return universe_; }
    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const noexcept;
    bool empty() const noexcept;
    std::vector<Vertex> members() const;
    /// Requires universe_order <= 64.
    std::uint64_t to_mask() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

    /// JSON array of 0-based members, ascending.
    std::string to_json() const;

private:
    void check_vertex(Vertex v) const;
    void check_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class GraphFamily { none, path, cycle, complete, power, product };

/**
 * Simple undirected graph on vertices 0..order-1. Immutable after
 * construction; adjacency lists are sorted and closed neighbourhoods are
 * precomputed as bit rows.
 */
class Graph {
public:
    Graph() = default;
    /// Throws InvalidParameter on loops or out-of-range endpoints; duplicate edges are merged.
    Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges,
          GraphFamily family = GraphFamily::none);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    GraphFamily family() const noexcept { return family_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// N[v] as a bit row; borrowed from the graph.
    const VertexSet& closed_row(Vertex v) const;

    /// Edges with u < v, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// {"order": n, "edges": [[u,v], ...]}
    std::string to_json() const;

    /// BFS distances from `source`; unreachable vertices get std::nullopt.
    std::vector<std::optional<std::size_t>> distances_from(Vertex source) const;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> closed_rows_;
    std::size_t edge_count_ = 0;
    GraphFamily family_ = GraphFamily::none;
};

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);

/// G^d: u ~ v iff 1 <= dist_G(u, v) <= d. Vertices in different components stay non-adjacent.
Graph graph_power(const Graph& g, std::size_t d);

/// G □ H with (g, h) -> g * |V(H)| + h.
Graph cartesian_product(const Graph& g, const Graph& h);

inline Vertex product_vertex(std::size_t h_order, Vertex g, Vertex h) {
    return static_cast<Vertex>(g * h_order + h);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& s);

} // namespace digicon
