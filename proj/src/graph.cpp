#include "digicon/graph.hpp"

#include "digicon/errors.hpp"

#include <algorithm>
#include <deque>

namespace digicon {

Graph::Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges, GraphFamily family)
    : adjacency_(order), family_(family) {
    for (auto [u, v] : edges) {
        if (u >= order || v >= order)
            throw InvalidParameter("edge endpoint outside [0, " + std::to_string(order) + ")");
        if (u == v)
            throw InvalidParameter("loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    closed_rows_.reserve(order);
    for (Vertex v = 0; v < order; ++v) {
        auto& adj = adjacency_[v];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        edge_count_ += adj.size();
        VertexSet row(order, adj);
        row.insert(v);
        closed_rows_.push_back(std::move(row));
    }
    edge_count_ /= 2;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= order())
        throw InvalidParameter("vertex " + std::to_string(v) + " outside graph of order " +
                               std::to_string(order()));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto adj = neighbors(u);
    check_vertex(v);
    return std::binary_search(adj.begin(), adj.end(), v);
}

const VertexSet& Graph::closed_row(Vertex v) const {
    check_vertex(v);
    return closed_rows_[v];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::to_json() const {
    std::string out = "{\"order\":" + std::to_string(order()) + ",\"edges\":[";
    bool first = true;
    for (auto [u, v] : edges()) {
        if (!first)
            out += ',';
        out += '[' + std::to_string(u) + ',' + std::to_string(v) + ']';
        first = false;
    }
    out += "]}";
    return out;
}

std::vector<std::optional<std::size_t>> Graph::distances_from(Vertex source) const {
    check_vertex(source);
    std::vector<std::optional<std::size_t>> dist(order());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : adjacency_[x]) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

Graph make_path(std::size_t n) {
    if (n == 0)
        throw InvalidParameter("path order must be at least 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges, GraphFamily::path);
}

Graph make_cycle(std::size_t n) {
    if (n < 3)
        throw InvalidParameter("cycle order must be at least 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges, GraphFamily::cycle);
}

Graph make_complete(std::size_t n) {
    if (n == 0)
        throw InvalidParameter("complete graph order must be at least 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges, GraphFamily::complete);
}

Graph graph_power(const Graph& g, std::size_t d) {
    if (d == 0)
        throw InvalidParameter("graph power exponent must be at least 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex s = 0; s < g.order(); ++s) {
        auto dist = g.distances_from(s);
        for (Vertex t = s + 1; t < g.order(); ++t)
            if (dist[t] && *dist[t] <= d)
                edges.emplace_back(s, t);
    }
    return Graph(g.order(), edges, GraphFamily::power);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw InvalidParameter("cartesian product factors must be nonempty");
    const std::size_t hn = h.order();
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(g.edge_count() * hn + h.edge_count() * g.order());
    for (Vertex a = 0; a < g.order(); ++a) {
        for (auto [x, y] : h.edges())
            edges.emplace_back(product_vertex(hn, a, x), product_vertex(hn, a, y));
    }
    for (auto [a, b] : g.edges()) {
        for (Vertex x = 0; x < hn; ++x)
            edges.emplace_back(product_vertex(hn, a, x), product_vertex(hn, b, x));
    }
    return Graph(g.order() * hn, edges, GraphFamily::product);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.closed_row(v); }

VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& s) {
    if (s.universe_order() != g.order())
        throw InvalidParameter("vertex set universe does not match graph order");
    VertexSet out(g.order());
    for (Vertex v : s.members())
        out |= g.closed_row(v);
    return out;
}

} // namespace digicon
