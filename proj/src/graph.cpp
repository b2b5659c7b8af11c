#include "tvb/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tvb {

std::vector<int> set_to_vector(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

VertexSet vector_to_set(std::size_t n, const std::vector<int>& verts) {
    VertexSet s(n);
    for (int v : verts) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return s;
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("label count does not match vertex count");
    adj_.assign(n_, VertexSet(n_));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adj_[u].test(v))
        throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    adj_[u].set(v);
    adj_[v].set(u);
    ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].count());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, static_cast<int>(adj_[v].count()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.assign(n_, "");
    labels_[v] = std::move(label);
}

std::string Graph::label(int v) const {
    check_vertex(v);
    return labels_.empty() ? "" : labels_[v];
}

int product_index(const ProductVertex& pv, int q) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (pv.level < 1 || pv.level > q)
        throw std::out_of_range("level " + std::to_string(pv.level) + " outside 1.." +
                                std::to_string(q));
    if (pv.base < 0) throw std::out_of_range("negative base vertex");
    return pv.base * q + (pv.level - 1);
}

ProductVertex product_vertex_at(int index, int q) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (index < 0) throw std::out_of_range("negative product index");
    return ProductVertex{index / q, index % q + 1};
}

VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

VertexSet second_neighborhood(const Graph& g, int v) {
    const VertexSet& nbrs = g.neighbors(v);
    VertexSet reach(g.vertex_count());
    for (auto u = nbrs.find_first(); u != VertexSet::npos; u = nbrs.find_next(u))
        reach |= g.neighbors(static_cast<int>(u));
    reach -= nbrs;
    reach.reset(v);
    return reach;
}

Graph cartesian_product_complete(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    const int n = g.vertex_count();
    Graph p(n * q);
    for (int v = 0; v < n; ++v) {
        for (int i = 1; i <= q; ++i) {
            std::ostringstream name;
            name << (g.label(v).empty() ? std::to_string(v) : g.label(v)) << "@" << i;
            p.set_label(product_index({v, i}, q), name.str());
        }
    }
    // column cliques
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= q; ++i)
            for (int j = i + 1; j <= q; ++j)
                p.add_edge(product_index({v, i}, q), product_index({v, j}, q));
    // one copy of G per level
    for (auto [u, v] : g.edge_list())
        for (int i = 1; i <= q; ++i)
            p.add_edge(product_index({u, i}, q), product_index({v, i}, q));
    return p;
}

Graph grinberg_graph() {
    const int outer = 15, middle = 21, inner = 9;
    auto O = [&](int i) { return i % outer; };
    auto M = [&](int i) { return outer + i % middle; };
    auto I = [&](int i) { return outer + middle + i % inner; };
    const int center = outer + middle + inner;

    Graph g(outer + middle + inner + 1);
    for (int i = 0; i < outer; ++i) g.set_label(O(i), "O" + std::to_string(i));
    for (int i = 0; i < middle; ++i) g.set_label(M(i), "M" + std::to_string(i));
    for (int i = 0; i < inner; ++i) g.set_label(I(i), "I" + std::to_string(i));
    g.set_label(center, "C");

    for (int i = 0; i < outer; ++i) g.add_edge(O(i), O(i + 1));
    for (int i = 0; i < middle; ++i) g.add_edge(M(i), M(i + 1));
    for (int i = 0; i < inner; ++i) g.add_edge(I(i), I(i + 1));
    for (int s = 0; s < 3; ++s) g.add_edge(center, I(3 * s));
    // Per sector: five outer spokes and two inner spokes, interleaved so
    // every middle vertex receives exactly one.
    for (int s = 0; s < 3; ++s) {
        const int spokes[7] = {O(5 * s),     O(5 * s + 1), I(3 * s + 1), O(5 * s + 2),
                               O(5 * s + 3), I(3 * s + 2), O(5 * s + 4)};
        for (int j = 0; j < 7; ++j) g.add_edge(M(7 * s + j), spokes[j]);
    }
    return g;
}

}  // namespace tvb
