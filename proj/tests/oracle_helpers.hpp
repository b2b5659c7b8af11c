#pragma once

// Independent reference implementations the tests check the library
// against. Deliberately naive: power-set filters, textbook elimination,
// BFS. Only usable at desk scale.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "tvb/graph.hpp"
#include "tvb/rational.hpp"

namespace oracle {

inline tvb::Graph path_graph(int n) {
    tvb::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline tvb::Graph cycle_graph(int n) {
    tvb::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline tvb::Graph complete_graph(int n) {
    tvb::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Graph on n labeled vertices from an edge bitmask over the C(n,2) pairs
// in lexicographic order. Mask 2^C(n,2)-1 is the complete graph.
inline tvb::Graph graph_from_mask(int n, std::uint64_t mask) {
    tvb::Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) g.add_edge(i, j);
    return g;
}

inline std::uint64_t graph_mask_count(int n) {
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

template <typename Cb>
void for_all_graphs(int n, Cb cb) {
    for (std::uint64_t mask = 0; mask < graph_mask_count(n); ++mask)
        cb(graph_from_mask(n, mask));
}

inline tvb::Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(edge_prob);
    tvb::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline std::vector<int> bfs_ball(const tvb::Graph& g, int start, int radius) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> frontier;
    dist[start] = 0;
    frontier.push(start);
    std::vector<int> ball;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        if (dist[v] > 0) ball.push_back(v);
        if (dist[v] == radius) continue;
        for (int u : tvb::set_to_vector(g.neighbors(v)))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                frontier.push(u);
            }
    }
    std::sort(ball.begin(), ball.end());
    return ball;
}

inline std::vector<int> bfs_sphere(const tvb::Graph& g, int start, int radius) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> frontier;
    dist[start] = 0;
    frontier.push(start);
    std::vector<int> sphere;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        if (dist[v] == radius) sphere.push_back(v);
        if (dist[v] >= radius) continue;
        for (int u : tvb::set_to_vector(g.neighbors(v)))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                frontier.push(u);
            }
    }
    std::sort(sphere.begin(), sphere.end());
    return sphere;
}

inline bool independent_in(const tvb::Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) return false;
    return true;
}

// Every independent set of size dim+1, as sorted vertex lists in
// lexicographic order, by filtering the power set.
inline std::vector<std::vector<int>> naive_faces(const tvb::Graph& g, int dim) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> faces;
    if (dim == -1) {
        faces.push_back({});
        return faces;
    }
    if (dim + 1 > n) return faces;
    std::vector<int> pick(dim + 1);
    for (int i = 0; i <= dim; ++i) pick[i] = i;
    while (true) {
        if (independent_in(g, pick)) faces.push_back(pick);
        int i = dim;
        while (i >= 0 && pick[i] == n - (dim + 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= dim; ++j) pick[j] = pick[j - 1] + 1;
    }
    return faces;
}

// Textbook row reduction mod p.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    auto norm = [&](std::int64_t x) { return ((x % p) + p) % p; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && norm(m[pivot][col]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        std::int64_t inv = 1, base = norm(m[rank][col]), e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::int64_t f = norm(m[r][col]) * inv % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = norm(m[r][c] - f * m[rank][c]);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int rank_rational(std::vector<std::vector<tvb::Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            tvb::Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Boundary matrix rows = (dim-1)-faces, columns = dim-faces, entries the
// usual alternating signs; dim 0 gives the augmentation row.
inline std::vector<std::vector<std::int64_t>> naive_boundary(const tvb::Graph& g, int dim) {
    auto rows_faces = naive_faces(g, dim - 1);
    auto cols_faces = naive_faces(g, dim);
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t i = 0; i < rows_faces.size(); ++i) row_index[rows_faces[i]] = i;
    std::vector<std::vector<std::int64_t>> m(rows_faces.size(),
                                             std::vector<std::int64_t>(cols_faces.size(), 0));
    for (std::size_t c = 0; c < cols_faces.size(); ++c) {
        for (int drop = 0; drop <= dim; ++drop) {
            std::vector<int> facet = cols_faces[c];
            facet.erase(facet.begin() + drop);
            m[row_index.at(facet)][c] = drop % 2 == 0 ? 1 : -1;
        }
    }
    return m;
}

// Reduced betti numbers through through_dim, straight from the rank
// formula on naively built matrices. p = 0 means rationals.
inline std::map<int, std::int64_t> naive_betti(const tvb::Graph& g, int through_dim,
                                               std::int64_t p) {
    std::map<int, int> rank_of;
    std::map<int, std::int64_t> face_count;
    for (int dim = 0; dim <= through_dim + 1; ++dim) {
        auto m = naive_boundary(g, dim);
        if (p == 0) {
            std::vector<std::vector<tvb::Rational>> q(m.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                q[i].assign(m[i].begin(), m[i].end());
            rank_of[dim] = rank_rational(std::move(q));
        } else {
            rank_of[dim] = rank_mod_p(std::move(m), p);
        }
    }
    for (int dim = -1; dim <= through_dim + 1; ++dim)
        face_count[dim] = static_cast<std::int64_t>(naive_faces(g, dim).size());
    std::map<int, std::int64_t> betti;
    betti[-1] = face_count[-1] - rank_of[0];
    for (int dim = 0; dim <= through_dim; ++dim)
        betti[dim] = face_count[dim] - rank_of[dim] - rank_of[dim + 1];
    return betti;
}

}  // namespace oracle
