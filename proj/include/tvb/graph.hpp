// Finite simple graphs with bitset adjacency, neighborhoods, and the
// Cartesian product with a complete graph.

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tvb {

using VertexSet = boost::dynamic_bitset<>;

std::vector<int> set_to_vector(const VertexSet& s);
VertexSet vector_to_set(std::size_t n, const std::vector<int>& verts);

/// Finite simple graph on vertices 0..n-1. Immutable by convention once
/// built: every operation in the library takes `const Graph&`.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::string> labels);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Rejects self-loops, duplicate edges, and out-of-range endpoints.
    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const;
    const VertexSet& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;

    /// Edges as sorted pairs (u < v), lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int v, std::string label);
    std::string label(int v) const;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// Vertex (base, level) of G x K_q; levels run 1..q. A column is all
/// levels of one base vertex and induces a clique in the product.
struct ProductVertex {
    int base = 0;
    int level = 1;

    friend bool operator==(const ProductVertex& a, const ProductVertex& b) {
        return a.base == b.base && a.level == b.level;
    }
    friend bool operator<(const ProductVertex& a, const ProductVertex& b) {
        return a.base != b.base ? a.base < b.base : a.level < b.level;
    }
};

/// Dense index of (base, level) in the product graph: columns are contiguous.
int product_index(const ProductVertex& pv, int q);
ProductVertex product_vertex_at(int index, int q);

/// N(v): vertices adjacent to v. v itself is never in the result.
VertexSet neighborhood(const Graph& g, int v);

/// N^2(v): vertices at graph distance exactly two from v.
VertexSet second_neighborhood(const Graph& g, int v);

/// G x K_q with n*q vertices: (u,i)~(v,i) iff u~v, and (u,i)~(u,j) for i != j.
/// deg(v,i) = deg_G(v) + q - 1. Throws std::invalid_argument for q < 1.
Graph cartesian_product_complete(const Graph& g, int q);

/// The classical 46-vertex cubic graph, built as three nested layers:
/// an outer 15-cycle, a middle 21-cycle, an inner 9-cycle, and a central
/// vertex joined to every third inner vertex. Each outer and inner vertex
/// sends one spoke to the middle cycle, which makes the graph 3-regular
/// with 69 edges. Vertex labels record the layer (O*, M*, I*, C).
Graph grinberg_graph();

}  // namespace tvb
