// Independence complex of a graph, represented implicitly: faces are the
// independent sets of the base graph minus an excluded vertex set. Faces
// are streamed in lexicographic order, never stored wholesale.

#pragma once

#include "tvb/graph.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvb {

/// Raised when a face stream or an elimination would exceed its budget.
/// Loud failure; results are never silently truncated.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, int dim_, std::size_t seen)
        : std::runtime_error(what), dim(dim_), faces_seen(seen) {}
    int dim = 0;
    std::size_t faces_seen = 0;
};

struct FaceBudget {
    std::size_t faces_per_dim = std::size_t{1} << 20;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

class IndependenceComplex {
  public:
    explicit IndependenceComplex(Graph base);
    IndependenceComplex(Graph base, VertexSet excluded);

    const Graph& graph() const { return base_; }
    const VertexSet& excluded() const { return excluded_; }

    /// Vertices that remain in the complex.
    VertexSet remaining() const;
    std::size_t remaining_count() const;
    bool is_empty() const { return remaining_count() == 0; }

    /// A further exclusion on top of the current one; the base graph is shared.
    IndependenceComplex without(const VertexSet& more_excluded) const;
    IndependenceComplex without_vertex(int v) const;

    /// True iff the vertices form an independent set avoiding the excluded
    /// set. Vertices need not be sorted; duplicates are rejected.
    bool is_face(const std::vector<int>& verts) const;

    /// Streams every face of the given dimension (independent sets of size
    /// dim+1) exactly once, in lexicographic vertex order. dim = -1 yields
    /// the empty face, which every complex has. The callback may return
    /// false to stop early. Returns the number of faces yielded; throws
    /// BudgetError beyond budget.faces_per_dim or past the deadline.
    std::size_t for_each_face(int dim,
                              const std::function<bool(const std::vector<int>&)>& cb,
                              const FaceBudget& budget = {}) const;

    std::size_t count_faces(int dim, const FaceBudget& budget = {}) const;
    std::vector<std::vector<int>> faces(int dim, const FaceBudget& budget = {}) const;

  private:
    Graph base_;
    VertexSet excluded_;
};

}  // namespace tvb
