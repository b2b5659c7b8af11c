#include "tvb/independence_complex.hpp"

#include <algorithm>

namespace tvb {

IndependenceComplex::IndependenceComplex(Graph base)
    : base_(std::move(base)), excluded_(base_.vertex_count()) {}

IndependenceComplex::IndependenceComplex(Graph base, VertexSet excluded)
    : base_(std::move(base)), excluded_(std::move(excluded)) {
    if (excluded_.size() != static_cast<std::size_t>(base_.vertex_count()))
        throw std::invalid_argument("excluded-set size does not match vertex count");
}

VertexSet IndependenceComplex::remaining() const { return ~excluded_; }

std::size_t IndependenceComplex::remaining_count() const {
    return base_.vertex_count() - excluded_.count();
}

IndependenceComplex IndependenceComplex::without(const VertexSet& more_excluded) const {
    if (more_excluded.size() != excluded_.size())
        throw std::invalid_argument("excluded-set size does not match vertex count");
    return IndependenceComplex(base_, excluded_ | more_excluded);
}

IndependenceComplex IndependenceComplex::without_vertex(int v) const {
    if (v < 0 || v >= base_.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    VertexSet e = excluded_;
    e.set(v);
    return IndependenceComplex(base_, std::move(e));
}

bool IndependenceComplex::is_face(const std::vector<int>& verts) const {
    const int n = base_.vertex_count();
    VertexSet seen(n);
    for (int v : verts) {
        if (v < 0 || v >= n) return false;
        if (excluded_.test(v) || seen.test(v)) return false;
        if (seen.intersects(base_.neighbors(v))) return false;
        seen.set(v);
    }
    return true;
}

std::size_t IndependenceComplex::for_each_face(
    int dim, const std::function<bool(const std::vector<int>&)>& cb,
    const FaceBudget& budget) const {
    if (dim < -1) throw std::invalid_argument("dimension below -1");
    if (budget.deadline && std::chrono::steady_clock::now() > *budget.deadline)
        throw BudgetError("time budget exceeded while streaming faces", dim, 0);
    std::size_t yielded = 0;
    std::vector<int> face;
    if (dim == -1) {
        cb(face);
        return 1;
    }
    const int n = base_.vertex_count();
    const std::size_t target = static_cast<std::size_t>(dim) + 1;
    face.reserve(target);
    // blocked[t] = excluded vertices plus neighbors of the first t chosen
    std::vector<VertexSet> blocked(target + 1, VertexSet(n));
    blocked[0] = excluded_;

    bool stop = false;
    std::size_t since_clock_check = 0;
    auto rec = [&](auto&& self, int start) -> void {
        if (stop) return;
        if (face.size() == target) {
            ++yielded;
            if (yielded > budget.faces_per_dim)
                throw BudgetError("face budget exceeded in dimension " + std::to_string(dim),
                                  dim, yielded);
            if (budget.deadline && ++since_clock_check % 1024 == 0 &&
                std::chrono::steady_clock::now() > *budget.deadline)
                throw BudgetError("time budget exceeded while streaming faces", dim, yielded);
            if (!cb(face)) stop = true;
            return;
        }
        const std::size_t depth = face.size();
        const int slack = n - static_cast<int>(target - depth);
        for (int v = start; v <= slack && !stop; ++v) {
            if (blocked[depth].test(v)) continue;
            face.push_back(v);
            blocked[depth + 1] = blocked[depth] | base_.neighbors(v);
            self(self, v + 1);
            face.pop_back();
        }
    };
    rec(rec, 0);
    return yielded;
}

std::size_t IndependenceComplex::count_faces(int dim, const FaceBudget& budget) const {
    return for_each_face(dim, [](const std::vector<int>&) { return true; }, budget);
}

std::vector<std::vector<int>> IndependenceComplex::faces(int dim,
                                                         const FaceBudget& budget) const {
    std::vector<std::vector<int>> out;
    for_each_face(dim,
                  [&](const std::vector<int>& f) {
                      out.push_back(f);
                      return true;
                  },
                  budget);
    return out;
}

}  // namespace tvb
