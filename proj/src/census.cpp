#include "tvb/census.hpp"

#include "tvb/criteria.hpp"

#include <cmath>

#include <algorithm>

namespace tvb {

namespace {

// Completion search: the smallest unsaturated vertex picks its remaining
// partners in ascending order, so every labeled graph appears exactly
// once. `allowed` filters candidate edges during growth; `accept` filters
// finished graphs on their raw adjacency.
struct RegularEnumerator {
    int n = 0;
    std::vector<VertexSet> adj;
    std::vector<int> deficit;
    std::vector<std::pair<int, int>> edges;
    bool complement = false;
    const std::function<bool(int, int)>* allowed = nullptr;
    const std::function<bool(const std::vector<VertexSet>&)>* accept = nullptr;
    const std::function<bool(const Graph&)>* cb = nullptr;
    std::uint64_t visited = 0;
    bool stop = false;

    void emit() {
        if (accept && !(*accept)(adj)) return;
        ++visited;
        if (!cb) return;
        Graph g(n);
        if (complement) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!adj[u].test(v)) g.add_edge(u, v);
        } else {
            for (auto [u, v] : edges) g.add_edge(u, v);
        }
        if (!(*cb)(g)) stop = true;
    }

    void next_vertex() {
        int v = 0;
        while (v < n && deficit[v] == 0) ++v;
        if (v == n) {
            emit();
            return;
        }
        extend(v, v + 1);
    }

    void extend(int v, int min_u) {
        if (stop) return;
        if (deficit[v] == 0) {
            next_vertex();
            return;
        }
        int eligible = 0;
        for (int u = min_u; u < n; ++u)
            if (deficit[u] > 0 && !adj[v].test(u) && (!allowed || (*allowed)(v, u))) ++eligible;
        if (eligible < deficit[v]) return;
        for (int u = min_u; u < n && !stop; ++u) {
            if (deficit[u] == 0 || adj[v].test(u)) continue;
            if (allowed && !(*allowed)(v, u)) continue;
            adj[v].set(u);
            adj[u].set(v);
            --deficit[v];
            --deficit[u];
            edges.emplace_back(v, u);
            extend(v, u + 1);
            edges.pop_back();
            ++deficit[u];
            ++deficit[v];
            adj[u].reset(v);
            adj[v].reset(u);
        }
    }
};

struct EnumPlan {
    bool empty = false;      // no D-regular graph exists at all
    int effective_d = 0;     // degree actually enumerated
    bool complement = false;  // emitted graphs are complements
};

EnumPlan plan_enumeration(int N, int D, const RegularGraphOptions& opt) {
    if (N < 0 || D < 0) throw std::invalid_argument("N and D must be nonnegative");
    if (N > opt.exhaustive_bound)
        throw std::invalid_argument("N exceeds the exhaustive census bound");
    EnumPlan plan;
    if (D >= N || (N % 2 && D % 2)) {
        plan.empty = true;
        return plan;
    }
    plan.effective_d = D;
    if (2 * D > N - 1) {
        plan.effective_d = N - 1 - D;
        plan.complement = true;
    }
    return plan;
}

std::uint64_t run_enumeration(int N, const EnumPlan& plan,
                              const std::function<bool(int, int)>* allowed,
                              const std::function<bool(const std::vector<VertexSet>&)>* accept,
                              const std::function<bool(const Graph&)>* cb) {
    if (plan.empty) return 0;
    RegularEnumerator e;
    e.n = N;
    e.adj.assign(N, VertexSet(N));
    e.deficit.assign(N, plan.effective_d);
    e.complement = plan.complement;
    e.allowed = allowed;
    e.accept = accept;
    e.cb = cb;
    e.next_vertex();
    return e.visited;
}

}  // namespace

std::uint64_t count_regular_graphs(int N, int D, const RegularGraphOptions& options) {
    return run_enumeration(N, plan_enumeration(N, D, options), nullptr, nullptr, nullptr);
}

std::uint64_t for_each_regular_graph(int N, int D, const std::function<bool(const Graph&)>& cb,
                                     const RegularGraphOptions& options) {
    return run_enumeration(N, plan_enumeration(N, D, options), nullptr, nullptr, &cb);
}

namespace {

std::uint64_t proper_count(int N, const EnumPlan& plan, const std::vector<int>& color) {
    if (plan.empty) return 0;
    if (!plan.complement) {
        std::function<bool(int, int)> allowed = [&](int u, int v) {
            return color[u] != color[v];
        };
        return run_enumeration(N, plan, &allowed, nullptr, nullptr);
    }
    // Proper in the complement: every same-class pair must be an edge of
    // the enumerated graph.
    std::function<bool(const std::vector<VertexSet>&)> accept =
        [&](const std::vector<VertexSet>& adj) {
            for (int u = 0; u < N; ++u)
                for (int v = u + 1; v < N; ++v)
                    if (color[u] == color[v] && !adj[u].test(v)) return false;
            return true;
        };
    return run_enumeration(N, plan, nullptr, &accept, nullptr);
}

}  // namespace

ColoredCensus max_colored_regular_graphs(int N, int D, int q,
                                         const RegularGraphOptions& options) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    EnumPlan plan = plan_enumeration(N, D, options);
    ColoredCensus best;
    best.coloring.assign(N, 0);
    if (plan.empty || N == 0) return best;
    std::vector<int> color(N, 0);
    // Counts depend only on the induced class partition, so colorings are
    // walked as restricted growth strings over at most q classes.
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == N) {
            std::uint64_t c = proper_count(N, plan, color);
            if (c > best.count) {
                best.count = c;
                best.coloring = color;
            }
            return;
        }
        const int top = std::min(used, q - 1);
        for (int c = 0; c <= top; ++c) {
            color[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

ColoredCensus max_colored_regular_graphs_naive(int N, int D, int q,
                                               const RegularGraphOptions& options) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    double total = std::pow(static_cast<double>(q), N);
    if (total > 1e7) throw std::invalid_argument("naive coloring sweep too large");
    EnumPlan plan = plan_enumeration(N, D, options);
    ColoredCensus best;
    best.coloring.assign(N, 0);
    if (plan.empty || N == 0) return best;
    std::vector<int> color(N, 0);
    for (;;) {
        std::uint64_t c = proper_count(N, plan, color);
        if (c > best.count) {
            best.count = c;
            best.coloring = color;
        }
        int i = 0;
        while (i < N && ++color[i] == q) color[i++] = 0;
        if (i == N) break;
    }
    return best;
}

RegularGraphCensus regular_graph_census(int N, int D, int q,
                                        const RegularGraphOptions& options) {
    RegularGraphCensus out{N, D, q, 0, 0};
    out.a = count_regular_graphs(N, D, options);
    if (out.a > 0) out.b = max_colored_regular_graphs(N, D, q, options).count;
    return out;
}

CensusReport census_lower_bound(const PointConfig& cfg, int q, int D,
                                const SearchOptions& search,
                                const RegularGraphOptions& options) {
    validate_config(cfg);
    if (!prime_power_decomposition(q).is_prime_power)
        throw std::invalid_argument("q must be a prime power");
    if (D < 0 || static_cast<std::int64_t>(D) * (D + 1) >= q)
        throw std::invalid_argument("need D(D+1) < q");

    CensusReport report;
    const int N = cfg.point_count();
    const int expected = (cfg.dimension + 1) * (q - 1) + 1;
    if (N != expected)
        report.notes.push_back("point count " + std::to_string(N) +
                               " differs from (d+1)(q-1)+1 = " + std::to_string(expected));

    report.census = RegularGraphCensus{N, D, q, count_regular_graphs(N, D, options), 0};
    if (report.census.a == 0) {
        report.bound = 0;
        report.notes.push_back(
            "no labeled " + std::to_string(D) + "-regular graph on " + std::to_string(N) +
            " vertices (parity or degeneracy); the bound degenerates to plain existence");
        if (D + 1 < N) {
            report.related.push_back(regular_graph_census(N, D + 1, q, options));
            if (static_cast<std::int64_t>(D + 1) * (D + 2) >= q)
                report.notes.push_back("the attached D+1 census is informational only: D(D+1) < q fails there");
        }
    } else {
        ColoredCensus colored = max_colored_regular_graphs(N, D, q, options);
        report.census.b = colored.count;
        report.best_coloring = colored.coloring;
        if (colored.count == 0)
            throw FalsificationError(
                "a D-regular graph exists but no q-coloring admits one; greedy coloring forbids this");
        report.bound = (report.census.a + report.census.b - 1) / report.census.b;
    }

    PointConfig unconstrained = cfg;
    unconstrained.constraint_graph.reset();
    EnumerationOutcome en = enumerate_partitions(unconstrained, q, search);
    report.observed = en.partitions.size();
    report.conclusive = !en.truncated;
    report.holds = *report.observed >= report.bound;
    if (en.truncated)
        report.notes.push_back(report.holds
                                   ? "enumeration truncated; observed is a partial count that already meets the bound"
                                   : "enumeration truncated before the bound was met; inconclusive");
    return report;
}

}  // namespace tvb
