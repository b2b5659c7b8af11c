#pragma once

#include "tvb/tverberg.hpp"

namespace tvb {

struct RegularGraphOptions {
    int exhaustive_bound = 10;  // largest N enumerated exhaustively
};

// Exact count of labeled D-regular simple graphs on N vertices. Zero when
// N*D is odd or D >= N; throws when N exceeds the exhaustive bound.
std::uint64_t count_regular_graphs(int N, int D, const RegularGraphOptions& options = {});

// Visits every labeled D-regular graph on N vertices exactly once, until
// the callback returns false. Returns the number visited.
std::uint64_t for_each_regular_graph(int N, int D, const std::function<bool(const Graph&)>& cb,
                                     const RegularGraphOptions& options = {});

struct ColoredCensus {
    std::uint64_t count = 0;    // graphs proper under the best class assignment
    std::vector<int> coloring;  // one class in 0..q-1 per vertex
};

// Maximum, over assignments of the N labeled vertices to at most q
// classes, of the number of labeled D-regular graphs whose every edge
// joins two classes. Classes may be empty; assignments differing only by
// class names are counted once.
ColoredCensus max_colored_regular_graphs(int N, int D, int q,
                                         const RegularGraphOptions& options = {});

// Same maximum by brute force over all q^N labeled assignments; the
// cross-check for the canonical enumeration above. Tiny N only.
ColoredCensus max_colored_regular_graphs_naive(int N, int D, int q,
                                               const RegularGraphOptions& options = {});

struct RegularGraphCensus {
    int N = 0;
    int D = 0;
    int q = 0;
    std::uint64_t a = 0;  // labeled D-regular graphs on N vertices
    std::uint64_t b = 0;  // best same-coloring count among them
};

RegularGraphCensus regular_graph_census(int N, int D, int q,
                                        const RegularGraphOptions& options = {});

struct CensusReport {
    RegularGraphCensus census;
    std::uint64_t bound = 0;  // ceil(a/b); 0 when a = 0 (degenerate)
    std::optional<std::uint64_t> observed;
    bool holds = true;       // observed >= bound whenever observed is present
    bool conclusive = true;  // false when the enumeration was truncated
    std::vector<std::string> notes;
    std::vector<RegularGraphCensus> related;  // e.g. the D+1 census when a = 0
    std::vector<int> best_coloring;
};

// The partition-count lower bound made executable: computes ceil(a_N/b_N)
// for D-regular graphs on the configuration's points and compares it with
// the unconstrained partition count. Requires D(D+1) < q and prime-power
// q; a point count differing from (d+1)(q-1)+1 is reported, not fatal.
CensusReport census_lower_bound(const PointConfig& cfg, int q, int D,
                                const SearchOptions& search = {},
                                const RegularGraphOptions& options = {});

}  // namespace tvb
