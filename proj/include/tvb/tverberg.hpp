#pragma once

#include "tvb/graph.hpp"
#include "tvb/rational.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tvb {

struct PointConfig {
    int dimension = 1;
    std::vector<std::vector<Rational>> points;
    std::optional<Graph> constraint_graph;

    int point_count() const { return static_cast<int>(points.size()); }
};

// Throws std::invalid_argument on dimension or size mismatches.
void validate_config(const PointConfig& cfg);

struct HullIntersectionCertificate {
    bool feasible = false;
    std::vector<Rational> witness;                    // point in every hull
    std::vector<std::vector<Rational>> coefficients;  // convex weights per part
    std::string note;                                 // set when infeasible
};

// Decides whether the closed convex hulls of the given parts share a
// point, by exact LP feasibility. Boundary contact counts.
HullIntersectionCertificate hulls_intersect(const PointConfig& cfg,
                                            const std::vector<std::vector<int>>& parts);

// Exact re-evaluation of a certificate: nonnegative weights summing to 1
// per part, all combinations landing on the witness.
bool certificate_valid(const PointConfig& cfg, const std::vector<std::vector<int>>& parts,
                       const HullIntersectionCertificate& cert);

struct TverbergPartition {
    std::vector<std::vector<int>> parts;  // sorted by minimum element
    std::vector<Rational> witness;
    std::vector<std::vector<Rational>> coefficients;
};

struct SearchOptions {
    std::uint64_t partition_budget = 1'000'000;
    // Partitions normally have exactly q nonempty parts. The relaxed mode
    // also accepts fewer (dropping empty parts rather than intersecting
    // with empty hulls).
    bool allow_fewer_parts = false;
    int workers = 1;
    // When false, enumeration yields branch results as they complete
    // instead of canonical order.
    bool canonical_order = true;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchOutcome {
    std::optional<TverbergPartition> partition;
    bool exhausted = false;   // whole candidate space checked, nothing found
    bool truncated = false;   // budget or deadline cut the search short
    // Exhausted although the existence theorem applies: point count
    // matches (d+1)(q-1)+1, q is a prime power, and any constraint graph
    // passes the local criterion. Never expected.
    bool falsification = false;
    std::vector<std::string> warnings;
    std::uint64_t candidates_checked = 0;
};

// First constraint-respecting partition with intersecting hulls, in
// canonical order (parts sorted by minimum element).
SearchOutcome find_partition(const PointConfig& cfg, int q, const SearchOptions& options = {});

struct EnumerationOutcome {
    std::vector<TverbergPartition> partitions;
    bool truncated = false;
    std::vector<std::string> warnings;
    std::uint64_t candidates_checked = 0;
};

// Every constraint-respecting, hull-intersecting partition into q nonempty
// parts, each exactly once. Branches over the first assignments run
// concurrently when workers > 1.
EnumerationOutcome enumerate_partitions(const PointConfig& cfg, int q,
                                        const SearchOptions& options = {});

// Streaming core behind the two searches: yields canonical candidate
// partitions (constraint-respecting, before any hull check) until the
// callback returns false or the space or budget runs out. Returns the
// number of candidates yielded; sets truncated when a budget stopped the
// walk.
std::uint64_t for_each_candidate_partition(
    int n, int q, const Graph* constraints, bool allow_fewer,
    const std::function<bool(const std::vector<std::vector<int>>&)>& cb,
    std::uint64_t budget, bool& truncated,
    std::optional<std::chrono::steady_clock::time_point> deadline = {});

bool partition_valid(const PointConfig& cfg, int q, const TverbergPartition& p,
                     bool allow_fewer_parts = false);

}  // namespace tvb
