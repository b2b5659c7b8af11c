// Per-vertex slack criterion q > |N^2(v)| + 2|N(v)| and the max-degree
// corollary D(D+1) < q, reported rather than short-circuited.

#pragma once

#include "tvb/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvb {

/// The slack criterion failed at a concrete vertex; callers report it.
struct CriterionViolationError : std::invalid_argument {
    CriterionViolationError(int vertex_, std::int64_t required, int q);
    int vertex;
};

/// A checked consequence of a proven statement failed on a concrete
/// instance. Never expected; loud by design.
struct FalsificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    bool is_prime_power = false;
    std::int64_t p = 0;
    int r = 0;
};

/// q = p^r with p prime, r >= 1? Trial factorization; q is small everywhere
/// this library uses it. q < 2 is never a prime power.
PrimePower prime_power_decomposition(std::int64_t q);

struct VertexSlack {
    int vertex = 0;
    int nbr_count = 0;         // |N(v)|
    int second_nbr_count = 0;  // |N^2(v)|
    std::int64_t slack = 0;    // q - |N^2(v)| - 2|N(v)|
};

/// Diagnostic record for both criteria. Every failure cause is reported:
/// wrong vertex count, q not a prime power, and the per-vertex slacks.
struct CriterionReport {
    std::string criterion;  // "local" or "degree"
    int q = 0;
    int d = 0;
    std::int64_t required_vertices = 0;  // (d+1)(q-1)+1
    int vertex_count = 0;
    bool vertex_count_ok = false;
    PrimePower prime_power;
    int max_degree = 0;
    bool degree_bound_ok = false;  // D(D+1) < q
    bool all_slacks_positive = false;
    std::vector<VertexSlack> slacks;
    bool pass = false;
};

/// pass iff |V| = (d+1)(q-1)+1, q is a prime power, and slack >= 1 at
/// every vertex. Requires q >= 2, d >= 1.
CriterionReport check_local_criterion(const Graph& g, int q, int d);

/// pass iff |V| = (d+1)(q-1)+1, q is a prime power, and D(D+1) < q for
/// the maximum degree D. Requires q >= 2, d >= 1.
CriterionReport check_degree_criterion(const Graph& g, int q, int d);

/// The slack condition alone, with no vertex-count or prime-power gate.
/// This is the hypothesis of the connectivity statements, which hold for
/// any q >= 1.
bool slack_criterion_holds(const Graph& g, int q);

/// First vertex violating the slack condition, or -1 if none.
int first_slack_violation(const Graph& g, int q);

}  // namespace tvb
