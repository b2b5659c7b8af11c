#pragma once

#include "tvb/complex_checks.hpp"

#include <cstdint>
#include <stdexcept>

namespace tvb {

enum class SquidKind { type_i, type_ii };

// A squid is defined by its parameters, not just its vertex set: two squids
// on the same subset of the product can have different bodies. Equality is
// parameter-wise for that reason.
struct Squid {
    int body = 0;
    SquidKind kind = SquidKind::type_i;
    int partner = -1;              // type (i) only: a neighbor of body
    int level_a = 1;               // type (i): the arm level; type (ii): lower level
    int level_b = -1;              // type (ii): upper level, > level_a
    std::vector<ProductVertex> arms;  // sorted, never in the body column

    bool operator==(const Squid&) const = default;
};

// Arms may be any subset of (N(partner) | N(body)) minus the body itself,
// all at the given level. The removed set adds the full body column.
Squid make_type1_squid(const Graph& g, int q, int body, int partner, int level,
                       std::vector<ProductVertex> arms);

// Arms may be any subset of N(body) at the two given levels.
Squid make_type2_squid(const Graph& g, int q, int body, std::pair<int, int> levels,
                       std::vector<ProductVertex> arms);

// Throws std::invalid_argument when the squid is malformed for (g, q).
void validate_squid(const Graph& g, int q, const Squid& s);

// Indicator over the q*|V(g)| product vertices: arms plus the body column.
VertexSet squid_removed_set(const Graph& g, int q, const Squid& s);

// Squids with pairwise distinct bodies, carried with their product context.
class SquidFamily {
  public:
    SquidFamily(Graph g, int q, std::vector<Squid> squids);

    const Graph& graph() const { return g_; }
    int q() const { return q_; }
    const std::vector<Squid>& squids() const { return squids_; }
    VertexSet removed_set() const;

  private:
    Graph g_;
    int q_ = 1;
    std::vector<Squid> squids_;
};

IndependenceComplex remove_family(const SquidFamily& family);

struct CountingCensus {
    std::int64_t type_i_nonadjacent = 0;  // a
    std::int64_t type_i_adjacent = 0;     // b
    std::int64_t type_ii = 0;             // c
    std::int64_t weight() const { return type_i_nonadjacent + type_i_adjacent + 2 * type_ii; }
};

struct CountingWitness {
    ProductVertex survivor;
    CountingCensus census;       // squids with an arm in the survivor column
    std::int64_t bound = 0;      // |N2(v)| + 2|N(v)| at the survivor base
    std::int64_t q = 0;          // census.weight() <= bound < q
};

// Executable form of the counting argument: pick the smallest non-body
// vertex v, classify the squids with an arm in column v, check
// a + b + 2c <= |N2(v)| + 2|N(v)| < q, and return a surviving vertex of
// the column. Throws CriterionViolationError when the local criterion
// fails, std::invalid_argument when the family has too many squids, and
// FalsificationError if the census or the survivor ever fails to exist.
CountingWitness verify_counting_lemma(const SquidFamily& family);

// Homological shadow of the squid connectivity theorem: the complex left
// after removing m squids is checked through |V(G)| - m - 2. At
// m = |V(G)| - 1 this degenerates to non-emptiness.
bool verify_squid_theorem(const SquidFamily& family, const LemmaCheckOptions& options = {});

struct AdversarialOptions {
    std::uint64_t seed = 0;
    std::uint64_t exhaustive_cap = std::uint64_t{1} << 20;
    int restarts = 8;
};

struct AdversarialCensus {
    SquidFamily family;
    CountingWitness witness;
    int distinct_levels_removed = 0;
    std::int64_t bound = 0;
    bool tight = false;  // distinct_levels_removed == bound
};

// Builds the worst family against column v: a type (ii) squid at every
// neighbor and a type (i) squid at every second neighbor, then assigns
// levels to maximize the distinct levels removed from the column.
// Exhaustive over level assignments when their count fits the cap, seeded
// hill-climbing with restarts beyond it.
AdversarialCensus max_census_family(const Graph& g, int q, int v,
                                    const AdversarialOptions& options = {});

}  // namespace tvb
