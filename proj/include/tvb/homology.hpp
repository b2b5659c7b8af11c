// Reduced simplicial homology ranks of independence complexes over a
// field, and the homological-connectivity verdict built on them.

#pragma once

#include "tvb/field.hpp"
#include "tvb/independence_complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace tvb {

struct HomologyOptions {
    int max_dim = 1;
    std::size_t face_budget = std::size_t{1} << 20;
    /// Boundary ranks over GF(p) use dense elimination up to this many faces
    /// on either side and sparse column reduction beyond.
    std::size_t dense_limit_gf = std::size_t{1} << 13;
    /// The rational path switches earlier; exact pivots are the costly part.
    std::size_t dense_limit_q = std::size_t{1} << 9;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct HomologyProfile {
    Field field;
    /// Reduced Betti numbers for dimensions -1 .. max_dim_computed.
    std::map<int, std::int64_t> betti;
    int max_dim_computed = -1;
    /// Face counts f_k for k = -1 .. (last dimension streamed).
    std::map<int, std::size_t> face_counts;
    /// True when the stream ran past the top dimension of the complex, so
    /// every higher Betti number is structurally zero.
    bool complex_fully_covered = false;
    /// Alternating sum of betti equals the reduced Euler characteristic from
    /// face counts. Only set when the complex was fully covered.
    std::optional<bool> euler_ok;

    std::int64_t betti_at(int dim) const;
};

/// Reduced Betti numbers via boundary-matrix ranks, dimensions -1 through
/// options.max_dim. betti[-1] = 1 exactly when the complex has no vertices.
HomologyProfile reduced_homology(const IndependenceComplex& c, const Field& field,
                                 const HomologyOptions& options);

struct ConnectivityVerdict {
    /// Largest n <= through_dim with reduced homology vanishing in degrees
    /// 0..n over every field tested; -1 when the complex is merely
    /// non-empty, -2 when it is empty. Adding fields never increases it.
    int homologically_connected_through = -2;
    std::vector<Field> fields_tested;
    /// Field ranks disagree somewhere in the computed range.
    bool torsion_suspected = false;
    std::vector<HomologyProfile> profiles;
};

/// Probes connectivity at the homology level only; fundamental-group
/// triviality is deliberately out of reach here, and the verdict's name
/// says so. workers > 1 computes the fields concurrently.
ConnectivityVerdict homological_connectivity(const IndependenceComplex& c, int through_dim,
                                             const std::vector<Field>& fields,
                                             HomologyOptions options = {}, int workers = 1);

/// n <= -2 is vacuous; n = -1 means non-empty; n >= 0 additionally needs
/// vanishing reduced homology in degrees 0..n over every field.
bool homologically_n_connected(const IndependenceComplex& c, int n,
                               const std::vector<Field>& fields, HomologyOptions options = {});

}  // namespace tvb
