#pragma once

#include "tvb/homology.hpp"

namespace tvb {

struct LemmaCheckOptions {
    std::vector<Field> fields = default_fields();
    HomologyOptions homology;
    int workers = 1;
};

// Homological shadow of the gluing lemma: if Ind(h minus v) is n-connected
// and Ind(h minus the closed neighborhood of v) is (n-1)-connected, then
// Ind(h) is n-connected. True when the implication holds, vacuously true
// when a hypothesis fails.
bool verify_gluing_lemma(const Graph& h, int v, int n, const LemmaCheckOptions& options = {});

// Homological shadow of the fan lemma. Requires N_h(v) to induce a complete
// graph (throws otherwise). Hypothesis: for every u in N(v), the complex
// Ind(h minus (N(v) union N(u))) is (n-1)-connected. Conclusion: Ind(h) is
// n-connected. An isolated v makes Ind(h) a cone and the conclusion
// automatic.
bool verify_fan_lemma(const Graph& h, int v, int n, const LemmaCheckOptions& options = {});

// For edgeless G on n vertices, Ind(G box K_q) is the q-fold 2-wise deleted
// join of n points: faces pick at most one level per column, and reduced
// homology is concentrated in dimension n-1 with rank (q-1)^n. Checks both
// the face counts and the homology over options.fields.
bool deleted_join_identity_check(int n, int q, const LemmaCheckOptions& options = {});

// Level translations by (Z_p)^r, q = p^r, acting on G box K_q: every face
// must map to a face and no nonempty face may be setwise fixed by a
// non-identity translation. Throws when q is not a power of the prime p.
bool free_action_check(const Graph& g, int q, int p, const FaceBudget& budget = {});

}  // namespace tvb
