#include "tvb/complex_checks.hpp"

#include "tvb/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvb {

namespace {

bool n_connected(const IndependenceComplex& c, int n, const LemmaCheckOptions& opt) {
    return homologically_n_connected(c, n, opt.fields, opt.homology);
}

void require_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
}

}  // namespace

bool verify_gluing_lemma(const Graph& h, int v, int n, const LemmaCheckOptions& options) {
    require_vertex(h, v);
    IndependenceComplex base(h);
    VertexSet closed = h.neighbors(v);
    closed.set(static_cast<std::size_t>(v));
    if (!n_connected(base.without_vertex(v), n, options)) return true;
    if (!n_connected(base.without(closed), n - 1, options)) return true;
    return n_connected(base, n, options);
}

bool verify_fan_lemma(const Graph& h, int v, int n, const LemmaCheckOptions& options) {
    require_vertex(h, v);
    const std::vector<int> nbrs = set_to_vector(h.neighbors(v));
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!h.adjacent(nbrs[i], nbrs[j]))
                throw std::invalid_argument("fan lemma needs a complete neighborhood");
    IndependenceComplex base(h);
    for (int u : nbrs) {
        VertexSet removed = h.neighbors(v) | h.neighbors(u);
        if (!n_connected(base.without(removed), n - 1, options)) return true;
    }
    return n_connected(base, n, options);
}

bool deleted_join_identity_check(int n, int q, const LemmaCheckOptions& options) {
    if (n < 0 || q < 1) throw std::invalid_argument("need n >= 0 and q >= 1");
    Graph edgeless(n);
    IndependenceComplex c(cartesian_product_complete(edgeless, q));
    const FaceBudget budget{options.homology.face_budget, options.homology.deadline};

    // Faces choose a column subset and one level per chosen column.
    for (int k = 0; k <= n; ++k) {
        std::uint64_t expected = k == n ? 0 : 1;
        if (k < n) {
            for (int i = 0; i < k + 1; ++i)
                expected = expected * static_cast<std::uint64_t>(n - i) / (i + 1) *
                           static_cast<std::uint64_t>(q);
        }
        bool columns_distinct = true;
        std::size_t count = c.for_each_face(
            k,
            [&](const std::vector<int>& face) {
                std::vector<int> cols;
                for (int pv : face) cols.push_back(product_vertex_at(pv, q).base);
                std::sort(cols.begin(), cols.end());
                if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
                    columns_distinct = false;
                return columns_distinct;
            },
            budget);
        if (!columns_distinct || count != expected) return false;
    }

    std::int64_t top_rank = 1;
    for (int i = 0; i < n; ++i) top_rank *= q - 1;
    HomologyOptions hopt = options.homology;
    hopt.max_dim = std::max(n - 1, -1);
    for (const Field& f : options.fields) {
        HomologyProfile prof = reduced_homology(c, f, hopt);
        for (int k = -1; k <= hopt.max_dim; ++k)
            if (prof.betti_at(k) != (k == n - 1 ? top_rank : 0)) return false;
        if (!prof.complex_fully_covered) return false;
    }
    return true;
}

namespace {

// Digitwise base-p addition of two level offsets in 0..p^r-1.
int digit_add(int a, int b, int p, int r) {
    int out = 0, scale = 1;
    for (int i = 0; i < r; ++i) {
        out += (a % p + b % p) % p * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

}  // namespace

bool free_action_check(const Graph& g, int q, int p, const FaceBudget& budget) {
    PrimePower pp = prime_power_decomposition(q);
    if (!pp.is_prime_power || pp.p != p)
        throw std::invalid_argument("q must be a power of the prime p");
    const int r = pp.r;
    IndependenceComplex c(cartesian_product_complete(g, q));

    // perm[m][l-1] is the image level of l under translation by the vector
    // with digit encoding m.
    std::vector<std::vector<int>> perm(q, std::vector<int>(q));
    for (int m = 0; m < q; ++m)
        for (int l = 1; l <= q; ++l) perm[m][l - 1] = 1 + digit_add(l - 1, m, p, r);

    bool ok = true;
    std::vector<int> image;
    for (int dim = 0; ok && dim < static_cast<int>(c.remaining_count()); ++dim) {
        std::size_t count = c.for_each_face(
            dim,
            [&](const std::vector<int>& face) {
                for (int m = 1; m < q && ok; ++m) {
                    image.clear();
                    for (int pv : face) {
                        ProductVertex w = product_vertex_at(pv, q);
                        w.level = perm[m][w.level - 1];
                        image.push_back(product_index(w, q));
                    }
                    std::sort(image.begin(), image.end());
                    if (!c.is_face(image) || image == face) ok = false;
                }
                return ok;
            },
            budget);
        if (count == 0) break;
    }
    return ok;
}

}  // namespace tvb
