#include "tvb/homology.hpp"

#include "tvb/rational.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

namespace tvb {

namespace {

struct FaceHash {
    std::size_t operator()(const std::vector<int>& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : f) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using FaceIndex = std::unordered_map<std::vector<int>, int, FaceHash>;

// Arithmetic hooks for the two elimination engines. size() is the pivot
// heuristic: irrelevant constant over GF(p), coefficient bit length over Q.
struct GfOps {
    using value = std::int64_t;
    int p;
    value zero() const { return 0; }
    bool is_zero(value a) const { return a == 0; }
    value from_sign(int s) const { return s > 0 ? 1 : p - 1; }
    value neg(value a) const { return a == 0 ? 0 : p - a; }
    value mul(value a, value b) const { return a * b % p; }
    value sub_mul(value a, value f, value b) const {  // a - f*b
        value r = (a - f * b % p) % p;
        return r < 0 ? r + p : r;
    }
    value div(value a, value b) const { return mul(a, inverse(b)); }
    value inverse(value a) const {
        // extended Euclid; p is prime and a != 0 mod p
        value t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            value qq = r / nr;
            std::swap(t -= qq * nt, nt);
            std::swap(r -= qq * nr, nr);
        }
        return t < 0 ? t + p : t;
    }
    std::size_t size(const value&) const { return 1; }
};

struct QOps {
    using value = Rational;
    value zero() const { return 0; }
    bool is_zero(const value& a) const { return a == 0; }
    value from_sign(int s) const { return s; }
    value neg(const value& a) const { return -a; }
    value mul(const value& a, const value& b) const { return a * b; }
    value sub_mul(const value& a, const value& f, const value& b) const { return a - f * b; }
    value div(const value& a, const value& b) const { return a / b; }
    std::size_t size(const value& a) const {
        const BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(a));
        const BigInt den = boost::multiprecision::denominator(a);
        std::size_t s = num == 0 ? 0 : boost::multiprecision::msb(num) + 1;
        return s + boost::multiprecision::msb(den) + 1;
    }
};

template <class Ops>
using SparseColumn = std::vector<std::pair<int, typename Ops::value>>;

// c1 + f*c2 over sorted sparse columns.
template <class Ops>
SparseColumn<Ops> axpy(const SparseColumn<Ops>& c1, const typename Ops::value& f,
                       const SparseColumn<Ops>& c2, const Ops& ops) {
    SparseColumn<Ops> out;
    out.reserve(c1.size() + c2.size());
    std::size_t i = 0, j = 0;
    while (i < c1.size() || j < c2.size()) {
        if (j == c2.size() || (i < c1.size() && c1[i].first < c2[j].first)) {
            out.push_back(c1[i++]);
        } else if (i == c1.size() || c2[j].first < c1[i].first) {
            auto v = ops.mul(f, c2[j].second);
            if (!ops.is_zero(v)) out.emplace_back(c2[j].first, v);
            ++j;
        } else {
            auto v = ops.sub_mul(c1[i].second, ops.neg(f), c2[j].second);
            if (!ops.is_zero(v)) out.emplace_back(c1[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Left-to-right column reduction; reduced columns with distinct lows are
// independent, so the survivor count is the rank.
template <class Ops>
std::size_t sparse_rank(std::vector<SparseColumn<Ops>>& cols, const Ops& ops) {
    std::unordered_map<int, int> pivot_with_low;
    std::vector<SparseColumn<Ops>> pivots;
    std::size_t rank = 0;
    for (auto& col : cols) {
        while (!col.empty()) {
            auto it = pivot_with_low.find(col.back().first);
            if (it == pivot_with_low.end()) break;
            const auto& pv = pivots[it->second];
            auto f = ops.neg(ops.div(col.back().second, pv.back().second));
            col = axpy(col, f, pv, ops);
        }
        if (!col.empty()) {
            pivot_with_low[col.back().first] = static_cast<int>(pivots.size());
            pivots.push_back(std::move(col));
            ++rank;
        }
    }
    return rank;
}

template <class Ops>
std::size_t dense_rank(std::vector<SparseColumn<Ops>>& cols, std::size_t rows, const Ops& ops) {
    using T = typename Ops::value;
    if (cols.empty() || rows == 0) return 0;
    std::vector<std::vector<T>> m(rows, std::vector<T>(cols.size(), ops.zero()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, v] : cols[j]) m[r][j] = v;

    std::vector<char> used(rows, 0);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::size_t best = rows, best_size = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] || ops.is_zero(m[r][c])) continue;
            std::size_t s = ops.size(m[r][c]);
            if (best == rows || s < best_size) {
                best = r;
                best_size = s;
                if (s <= 1) break;
            }
        }
        if (best == rows) continue;
        used[best] = 1;
        ++rank;
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] || ops.is_zero(m[r][c])) continue;
            T f = ops.div(m[r][c], m[best][c]);
            for (std::size_t cc = c; cc < cols.size(); ++cc)
                m[r][cc] = ops.sub_mul(m[r][cc], f, m[best][cc]);
        }
    }
    return rank;
}

template <class Ops>
std::size_t boundary_rank(std::vector<SparseColumn<Ops>>& cols, std::size_t rows,
                          std::size_t dense_limit, const Ops& ops) {
    if (rows <= dense_limit && cols.size() <= dense_limit) return dense_rank(cols, rows, ops);
    return sparse_rank(cols, ops);
}

template <class Ops>
std::map<int, std::size_t> boundary_ranks(const IndependenceComplex& c, const Ops& ops,
                                          std::size_t dense_limit,
                                          const HomologyOptions& opt,
                                          std::map<int, std::size_t>& face_counts,
                                          bool& covered) {
    std::map<int, std::size_t> ranks;
    face_counts[-1] = 1;
    FaceIndex prev_index;
    prev_index[{}] = 0;
    std::size_t prev_count = 1;
    covered = false;
    const FaceBudget budget{opt.face_budget, opt.deadline};
    for (int k = 0; k <= opt.max_dim + 1; ++k) {
        std::vector<SparseColumn<Ops>> cols;
        FaceIndex cur_index;
        std::vector<int> facet;
        std::size_t count = c.for_each_face(
            k,
            [&](const std::vector<int>& face) {
                cur_index.emplace(face, static_cast<int>(cols.size()));
                SparseColumn<Ops> col;
                col.reserve(face.size());
                facet.assign(face.begin() + 1, face.end());
                int sign = 1;
                for (std::size_t i = 0;; ++i) {
                    col.emplace_back(prev_index.at(facet), ops.from_sign(sign));
                    if (i == face.size() - 1) break;
                    facet[i] = face[i];
                    sign = -sign;
                }
                std::sort(col.begin(), col.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                cols.push_back(std::move(col));
                return true;
            },
            budget);
        face_counts[k] = count;
        ranks[k] = boundary_rank(cols, prev_count, dense_limit, ops);
        if (count == 0) {
            covered = true;
            break;
        }
        prev_index = std::move(cur_index);
        prev_count = count;
    }
    if (!covered && face_counts.count(opt.max_dim + 1) &&
        face_counts.at(opt.max_dim + 1) == 0)
        covered = true;
    return ranks;
}

}  // namespace

std::int64_t HomologyProfile::betti_at(int dim) const {
    auto it = betti.find(dim);
    return it == betti.end() ? 0 : it->second;
}

HomologyProfile reduced_homology(const IndependenceComplex& c, const Field& field,
                                 const HomologyOptions& options) {
    if (options.max_dim < -1) throw std::invalid_argument("max_dim below -1");
    HomologyProfile prof;
    prof.field = field;
    bool covered = false;
    std::map<int, std::size_t> ranks;
    if (field.kind == Field::Kind::rationals) {
        QOps ops;
        ranks = boundary_ranks(c, ops, options.dense_limit_q, options, prof.face_counts,
                               covered);
    } else {
        GfOps ops{field.p};
        ranks = boundary_ranks(c, ops, options.dense_limit_gf, options, prof.face_counts,
                               covered);
    }
    auto rank_at = [&](int k) -> std::int64_t {
        auto it = ranks.find(k);
        return it == ranks.end() ? 0 : static_cast<std::int64_t>(it->second);
    };
    auto count_at = [&](int k) -> std::int64_t {
        auto it = prof.face_counts.find(k);
        return it == prof.face_counts.end() ? 0 : static_cast<std::int64_t>(it->second);
    };
    prof.betti[-1] = 1 - rank_at(0);
    for (int k = 0; k <= options.max_dim; ++k)
        prof.betti[k] = count_at(k) - rank_at(k) - rank_at(k + 1);
    prof.max_dim_computed = options.max_dim;
    prof.complex_fully_covered = covered;
    if (covered) {
        std::int64_t lhs = 0, rhs = 0;
        for (const auto& [k, b] : prof.betti) lhs += (k % 2 == 0 ? b : -b);
        for (const auto& [k, f] : prof.face_counts)
            rhs += (k % 2 == 0 ? static_cast<std::int64_t>(f) : -static_cast<std::int64_t>(f));
        prof.euler_ok = lhs == rhs;
    }
    return prof;
}

namespace {

int connected_through_from(const HomologyProfile& prof, bool empty, int through_dim) {
    if (empty) return -2;
    int n = -1;
    for (int i = 0; i <= through_dim; ++i) {
        if (prof.betti_at(i) != 0) break;
        n = i;
    }
    return n;
}

}  // namespace

ConnectivityVerdict homological_connectivity(const IndependenceComplex& c, int through_dim,
                                             const std::vector<Field>& fields,
                                             HomologyOptions options, int workers) {
    if (fields.empty()) throw std::invalid_argument("no fields requested");
    through_dim = std::max(through_dim, -1);
    options.max_dim = through_dim;
    ConnectivityVerdict verdict;
    verdict.fields_tested = fields;
    verdict.profiles.resize(fields.size());
    if (workers > 1 && fields.size() > 1) {
        std::vector<std::future<HomologyProfile>> futs;
        futs.reserve(fields.size());
        for (const Field& f : fields)
            futs.push_back(std::async(std::launch::async,
                                      [&c, f, options] { return reduced_homology(c, f, options); }));
        for (std::size_t i = 0; i < futs.size(); ++i) verdict.profiles[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < fields.size(); ++i)
            verdict.profiles[i] = reduced_homology(c, fields[i], options);
    }
    const bool empty = c.is_empty();
    int overall = std::numeric_limits<int>::max();
    for (const auto& prof : verdict.profiles)
        overall = std::min(overall, connected_through_from(prof, empty, through_dim));
    verdict.homologically_connected_through = overall;
    for (std::size_t i = 1; i < verdict.profiles.size(); ++i)
        if (verdict.profiles[i].betti != verdict.profiles[0].betti)
            verdict.torsion_suspected = true;
    return verdict;
}

bool homologically_n_connected(const IndependenceComplex& c, int n,
                               const std::vector<Field>& fields, HomologyOptions options) {
    if (n <= -2) return true;
    if (n == -1) return !c.is_empty();
    ConnectivityVerdict v = homological_connectivity(c, n, fields, options);
    return v.homologically_connected_through >= n;
}

}  // namespace tvb
