#include "tvb/squid.hpp"

#include "tvb/criteria.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace tvb {

namespace {

void require_level(int level, int q) {
    if (level < 1 || level > q) throw std::invalid_argument("level out of 1..q");
}

void require_sorted_unique(const std::vector<ProductVertex>& arms) {
    for (std::size_t i = 1; i < arms.size(); ++i)
        if (!(arms[i - 1] < arms[i])) throw std::invalid_argument("duplicate arm");
}

}  // namespace

void validate_squid(const Graph& g, int q, const Squid& s) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (s.body < 0 || s.body >= g.vertex_count())
        throw std::invalid_argument("squid body out of range");
    require_sorted_unique(s.arms);
    if (s.kind == SquidKind::type_i) {
        if (s.partner < 0 || s.partner >= g.vertex_count())
            throw std::invalid_argument("squid partner out of range");
        if (!g.adjacent(s.body, s.partner))
            throw std::invalid_argument("squid partner not adjacent to body");
        require_level(s.level_a, q);
        if (s.level_b != -1) throw std::invalid_argument("type (i) squid has one level");
        for (const ProductVertex& arm : s.arms) {
            if (arm.level != s.level_a) throw std::invalid_argument("arm at wrong level");
            if (arm.base == s.body) throw std::invalid_argument("arm inside body column");
            if (!g.neighbors(s.partner).test(arm.base) && !g.neighbors(s.body).test(arm.base))
                throw std::invalid_argument("arm outside allowed positions");
        }
    } else {
        if (s.partner != -1) throw std::invalid_argument("type (ii) squid has no partner");
        require_level(s.level_a, q);
        require_level(s.level_b, q);
        if (s.level_a >= s.level_b) throw std::invalid_argument("levels must satisfy i < j");
        for (const ProductVertex& arm : s.arms) {
            if (arm.level != s.level_a && arm.level != s.level_b)
                throw std::invalid_argument("arm at wrong level");
            if (!g.neighbors(s.body).test(arm.base))
                throw std::invalid_argument("arm outside allowed positions");
        }
    }
}

Squid make_type1_squid(const Graph& g, int q, int body, int partner, int level,
                       std::vector<ProductVertex> arms) {
    std::sort(arms.begin(), arms.end());
    Squid s{body, SquidKind::type_i, partner, level, -1, std::move(arms)};
    validate_squid(g, q, s);
    return s;
}

Squid make_type2_squid(const Graph& g, int q, int body, std::pair<int, int> levels,
                       std::vector<ProductVertex> arms) {
    std::sort(arms.begin(), arms.end());
    Squid s{body, SquidKind::type_ii, -1, levels.first, levels.second, std::move(arms)};
    validate_squid(g, q, s);
    return s;
}

VertexSet squid_removed_set(const Graph& g, int q, const Squid& s) {
    VertexSet out(static_cast<std::size_t>(g.vertex_count()) * q);
    for (int l = 1; l <= q; ++l) out.set(product_index({s.body, l}, q));
    for (const ProductVertex& arm : s.arms) out.set(product_index(arm, q));
    return out;
}

SquidFamily::SquidFamily(Graph g, int q, std::vector<Squid> squids)
    : g_(std::move(g)), q_(q), squids_(std::move(squids)) {
    if (q_ < 1) throw std::invalid_argument("q must be at least 1");
    std::set<int> bodies;
    for (const Squid& s : squids_) {
        validate_squid(g_, q_, s);
        if (!bodies.insert(s.body).second)
            throw std::invalid_argument("squid bodies must be distinct");
    }
}

VertexSet SquidFamily::removed_set() const {
    VertexSet out(static_cast<std::size_t>(g_.vertex_count()) * q_);
    for (const Squid& s : squids_) out |= squid_removed_set(g_, q_, s);
    return out;
}

IndependenceComplex remove_family(const SquidFamily& family) {
    return IndependenceComplex(cartesian_product_complete(family.graph(), family.q()),
                               family.removed_set());
}

namespace {

void require_criterion(const Graph& g, int q) {
    int v = first_slack_violation(g, q);
    if (v < 0) return;
    std::int64_t required = static_cast<std::int64_t>(second_neighborhood(g, v).count()) +
                            2 * static_cast<std::int64_t>(g.degree(v));
    throw CriterionViolationError(v, required, q);
}

}  // namespace

CountingWitness verify_counting_lemma(const SquidFamily& family) {
    const Graph& g = family.graph();
    const int q = family.q();
    if (static_cast<int>(family.squids().size()) >= g.vertex_count())
        throw std::invalid_argument("family needs fewer squids than graph vertices");
    require_criterion(g, q);

    VertexSet bodies(g.vertex_count());
    for (const Squid& s : family.squids()) bodies.set(s.body);
    int v = 0;
    while (bodies.test(v)) ++v;

    CountingWitness w;
    w.q = q;
    w.bound = static_cast<std::int64_t>(second_neighborhood(g, v).count()) +
              2 * static_cast<std::int64_t>(g.degree(v));
    std::vector<char> level_removed(q + 1, 0);
    for (const Squid& s : family.squids()) {
        bool arm_here = false;
        for (const ProductVertex& arm : s.arms)
            if (arm.base == v) {
                arm_here = true;
                level_removed[arm.level] = 1;
            }
        if (!arm_here) continue;
        if (s.kind == SquidKind::type_ii)
            ++w.census.type_ii;
        else if (g.adjacent(s.body, v))
            ++w.census.type_i_adjacent;
        else
            ++w.census.type_i_nonadjacent;
    }
    if (w.census.weight() > w.bound)
        throw FalsificationError("squid census exceeds the neighborhood bound");
    int survivor_level = 0;
    for (int l = 1; l <= q; ++l)
        if (!level_removed[l]) {
            survivor_level = l;
            break;
        }
    if (survivor_level == 0)
        throw FalsificationError("no level survives in a non-body column");
    w.survivor = ProductVertex{v, survivor_level};
    return w;
}

bool verify_squid_theorem(const SquidFamily& family, const LemmaCheckOptions& options) {
    const int n = family.graph().vertex_count();
    const int m = static_cast<int>(family.squids().size());
    if (m >= n) throw std::invalid_argument("theorem needs more vertices than squids");
    require_criterion(family.graph(), family.q());
    return homologically_n_connected(remove_family(family), n - m - 2, options.fields,
                                     options.homology);
}

namespace {

int popcount64(std::uint64_t x) { return static_cast<int>(std::popcount(x)); }

// One undetermined squid aimed at the target column: its candidate level
// masks over the column.
struct LevelChoice {
    std::vector<std::uint64_t> masks;
};

int best_assignment_exhaustive(const std::vector<LevelChoice>& choices, std::vector<int>& pick) {
    std::vector<int> cur(choices.size(), 0);
    int best = -1;
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t acc) -> void {
        if (i == choices.size()) {
            if (popcount64(acc) > best) {
                best = popcount64(acc);
                pick = cur;
            }
            return;
        }
        for (std::size_t c = 0; c < choices[i].masks.size(); ++c) {
            cur[i] = static_cast<int>(c);
            self(self, i + 1, acc | choices[i].masks[c]);
        }
    };
    rec(rec, 0, 0);
    return best < 0 ? 0 : best;
}

int best_assignment_climb(const std::vector<LevelChoice>& choices, std::vector<int>& pick,
                          const AdversarialOptions& opt) {
    std::vector<int> cur(choices.size(), 0);
    int best = -1;
    for (int round = 0; round < opt.restarts; ++round) {
        std::mt19937_64 rng(opt.seed + round);
        for (std::size_t i = 0; i < choices.size(); ++i)
            cur[i] = static_cast<int>(rng() % choices[i].masks.size());
        auto objective = [&]() {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < choices.size(); ++i) acc |= choices[i].masks[cur[i]];
            return popcount64(acc);
        };
        bool improved = true;
        int cur_obj = objective();
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i < choices.size(); ++i) {
                int keep = cur[i];
                for (std::size_t c = 0; c < choices[i].masks.size(); ++c) {
                    cur[i] = static_cast<int>(c);
                    int obj = objective();
                    if (obj > cur_obj) {
                        cur_obj = obj;
                        keep = static_cast<int>(c);
                        improved = true;
                    }
                }
                cur[i] = keep;
            }
        }
        if (cur_obj > best) {
            best = cur_obj;
            pick = cur;
        }
    }
    return best < 0 ? 0 : best;
}

}  // namespace

AdversarialCensus max_census_family(const Graph& g, int q, int v,
                                    const AdversarialOptions& options) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    if (q > 64) throw std::invalid_argument("adversarial search supports q <= 64");
    require_criterion(g, q);

    struct Plan {
        int body;
        int partner;  // -1 for type (ii)
    };
    std::vector<Plan> plans;
    for (int w : set_to_vector(g.neighbors(v))) plans.push_back({w, -1});
    for (int w : set_to_vector(second_neighborhood(g, v))) {
        VertexSet common = g.neighbors(w) & g.neighbors(v);
        plans.push_back({w, static_cast<int>(common.find_first())});
    }

    std::vector<LevelChoice> choices(plans.size());
    long double combos = 1;
    for (std::size_t i = 0; i < plans.size(); ++i) {
        if (plans[i].partner < 0) {
            for (int a = 1; a <= q; ++a)
                for (int b = a + 1; b <= q; ++b)
                    choices[i].masks.push_back(std::uint64_t{1} << (a - 1) |
                                               std::uint64_t{1} << (b - 1));
        } else {
            for (int a = 1; a <= q; ++a) choices[i].masks.push_back(std::uint64_t{1} << (a - 1));
        }
        combos *= static_cast<long double>(choices[i].masks.size());
    }

    std::vector<int> pick(plans.size(), 0);
    int achieved =
        combos <= static_cast<long double>(options.exhaustive_cap)
            ? best_assignment_exhaustive(choices, pick)
            : best_assignment_climb(choices, pick, options);

    std::vector<Squid> squids;
    for (std::size_t i = 0; i < plans.size(); ++i) {
        std::uint64_t mask = choices[i].masks[pick[i]];
        std::vector<int> levels;
        for (int l = 1; l <= q; ++l)
            if (mask >> (l - 1) & 1) levels.push_back(l);
        if (plans[i].partner < 0) {
            squids.push_back(make_type2_squid(g, q, plans[i].body, {levels[0], levels[1]},
                                              {{v, levels[0]}, {v, levels[1]}}));
        } else {
            squids.push_back(make_type1_squid(g, q, plans[i].body, plans[i].partner, levels[0],
                                              {{v, levels[0]}}));
        }
    }

    AdversarialCensus out{SquidFamily(g, q, std::move(squids)), CountingWitness{}, achieved, 0,
                          false};
    out.witness = verify_counting_lemma(out.family);
    out.bound = static_cast<std::int64_t>(second_neighborhood(g, v).count()) +
                2 * static_cast<std::int64_t>(g.degree(v));
    out.tight = out.distinct_levels_removed == out.bound;
    return out;
}

}  // namespace tvb
