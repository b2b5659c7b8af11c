#include "tvb/tverberg.hpp"

#include "tvb/criteria.hpp"
#include "tvb/lp.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace tvb {

void validate_config(const PointConfig& cfg) {
    if (cfg.dimension < 1) throw std::invalid_argument("dimension must be positive");
    for (const auto& pt : cfg.points)
        if (static_cast<int>(pt.size()) != cfg.dimension)
            throw std::invalid_argument("point with wrong coordinate count");
    if (cfg.constraint_graph &&
        cfg.constraint_graph->vertex_count() != cfg.point_count())
        throw std::invalid_argument("constraint graph size differs from point count");
}

HullIntersectionCertificate hulls_intersect(const PointConfig& cfg,
                                            const std::vector<std::vector<int>>& parts) {
    validate_config(cfg);
    if (parts.empty()) throw std::invalid_argument("no parts given");
    std::size_t vars = 0;
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("empty part");
        for (int p : part)
            if (p < 0 || p >= cfg.point_count())
                throw std::out_of_range("point index out of range");
        vars += part.size();
    }

    // One convexity row per part, then d rows tying each later part's
    // combination to the first part's.
    const std::size_t d = cfg.dimension;
    const std::size_t rows = parts.size() + d * (parts.size() - 1);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(vars, Rational(0)));
    std::vector<Rational> b(rows, Rational(0));
    std::vector<std::size_t> offset(parts.size());
    for (std::size_t i = 0, off = 0; i < parts.size(); ++i) {
        offset[i] = off;
        for (std::size_t j = 0; j < parts[i].size(); ++j) a[i][off + j] = 1;
        b[i] = 1;
        off += parts[i].size();
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        for (std::size_t k = 0; k < d; ++k) {
            auto& row = a[parts.size() + (i - 1) * d + k];
            for (std::size_t j = 0; j < parts[0].size(); ++j)
                row[offset[0] + j] = cfg.points[parts[0][j]][k];
            for (std::size_t j = 0; j < parts[i].size(); ++j)
                row[offset[i] + j] = -cfg.points[parts[i][j]][k];
        }

    LpFeasibility lp = lp_equality_feasible(std::move(a), std::move(b));
    HullIntersectionCertificate cert;
    cert.feasible = lp.feasible;
    if (!lp.feasible) {
        cert.note = "empty intersection certified by phase-1 simplex";
        return cert;
    }
    cert.coefficients.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        cert.coefficients[i].assign(lp.solution.begin() + offset[i],
                                    lp.solution.begin() + offset[i] + parts[i].size());
    cert.witness.assign(d, Rational(0));
    for (std::size_t j = 0; j < parts[0].size(); ++j)
        for (std::size_t k = 0; k < d; ++k)
            cert.witness[k] += cert.coefficients[0][j] * cfg.points[parts[0][j]][k];
    return cert;
}

bool certificate_valid(const PointConfig& cfg, const std::vector<std::vector<int>>& parts,
                       const HullIntersectionCertificate& cert) {
    if (!cert.feasible) return false;
    if (cert.coefficients.size() != parts.size()) return false;
    if (static_cast<int>(cert.witness.size()) != cfg.dimension) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (cert.coefficients[i].size() != parts[i].size()) return false;
        Rational total(0);
        std::vector<Rational> combo(cfg.dimension, Rational(0));
        for (std::size_t j = 0; j < parts[i].size(); ++j) {
            const Rational& l = cert.coefficients[i][j];
            if (l < 0) return false;
            total += l;
            for (int k = 0; k < cfg.dimension; ++k)
                combo[k] += l * cfg.points[parts[i][j]][k];
        }
        if (total != 1) return false;
        if (combo != cert.witness) return false;
    }
    return true;
}

namespace {

using Parts = std::vector<std::vector<int>>;
using Emit = std::function<bool(const Parts&)>;
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Restricted-growth walk: index p may join an existing part or open the
// next one, so each unordered partition appears exactly once with parts
// ordered by minimum element. A part that would contain a constraint edge
// is pruned as it forms.
struct Walker {
    int n = 0;
    int q = 1;
    const Graph* constraints = nullptr;
    bool allow_fewer = false;
    const Emit* emit = nullptr;
    Deadline deadline;

    Parts parts;
    bool stop = false;
    bool deadline_hit = false;
    int tick = 8191;  // so the first step checks the clock, then every 8192

    void run(int p) {
        if (stop) return;
        if (++tick >= 8192) {
            tick = 0;
            if (deadline && std::chrono::steady_clock::now() > *deadline)
                deadline_hit = stop = true;
        }
        if (stop) return;
        if (p == n) {
            if (!parts.empty() && (allow_fewer || static_cast<int>(parts.size()) == q))
                if (!(*emit)(parts)) stop = true;
            return;
        }
        const int open = static_cast<int>(parts.size());
        for (int k = 0; k <= open && !stop; ++k) {
            const bool fresh = k == open;
            if (fresh && open == q) break;
            if (!allow_fewer && q - (fresh ? open + 1 : open) > n - 1 - p) continue;
            if (!fresh && constraints) {
                bool blocked = false;
                for (int member : parts[k])
                    if (constraints->adjacent(member, p)) {
                        blocked = true;
                        break;
                    }
                if (blocked) continue;
            }
            if (fresh) parts.emplace_back();
            parts[k].push_back(p);
            run(p + 1);
            parts[k].pop_back();
            if (fresh) parts.pop_back();
        }
    }

    // Seeds the walk from a fixed assignment of the first indices.
    void run_from(const std::vector<int>& prefix) {
        parts.clear();
        for (std::size_t p = 0; p < prefix.size(); ++p) {
            if (prefix[p] == static_cast<int>(parts.size())) parts.emplace_back();
            parts[prefix[p]].push_back(static_cast<int>(p));
        }
        run(static_cast<int>(prefix.size()));
    }
};

// All constraint-respecting restricted-growth prefixes of the given depth,
// in lexicographic order.
std::vector<std::vector<int>> rgs_prefixes(int n, int q, const Graph* constraints,
                                           bool allow_fewer, int depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int p, int open) -> void {
        if (p == depth) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= open && k < q; ++k) {
            if (!allow_fewer && q - std::max(open, k + 1) > n - 1 - p) continue;
            if (k < open && constraints) {
                bool blocked = false;
                for (int m = 0; m < p; ++m)
                    if (cur[m] == k && constraints->adjacent(m, p)) {
                        blocked = true;
                        break;
                    }
                if (blocked) continue;
            }
            cur.push_back(k);
            self(self, p + 1, std::max(open, k + 1));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

std::uint64_t for_each_candidate_partition(int n, int q, const Graph* constraints,
                                           bool allow_fewer, const Emit& cb,
                                           std::uint64_t budget, bool& truncated,
                                           Deadline deadline) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    truncated = false;
    std::uint64_t yielded = 0;
    Emit gated = [&](const Parts& parts) {
        if (yielded >= budget) {
            truncated = true;
            return false;
        }
        ++yielded;
        return cb(parts);
    };
    Walker w;
    w.n = n;
    w.q = q;
    w.constraints = constraints;
    w.allow_fewer = allow_fewer;
    w.emit = &gated;
    w.deadline = deadline;
    w.run(0);
    if (w.deadline_hit) truncated = true;
    return yielded;
}

namespace {

void note_point_count(const PointConfig& cfg, int q, std::vector<std::string>& warnings) {
    const int expected = (cfg.dimension + 1) * (q - 1) + 1;
    if (cfg.point_count() != expected)
        warnings.push_back("point count " + std::to_string(cfg.point_count()) +
                           " differs from (d+1)(q-1)+1 = " + std::to_string(expected));
}

bool guarantee_applies(const PointConfig& cfg, int q) {
    if (cfg.point_count() != (cfg.dimension + 1) * (q - 1) + 1) return false;
    if (!prime_power_decomposition(q).is_prime_power) return false;
    return !cfg.constraint_graph || slack_criterion_holds(*cfg.constraint_graph, q);
}

}  // namespace

SearchOutcome find_partition(const PointConfig& cfg, int q, const SearchOptions& options) {
    validate_config(cfg);
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    SearchOutcome out;
    note_point_count(cfg, q, out.warnings);
    const Graph* cg = cfg.constraint_graph ? &*cfg.constraint_graph : nullptr;
    out.candidates_checked = for_each_candidate_partition(
        cfg.point_count(), q, cg, options.allow_fewer_parts,
        [&](const Parts& parts) {
            HullIntersectionCertificate cert = hulls_intersect(cfg, parts);
            if (!cert.feasible) return true;
            out.partition = TverbergPartition{parts, cert.witness, cert.coefficients};
            return false;
        },
        options.partition_budget, out.truncated, options.deadline);
    if (!out.partition && !out.truncated) {
        out.exhausted = true;
        out.falsification = guarantee_applies(cfg, q);
    }
    return out;
}

EnumerationOutcome enumerate_partitions(const PointConfig& cfg, int q,
                                        const SearchOptions& options) {
    validate_config(cfg);
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    EnumerationOutcome out;
    note_point_count(cfg, q, out.warnings);
    const Graph* cg = cfg.constraint_graph ? &*cfg.constraint_graph : nullptr;
    const int n = cfg.point_count();

    if (options.workers <= 1 || n < 4) {
        out.candidates_checked = for_each_candidate_partition(
            n, q, cg, options.allow_fewer_parts,
            [&](const Parts& parts) {
                HullIntersectionCertificate cert = hulls_intersect(cfg, parts);
                if (cert.feasible)
                    out.partitions.push_back(
                        TverbergPartition{parts, cert.witness, cert.coefficients});
                return true;
            },
            options.partition_budget, out.truncated, options.deadline);
        return out;
    }

    int depth = 1;
    std::vector<std::vector<int>> prefixes;
    for (; depth < n; ++depth) {
        prefixes = rgs_prefixes(n, q, cg, options.allow_fewer_parts, depth);
        if (prefixes.size() >= static_cast<std::size_t>(options.workers) * 4) break;
    }
    if (prefixes.empty()) prefixes = rgs_prefixes(n, q, cg, options.allow_fewer_parts, depth);

    std::vector<std::vector<TverbergPartition>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> checked{0};
    std::atomic<bool> over_budget{false}, late{false};
    std::mutex unordered_mutex;

    auto task = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= prefixes.size()) return;
            Emit emit = [&, b](const Parts& parts) {
                if (checked.fetch_add(1) >= options.partition_budget) {
                    checked.fetch_sub(1);
                    over_budget = true;
                    return false;
                }
                HullIntersectionCertificate cert = hulls_intersect(cfg, parts);
                if (cert.feasible) {
                    TverbergPartition tp{parts, cert.witness, cert.coefficients};
                    if (options.canonical_order) {
                        found[b].push_back(std::move(tp));
                    } else {
                        std::lock_guard<std::mutex> lock(unordered_mutex);
                        out.partitions.push_back(std::move(tp));
                    }
                }
                return true;
            };
            Walker w;
            w.n = n;
            w.q = q;
            w.constraints = cg;
            w.allow_fewer = options.allow_fewer_parts;
            w.emit = &emit;
            w.deadline = options.deadline;
            w.run_from(prefixes[b]);
            if (w.deadline_hit) late = true;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.workers; ++t) pool.emplace_back(task);
    for (auto& th : pool) th.join();

    if (options.canonical_order)
        for (auto& branch : found)
            for (auto& tp : branch) out.partitions.push_back(std::move(tp));
    out.truncated = over_budget || late;
    out.candidates_checked = checked.load();
    return out;
}

bool partition_valid(const PointConfig& cfg, int q, const TverbergPartition& p,
                     bool allow_fewer_parts) {
    const int n = cfg.point_count();
    if (allow_fewer_parts ? static_cast<int>(p.parts.size()) > q
                          : static_cast<int>(p.parts.size()) != q)
        return false;
    std::vector<char> seen(n, 0);
    int last_min = -1;
    for (const auto& part : p.parts) {
        if (part.empty()) return false;
        int part_min = n;
        for (int idx : part) {
            if (idx < 0 || idx >= n || seen[idx]) return false;
            seen[idx] = 1;
            part_min = std::min(part_min, idx);
        }
        if (part_min < last_min) return false;
        last_min = part_min;
        if (cfg.constraint_graph)
            for (std::size_t i = 0; i < part.size(); ++i)
                for (std::size_t j = i + 1; j < part.size(); ++j)
                    if (cfg.constraint_graph->adjacent(part[i], part[j])) return false;
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) return false;
    HullIntersectionCertificate cert;
    cert.feasible = true;
    cert.witness = p.witness;
    cert.coefficients = p.coefficients;
    return certificate_valid(cfg, p.parts, cert);
}

}  // namespace tvb
