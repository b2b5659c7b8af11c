#include "tvb/criteria.hpp"

#include <sstream>
#include <stdexcept>

namespace tvb {

namespace {

std::string violation_message(int vertex, std::int64_t required, int q) {
    std::ostringstream os;
    os << "slack criterion fails at vertex " << vertex << ": |N2(v)| + 2|N(v)| = " << required
       << " but q = " << q;
    return os.str();
}

}  // namespace

CriterionViolationError::CriterionViolationError(int vertex_, std::int64_t required, int q)
    : std::invalid_argument(violation_message(vertex_, required, q)), vertex(vertex_) {}

PrimePower prime_power_decomposition(std::int64_t q) {
    if (q < 0) throw std::invalid_argument("negative argument to prime power test");
    PrimePower pp;
    if (q < 2) return pp;
    std::int64_t p = 0;
    for (std::int64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) {
        pp = {true, q, 1};
        return pp;
    }
    std::int64_t rest = q;
    int r = 0;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest == 1) pp = {true, p, r};
    return pp;
}

namespace {

CriterionReport base_report(const Graph& g, int q, int d, const char* name) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    CriterionReport rep;
    rep.criterion = name;
    rep.q = q;
    rep.d = d;
    rep.required_vertices = static_cast<std::int64_t>(d + 1) * (q - 1) + 1;
    rep.vertex_count = g.vertex_count();
    rep.vertex_count_ok = rep.vertex_count == rep.required_vertices;
    rep.prime_power = prime_power_decomposition(q);
    rep.max_degree = g.max_degree();
    rep.degree_bound_ok =
        static_cast<std::int64_t>(rep.max_degree) * (rep.max_degree + 1) < q;
    rep.all_slacks_positive = true;
    rep.slacks.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSlack s;
        s.vertex = v;
        s.nbr_count = g.degree(v);
        s.second_nbr_count = static_cast<int>(second_neighborhood(g, v).count());
        s.slack = static_cast<std::int64_t>(q) - s.second_nbr_count - 2 * s.nbr_count;
        if (s.slack < 1) rep.all_slacks_positive = false;
        rep.slacks.push_back(s);
    }
    return rep;
}

}  // namespace

CriterionReport check_local_criterion(const Graph& g, int q, int d) {
    CriterionReport rep = base_report(g, q, d, "local");
    rep.pass = rep.vertex_count_ok && rep.prime_power.is_prime_power && rep.all_slacks_positive;
    return rep;
}

CriterionReport check_degree_criterion(const Graph& g, int q, int d) {
    CriterionReport rep = base_report(g, q, d, "degree");
    rep.pass = rep.vertex_count_ok && rep.prime_power.is_prime_power && rep.degree_bound_ok;
    return rep;
}

bool slack_criterion_holds(const Graph& g, int q) { return first_slack_violation(g, q) < 0; }

int first_slack_violation(const Graph& g, int q) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t bound = static_cast<std::int64_t>(second_neighborhood(g, v).count()) +
                             2 * static_cast<std::int64_t>(g.degree(v));
        if (q <= bound) return v;
    }
    return -1;
}

}  // namespace tvb
