#include "tvb/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tvb {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field ") + key);
    return j[key].get<int>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    bool labeled = false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) labeled = true;
    if (labeled) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) bad("graph file must hold a JSON object");
    const int n = int_field(j, "vertices");
    if (n < 0) bad("negative vertex count");
    Graph g(n);
    if (j.contains("labels")) {
        const Json& labels = j["labels"];
        if (!labels.is_array() || static_cast<int>(labels.size()) != n)
            bad("labels must list one string per vertex");
        for (int v = 0; v < n; ++v) {
            if (!labels[v].is_string()) bad("labels must list one string per vertex");
            g.set_label(v, labels[v].get<std::string>());
        }
    }
    if (!j.contains("edges") || !j["edges"].is_array()) bad("missing edges array");
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            bad("each edge must be a pair of vertex indices");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    std::size_t count = 0;
    if (!(in >> n >> count)) bad("edge list header must be \"n <edge count>\"");
    if (n < 0) bad("negative vertex count");
    Graph g(n);
    for (std::size_t i = 0; i < count; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) bad("edge list ended early");
        g.add_edge(u, v);
    }
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    auto edges = g.edge_list();
    out << g.vertex_count() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

namespace {

bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    return in;
}

Json parse_file(const std::string& path) {
    auto in = open_input(path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        bad(path + ": " + e.what());
    }
    return j;
}

}  // namespace

Graph load_graph(const std::string& path) {
    if (has_json_extension(path)) return graph_from_json(parse_file(path));
    auto in = open_input(path);
    return read_edge_list(in);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) bad("cannot write " + path);
    if (has_json_extension(path))
        out << graph_to_json(g).dump(2) << "\n";
    else
        write_edge_list(g, out);
}

Json points_to_json(const PointConfig& cfg) {
    Json j;
    j["d"] = cfg.dimension;
    Json pts = Json::array();
    for (const auto& pt : cfg.points) {
        Json row = Json::array();
        for (const Rational& c : pt) row.push_back(format_rational(c));
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j;
}

PointConfig points_from_json(const Json& j) {
    if (!j.is_object()) bad("point file must hold a JSON object");
    PointConfig cfg;
    cfg.dimension = int_field(j, "d");
    if (!j.contains("points") || !j["points"].is_array()) bad("missing points array");
    for (const Json& row : j["points"]) {
        if (!row.is_array()) bad("each point must be a coordinate array");
        std::vector<Rational> pt;
        for (const Json& c : row) {
            if (c.is_string())
                pt.push_back(parse_rational(c.get<std::string>()));
            else if (c.is_number_integer())
                pt.push_back(Rational(c.get<std::int64_t>()));
            else
                bad("coordinates must be rational strings or integers, not floats");
        }
        cfg.points.push_back(std::move(pt));
    }
    validate_config(cfg);
    return cfg;
}

PointConfig load_points(const std::string& path) { return points_from_json(parse_file(path)); }

Json squid_to_json(const Squid& s) {
    Json j;
    j["body"] = s.body;
    j["kind"] = s.kind == SquidKind::type_i ? "i" : "ii";
    if (s.kind == SquidKind::type_i) {
        j["partner"] = s.partner;
        j["levels"] = {s.level_a};
    } else {
        j["levels"] = {s.level_a, s.level_b};
    }
    Json arms = Json::array();
    for (const ProductVertex& arm : s.arms) arms.push_back({arm.base, arm.level});
    j["arms"] = std::move(arms);
    return j;
}

Squid squid_from_json(const Graph& g, int q, const Json& j) {
    if (!j.is_object()) bad("each squid must be a JSON object");
    const int body = int_field(j, "body");
    if (!j.contains("kind") || !j["kind"].is_string()) bad("squid kind must be \"i\" or \"ii\"");
    const std::string kind = j["kind"].get<std::string>();
    if (!j.contains("levels") || !j["levels"].is_array()) bad("missing squid levels");
    std::vector<int> levels;
    for (const Json& l : j["levels"]) {
        if (!l.is_number_integer()) bad("levels must be integers");
        levels.push_back(l.get<int>());
    }
    std::vector<ProductVertex> arms;
    if (j.contains("arms")) {
        if (!j["arms"].is_array()) bad("arms must be an array of [vertex, level] pairs");
        for (const Json& a : j["arms"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
                !a[1].is_number_integer())
                bad("arms must be an array of [vertex, level] pairs");
            arms.push_back({a[0].get<int>(), a[1].get<int>()});
        }
    }
    if (kind == "i") {
        if (levels.size() != 1) bad("type (i) squid takes one level");
        return make_type1_squid(g, q, body, int_field(j, "partner"), levels[0], std::move(arms));
    }
    if (kind == "ii") {
        if (levels.size() != 2) bad("type (ii) squid takes two levels");
        return make_type2_squid(g, q, body, {levels[0], levels[1]}, std::move(arms));
    }
    bad("squid kind must be \"i\" or \"ii\"");
}

Json family_to_json(const SquidFamily& family) {
    Json j = Json::array();
    for (const Squid& s : family.squids()) j.push_back(squid_to_json(s));
    return j;
}

SquidFamily load_squid_family(const Graph& g, int q, const std::string& path) {
    Json j = parse_file(path);
    if (!j.is_array()) bad("squid family file must hold a JSON array");
    std::vector<Squid> squids;
    for (const Json& s : j) squids.push_back(squid_from_json(g, q, s));
    return SquidFamily(g, q, std::move(squids));
}

Json criterion_report_to_json(const CriterionReport& rep) {
    Json j;
    j["criterion"] = rep.criterion;
    j["q"] = rep.q;
    j["d"] = rep.d;
    j["required_vertices"] = rep.required_vertices;
    j["vertex_count"] = rep.vertex_count;
    j["vertex_count_ok"] = rep.vertex_count_ok;
    j["prime_power"] = {{"is_prime_power", rep.prime_power.is_prime_power},
                        {"p", rep.prime_power.p},
                        {"r", rep.prime_power.r}};
    j["max_degree"] = rep.max_degree;
    j["degree_bound_ok"] = rep.degree_bound_ok;
    j["all_slacks_positive"] = rep.all_slacks_positive;
    Json slacks = Json::array();
    for (const VertexSlack& s : rep.slacks)
        slacks.push_back({{"vertex", s.vertex},
                          {"nbr_count", s.nbr_count},
                          {"second_nbr_count", s.second_nbr_count},
                          {"slack", s.slack}});
    j["slacks"] = std::move(slacks);
    j["pass"] = rep.pass;
    return j;
}

Json homology_profile_to_json(const HomologyProfile& prof) {
    Json j;
    j["field"] = prof.field.name();
    Json betti = Json::object();
    for (const auto& [dim, b] : prof.betti) betti[std::to_string(dim)] = b;
    j["betti"] = std::move(betti);
    j["max_dim_computed"] = prof.max_dim_computed;
    j["complex_fully_covered"] = prof.complex_fully_covered;
    if (prof.euler_ok) j["euler_check"] = *prof.euler_ok;
    return j;
}

Json connectivity_to_json(const ConnectivityVerdict& verdict) {
    Json j;
    j["homologically_connected_through"] = verdict.homologically_connected_through;
    Json fields = Json::array();
    for (const Field& f : verdict.fields_tested) fields.push_back(f.name());
    j["fields"] = std::move(fields);
    j["torsion_suspected"] = verdict.torsion_suspected;
    Json profiles = Json::array();
    for (const HomologyProfile& p : verdict.profiles) profiles.push_back(homology_profile_to_json(p));
    j["profiles"] = std::move(profiles);
    return j;
}

Json counting_witness_to_json(const CountingWitness& w) {
    Json j;
    j["survivor"] = {w.survivor.base, w.survivor.level};
    j["census"] = {{"a", w.census.type_i_nonadjacent},
                   {"b", w.census.type_i_adjacent},
                   {"c", w.census.type_ii}};
    j["census_weight"] = w.census.weight();
    j["bound"] = w.bound;
    j["q"] = w.q;
    return j;
}

Json partition_to_json(const TverbergPartition& p, bool with_float) {
    Json j;
    j["parts"] = p.parts;
    Json witness = Json::array();
    for (const Rational& c : p.witness) witness.push_back(format_rational(c));
    j["witness"] = std::move(witness);
    Json coeffs = Json::array();
    for (const auto& part : p.coefficients) {
        Json row = Json::array();
        for (const Rational& c : part) row.push_back(format_rational(c));
        coeffs.push_back(std::move(row));
    }
    j["coefficients"] = std::move(coeffs);
    if (with_float) {
        Json wf = Json::array();
        for (const Rational& c : p.witness) wf.push_back(rational_to_double(c));
        j["witness_float"] = std::move(wf);
        j["float_values_inexact"] = true;
    }
    return j;
}

Json census_report_to_json(const CensusReport& rep) {
    auto census = [](const RegularGraphCensus& c) {
        return Json{{"N", c.N}, {"D", c.D}, {"q", c.q}, {"a", c.a}, {"b", c.b}};
    };
    Json j;
    j["census"] = census(rep.census);
    j["bound"] = rep.bound;
    if (rep.observed) j["observed"] = *rep.observed;
    j["holds"] = rep.holds;
    j["conclusive"] = rep.conclusive;
    j["notes"] = rep.notes;
    Json related = Json::array();
    for (const RegularGraphCensus& c : rep.related) related.push_back(census(c));
    j["related"] = std::move(related);
    if (!rep.best_coloring.empty()) j["best_coloring"] = rep.best_coloring;
    return j;
}

}  // namespace tvb
