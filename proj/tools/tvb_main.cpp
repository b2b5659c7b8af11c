#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "tvb/complex_checks.hpp"
#include "tvb/json_io.hpp"

namespace {

using namespace tvb;

// Exit codes: 0 pass, 1 checked and failed, 2 usage or resource error,
// 3 falsification sentinel (a theorem-guaranteed property observed to fail).
constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;
constexpr int exit_falsified = 3;

struct RunConfig {
    std::string command;
    std::string graph_path;
    std::string points_path;
    std::string constraints_path;
    std::string family_path;
    std::string output_path;
    int q = 0;
    int d = 2;
    int D = 0;
    int n = -1;
    std::vector<std::string> field_names;
    int max_dim = -3;  // -3 means unset; real values are >= -1
    std::uint64_t face_budget = std::uint64_t(1) << 20;
    std::uint64_t partition_budget = 1'000'000;
    std::uint64_t seed = 0;
    int workers = 0;
    bool with_float = false;
};

class Emitter {
  public:
    explicit Emitter(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot write " + path);
        }
    }

    void line(const Json& j) { (file_.is_open() ? file_ : std::cout) << j.dump() << "\n"; }

  private:
    std::ofstream file_;
};

// Every output line carries the run parameters so a report alone is enough
// to reproduce it.
void stamp(Json& j, const RunConfig& cfg) {
    j["command"] = cfg.command;
    j["seed"] = cfg.seed;
    j["face_budget"] = cfg.face_budget;
    j["partition_budget"] = cfg.partition_budget;
    j["workers"] = cfg.workers;
}

std::vector<Field> fields_from(const RunConfig& cfg) {
    if (cfg.field_names.empty()) return default_fields();
    std::vector<Field> fields;
    for (const std::string& name : cfg.field_names) {
        auto f = parse_field(name);
        if (!f) throw std::invalid_argument("unknown field " + name);
        fields.push_back(*f);
    }
    return fields;
}

HomologyOptions homology_options(const RunConfig& cfg) {
    HomologyOptions opts;
    opts.face_budget = cfg.face_budget;
    return opts;
}

SearchOptions search_options(const RunConfig& cfg) {
    SearchOptions opts;
    opts.partition_budget = cfg.partition_budget;
    opts.workers = cfg.workers;
    return opts;
}

PointConfig load_point_input(const RunConfig& cfg) {
    PointConfig points = load_points(cfg.points_path);
    if (!cfg.constraints_path.empty()) {
        Graph constraints = load_graph(cfg.constraints_path);
        if (constraints.vertex_count() != points.point_count())
            throw std::invalid_argument("constraint graph vertex count must match point count");
        points.constraint_graph = std::move(constraints);
    }
    return points;
}

void print_slack_table(const CriterionReport& rep) {
    std::fprintf(stderr, "vertex  |N(v)|  |N2(v)|  |N2|+2|N|  slack\n");
    for (const VertexSlack& s : rep.slacks) {
        std::int64_t load = s.second_nbr_count + 2 * s.nbr_count;
        std::fprintf(stderr, "%6d  %6lld  %7lld  %9lld  %5lld\n", s.vertex,
                     static_cast<long long>(s.nbr_count),
                     static_cast<long long>(s.second_nbr_count), static_cast<long long>(load),
                     static_cast<long long>(rep.q - load));
    }
}

int cmd_check(const RunConfig& cfg, Emitter& out) {
    Graph g = load_graph(cfg.graph_path);
    CriterionReport local = check_local_criterion(g, cfg.q, cfg.d);
    CriterionReport degree = check_degree_criterion(g, cfg.q, cfg.d);
    print_slack_table(local);
    Json j;
    j["local"] = criterion_report_to_json(local);
    j["degree"] = criterion_report_to_json(degree);
    // The degree bound implies the local one, so the local verdict decides.
    j["pass"] = local.pass;
    stamp(j, cfg);
    out.line(j);
    return local.pass ? exit_pass : exit_fail;
}

int cmd_homology(const RunConfig& cfg, Emitter& out) {
    Graph g = load_graph(cfg.graph_path);
    const int target = g.vertex_count() - 2;
    const int through = cfg.max_dim == -3 ? target : cfg.max_dim;
    IndependenceComplex complex(cartesian_product_complete(g, cfg.q));
    auto verdict =
        homological_connectivity(complex, through, fields_from(cfg), homology_options(cfg),
                                 cfg.workers);
    const bool slack_ok = slack_criterion_holds(g, cfg.q);
    Json j = connectivity_to_json(verdict);
    j["q"] = cfg.q;
    j["slack_criterion_holds"] = slack_ok;
    j["claimed_connectivity"] = target;
    stamp(j, cfg);
    out.line(j);
    if (slack_ok && verdict.homologically_connected_through < std::min(through, target)) {
        std::fprintf(stderr,
                     "falsification: slack criterion holds but connectivity stops at %d < %d\n",
                     verdict.homologically_connected_through, std::min(through, target));
        return exit_falsified;
    }
    return exit_pass;
}

int cmd_solve(const RunConfig& cfg, Emitter& out) {
    PointConfig points = load_point_input(cfg);
    SearchOutcome outcome = find_partition(points, cfg.q, search_options(cfg));
    Json j;
    j["found"] = outcome.partition.has_value();
    if (outcome.partition) j["partition"] = partition_to_json(*outcome.partition, cfg.with_float);
    j["exhausted"] = outcome.exhausted;
    j["truncated"] = outcome.truncated;
    j["falsification"] = outcome.falsification;
    j["candidates_checked"] = outcome.candidates_checked;
    j["warnings"] = outcome.warnings;
    stamp(j, cfg);
    out.line(j);
    if (outcome.partition) return exit_pass;
    if (outcome.falsification) return exit_falsified;
    return outcome.truncated ? exit_error : exit_fail;
}

int cmd_count(const RunConfig& cfg, Emitter& out) {
    PointConfig points = load_point_input(cfg);
    EnumerationOutcome outcome = enumerate_partitions(points, cfg.q, search_options(cfg));
    for (const TverbergPartition& p : outcome.partitions) {
        Json line = partition_to_json(p, cfg.with_float);
        line["command"] = cfg.command;
        out.line(line);
    }
    Json j;
    j["count"] = outcome.partitions.size();
    j["truncated"] = outcome.truncated;
    j["candidates_checked"] = outcome.candidates_checked;
    j["warnings"] = outcome.warnings;
    stamp(j, cfg);
    out.line(j);
    return outcome.truncated ? exit_error : exit_pass;
}

int cmd_census(const RunConfig& cfg, Emitter& out) {
    if (cfg.points_path.empty()) {
        if (cfg.n < 0)
            throw std::invalid_argument("census needs --points or --n");
        RegularGraphCensus census = regular_graph_census(cfg.n, cfg.D, cfg.q);
        Json j;
        j["census"] = {{"N", census.N}, {"D", census.D}, {"q", census.q},
                       {"a", census.a}, {"b", census.b}};
        j["bound"] = census.a > 0 ? (census.a + census.b - 1) / census.b : 0;
        std::vector<std::string> notes;
        if (census.a == 0) {
            if (cfg.n % 2 == 1 && cfg.D % 2 == 1)
                notes.push_back("no regular graphs: N and D both odd (parity)");
            else if (cfg.D >= cfg.n && cfg.n > 0)
                notes.push_back("no regular graphs: degree exceeds vertex count minus one");
            else
                notes.push_back("no regular graphs with these parameters");
        }
        j["notes"] = notes;
        stamp(j, cfg);
        out.line(j);
        return exit_pass;
    }
    PointConfig points = load_points(cfg.points_path);
    CensusReport report = census_lower_bound(points, cfg.q, cfg.D, search_options(cfg));
    Json j = census_report_to_json(report);
    stamp(j, cfg);
    out.line(j);
    if (!report.conclusive) return exit_error;
    if (report.holds) return exit_pass;
    const std::int64_t required =
        static_cast<std::int64_t>(points.dimension + 1) * (cfg.q - 1) + 1;
    const bool guarantee_applies = points.point_count() == required;
    if (guarantee_applies) {
        std::fprintf(stderr, "falsification: exhaustive count below the census lower bound\n");
        return exit_falsified;
    }
    return exit_fail;
}

int cmd_squid(const RunConfig& cfg, Emitter& out) {
    Graph g = load_graph(cfg.graph_path);
    SquidFamily family = load_squid_family(g, cfg.q, cfg.family_path);
    CountingWitness witness = verify_counting_lemma(family);
    Json wj = counting_witness_to_json(witness);
    stamp(wj, cfg);
    out.line(wj);

    const int target = g.vertex_count() - static_cast<int>(family.squids().size()) - 2;
    IndependenceComplex complex = remove_family(family);
    auto verdict =
        homological_connectivity(complex, target, fields_from(cfg), homology_options(cfg),
                                 cfg.workers);
    const bool holds = target <= -2 || verdict.homologically_connected_through >= target;
    Json j = connectivity_to_json(verdict);
    j["claimed_connectivity"] = target;
    j["holds"] = holds;
    stamp(j, cfg);
    out.line(j);
    if (!holds) {
        std::fprintf(stderr,
                     "falsification: squid removal leaves connectivity %d below claimed %d\n",
                     verdict.homologically_connected_through, target);
        return exit_falsified;
    }
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    CLI::App app{"Workbench for independence-complex connectivity, local Tverberg criteria, "
                 "squid removal, and exact constrained Tverberg partitions"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "seed for randomized searches");
        sub->add_option("--workers", cfg.workers, "worker thread count");
        sub->add_option("--output", cfg.output_path, "write report lines here instead of stdout");
        sub->add_flag("--float", cfg.with_float,
                      "add decimal approximations, marked inexact, to rational output");
    };

    CLI::App* check = app.add_subcommand("check", "run both Tverberg criteria on a graph");
    check->add_option("--graph", cfg.graph_path, "graph file (.json or edge list)")->required();
    check->add_option("--q", cfg.q, "number of parts")->required();
    check->add_option("--d", cfg.d, "ambient dimension")->required();
    add_common(check);

    CLI::App* homology = app.add_subcommand(
        "homology", "connectivity profile of the independence complex of G box K_q");
    homology->add_option("--graph", cfg.graph_path, "graph file")->required();
    homology->add_option("--q", cfg.q, "clique factor size")->required();
    homology->add_option("--field", cfg.field_names, "field: q, gf2, gf3, gf5 (repeatable)");
    homology->add_option("--max-dim", cfg.max_dim,
                         "check connectivity through this dimension (default |V(G)|-2)");
    homology->add_option("--face-budget", cfg.face_budget, "max faces per dimension");
    add_common(homology);

    CLI::App* solve = app.add_subcommand("solve", "find a constrained Tverberg partition");
    solve->add_option("--points", cfg.points_path, "point configuration file")->required();
    solve->add_option("--q", cfg.q, "number of parts")->required();
    solve->add_option("--constraints", cfg.constraints_path,
                      "graph whose edges no part may contain");
    solve->add_option("--partition-budget", cfg.partition_budget, "max candidate partitions");
    add_common(solve);

    CLI::App* count = app.add_subcommand("count", "enumerate all Tverberg partitions");
    count->add_option("--points", cfg.points_path, "point configuration file")->required();
    count->add_option("--q", cfg.q, "number of parts")->required();
    count->add_option("--constraints", cfg.constraints_path,
                      "graph whose edges no part may contain");
    count->add_option("--partition-budget", cfg.partition_budget, "max candidate partitions");
    add_common(count);

    CLI::App* census = app.add_subcommand(
        "census", "regular-graph census and the partition-count lower bound");
    census->add_option("--points", cfg.points_path,
                       "point configuration file (enables the observed-count comparison)");
    census->add_option("--n", cfg.n, "vertex count for a pure census");
    census->add_option("--D", cfg.D, "constraint graph degree")->required();
    census->add_option("--q", cfg.q, "number of parts")->required();
    census->add_option("--partition-budget", cfg.partition_budget, "max candidate partitions");
    add_common(census);

    CLI::App* squid = app.add_subcommand(
        "squid", "verify the counting bound and removal connectivity for a squid family");
    squid->add_option("--graph", cfg.graph_path, "graph file")->required();
    squid->add_option("--q", cfg.q, "clique factor size")->required();
    squid->add_option("--family", cfg.family_path, "squid family JSON file")->required();
    squid->add_option("--field", cfg.field_names, "field: q, gf2, gf3, gf5 (repeatable)");
    squid->add_option("--face-budget", cfg.face_budget, "max faces per dimension");
    add_common(squid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_pass : exit_error;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.q < 2) {
        std::fprintf(stderr, "error: q must be at least 2\n");
        return exit_error;
    }
    if (cfg.workers < 1) cfg.workers = 1;

    try {
        Emitter out(cfg.output_path);
        if (cfg.command == "check") return cmd_check(cfg, out);
        if (cfg.command == "homology") return cmd_homology(cfg, out);
        if (cfg.command == "solve") return cmd_solve(cfg, out);
        if (cfg.command == "count") return cmd_count(cfg, out);
        if (cfg.command == "census") return cmd_census(cfg, out);
        if (cfg.command == "squid") return cmd_squid(cfg, out);
        std::fprintf(stderr, "error: unknown command\n");
        return exit_error;
    } catch (const FalsificationError& e) {
        std::fprintf(stderr, "falsification: %s\n", e.what());
        return exit_falsified;
    } catch (const CriterionViolationError& e) {
        std::fprintf(stderr, "criterion violation: %s\n", e.what());
        return exit_fail;
    } catch (const BudgetError& e) {
        std::fprintf(stderr, "budget exceeded: %s\n", e.what());
        return exit_error;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_error;
    }
}
