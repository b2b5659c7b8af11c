#pragma once

#include "tvb/census.hpp"
#include "tvb/criteria.hpp"
#include "tvb/squid.hpp"

#include <json.hpp>

#include <iosfwd>

namespace tvb {

using Json = nlohmann::json;

// Graph files: {"vertices": n, "edges": [[u,v],...], "labels": [...]} as
// JSON, or a plain edge list whose header line is "n <edge count>".
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// Loads by extension: ".json" parses the JSON schema, anything else the
// edge-list format.
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// Point files: {"d": 2, "points": [["1/2","3"],...]}. Coordinates are
// rational strings or integers; floats are rejected to keep exactness.
// Constraint graphs travel in their own graph files.
Json points_to_json(const PointConfig& cfg);
PointConfig points_from_json(const Json& j);
PointConfig load_points(const std::string& path);

// Squid family files: a list of {"body": v, "kind": "i"|"ii",
// "partner": v?, "levels": [i] or [i,j], "arms": [[v,l],...]}.
Json squid_to_json(const Squid& s);
Squid squid_from_json(const Graph& g, int q, const Json& j);
Json family_to_json(const SquidFamily& family);
SquidFamily load_squid_family(const Graph& g, int q, const std::string& path);

Json criterion_report_to_json(const CriterionReport& rep);
Json homology_profile_to_json(const HomologyProfile& prof);
Json connectivity_to_json(const ConnectivityVerdict& verdict);
Json counting_witness_to_json(const CountingWitness& w);
Json partition_to_json(const TverbergPartition& p, bool with_float = false);
Json census_report_to_json(const CensusReport& rep);

}  // namespace tvb
