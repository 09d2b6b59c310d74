#ifndef PAIRWALK_GRAPH_IO_HPP
#define PAIRWALK_GRAPH_IO_HPP

#include <json.hpp>
#include <string>

#include "pairwalk/coherent.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/states.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk {

/// Graph JSON: {"n": int, "edges": [[u, v, w?], ...], "labels": [...]?}
/// Edge weight defaults to 1.0 when omitted.
WeightedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const WeightedGraph& g);

WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const WeightedGraph& g, const std::string& path);

/// "K5" | "P4" | "C6" | "K2,3" family tokens.
bool is_named_graph(const std::string& token);
WeightedGraph named_graph(const std::string& token);

/// Named token when it matches, otherwise a JSON file path.
WeightedGraph load_graph(const std::string& token_or_path);

/// "vertex:a" | "pair:a,b" | "spair:a,b,s" | "vec:v0,v1,...".
RealPureState parse_state(const std::string& spec, int n);

nlohmann::json certificate_to_json(const TransferCertificate& cert);
nlohmann::json permutation_to_json(const PermutationCertificate& cert);

}  // namespace pairwalk

#endif
