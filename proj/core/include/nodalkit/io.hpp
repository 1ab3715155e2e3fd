#ifndef NODALKIT_IO_HPP
#define NODALKIT_IO_HPP

#include "nodalkit/builders.hpp"
#include "nodalkit/graph.hpp"
#include "nodalkit/groups.hpp"
#include "nodalkit/nodal.hpp"
#include "nodalkit/spectra.hpp"
#include "nodalkit/verify.hpp"

#include <json.hpp>

#include <string>

namespace nodalkit {

using Json = nlohmann::ordered_json;

/// Canonical graph JSON: {"n": <int>, "edges": [[u,v], ...]} with u < v and
/// edges sorted lexicographically.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Plain edge-list text: first line n, then one "u v" pair per line.
std::string graph_to_edgelist(const Graph& g);
Graph graph_from_edgelist(const std::string& text);

/// Undirected DOT for visualization.
std::string graph_to_dot(const Graph& g);

/// {"parts": [[2,3],[4],[11]]}
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

/// Group spec strings: "cyclic:12", "abelian:2,2,4", "semidirect:p=2,q=3",
/// "table:path.json" (JSON 2-D array read from that path).
FiniteGroup parse_group_spec(const std::string& spec);

/// {"clusters": [{"value": v, "multiplicity": m}], "basis": [{"value": ...,
/// "vector_num": [...], "vector_den": d, "family": "Z|X|Y|CONST|NUMERIC"}]}.
/// Numeric vectors are fixed-point scaled by 10^12; values within 1e-9 of an
/// integer are emitted as JSON integers, with the raw double kept alongside.
Json spectrum_report_to_json(const EigenBasis& basis);

Json sign_vector_to_json(const SignVector& f);
Json nodal_report_to_json(const NodalReport& report);

/// Deterministic: the volatile runtime is carried by the struct but excluded
/// from the JSON so repeated runs are byte-identical.
Json theorem_report_to_json(const TheoremReport& report);
Json theorem_reports_to_json(const std::vector<TheoremReport>& reports);

} // namespace nodalkit

#endif
