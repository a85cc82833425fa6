#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "malg/chains.hpp"
#include "malg/core.hpp"
#include "malg/hom.hpp"
#include "malg/nmatrix.hpp"
#include "malg/structure.hpp"

namespace malg::io {

using nlohmann::json;

/// A multialgebra document, optionally carrying designated values.
///
///   {"signature": {"s": 1}, "universe": ["-1", "1"], "partial": false,
///    "operations": {"s": [{"args": ["-1"], "result": ["1"]}, ...]},
///    "designated": null}
struct MultiAlgebraDocument {
  MultiAlgebra algebra;
  std::optional<ElementSet> designated;
};

/// Throws SchemaError with a JSON-pointer location on any malformed or
/// invalid document (including validate() failures).
MultiAlgebraDocument parse_document(const json& doc);
MultiAlgebraDocument load_document(const std::string& path);

/// Canonical form: sorted keys, universe and results in universe order.
json to_json(const MultiAlgebra& m, const std::optional<ElementSet>& designated = std::nullopt);

NMatrix to_nmatrix(const MultiAlgebraDocument& doc);

/// Directed graph: {"vertices": [...], "arrows": [["u", "v"], ...]}.
struct DirectedGraph {
  std::vector<Element> vertices;
  std::vector<std::pair<Element, Element>> arrows;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
};

DirectedGraph parse_graph(const json& doc);
DirectedGraph load_graph(const std::string& path);
json to_json(const DirectedGraph& g);

enum class Totality { Partial, Total };

/// Σ_s-multialgebra with s(u) = { v : (u, v) is an arrow }. In total mode a
/// vertex without successors throws NotTotal; in partial mode s(u) is left
/// undefined for it.
MultiAlgebra graph_to_multialgebra(const DirectedGraph& g, Totality mode);

/// Inverse of graph_to_multialgebra. Throws InvalidArgument unless the
/// signature is a single unary symbol. Vertices and arrows come out sorted.
DirectedGraph multialgebra_to_graph(const MultiAlgebra& m);

/// One `digraph` with vertex ids quoted verbatim.
std::string to_dot(const DirectedGraph& g);

json to_json(const Application& app);
Application application_from_json(const json& j);
json to_json(const OverlapWitness& w);
OverlapWitness overlap_from_json(const json& j);
json to_json(const ChainWitness& w);
ChainWitness chain_from_json(const json& j);
json to_json(const GenerationTrace& t);
json to_json(const CounterWitness& w);
json to_json(const FreenessVerdict& v);

/// Parses a {"name": arity} or "s:1,f:2" signature.
Signature parse_signature_spec(const std::string& spec);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace malg::io
