#include "malg/io.hpp"

#include <fstream>
#include <sstream>

#include "malg/error.hpp"

namespace malg::io {

namespace {

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at(const std::string& base, const std::string& key) {
  return base + "/" + escape_pointer(key);
}

std::string at(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

const std::string& as_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, "expected a string");
  return j.get_ref<const std::string&>();
}

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(ptr, "missing key '" + key + "'");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& ptr) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known |= it.key() == k;
    if (!known) throw SchemaError(at(ptr, it.key()), "unknown key");
  }
}

// Array of element ids, all in `universe` when it is given.
ElementSet element_set(const json& j, const std::string& ptr, const ElementSet* universe,
                       bool allow_empty) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array of element ids");
  if (j.empty() && !allow_empty) throw SchemaError(ptr, "must be non-empty");
  ElementSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string& e = as_string(j[i], at(ptr, i));
    if (universe && !universe->count(e)) {
      throw SchemaError(at(ptr, i), "element '" + e + "' is not in the universe");
    }
    if (!out.insert(e).second) throw SchemaError(at(ptr, i), "duplicate element '" + e + "'");
  }
  return out;
}

}  // namespace

MultiAlgebraDocument parse_document(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "document must be a JSON object");
  only_keys(doc, {"signature", "universe", "partial", "operations", "designated"}, "");

  const json& sig_json = require(doc, "signature", "");
  if (!sig_json.is_object()) throw SchemaError("/signature", "expected an object of arities");
  Signature signature;
  for (auto it = sig_json.begin(); it != sig_json.end(); ++it) {
    if (!it->is_number_unsigned()) {
      throw SchemaError(at("/signature", it.key()), "arity must be a natural number");
    }
    if (it.key().empty()) throw SchemaError(at("/signature", it.key()), "empty symbol name");
    signature.add(it.key(), it->get<std::size_t>());
  }

  ElementSet universe = element_set(require(doc, "universe", ""), "/universe", nullptr, false);

  bool partial = false;
  if (auto it = doc.find("partial"); it != doc.end() && !it->is_null()) {
    if (!it->is_boolean()) throw SchemaError("/partial", "expected a boolean");
    partial = it->get<bool>();
  }

  Table table;
  if (auto ops = doc.find("operations"); ops != doc.end()) {
    if (!ops->is_object()) throw SchemaError("/operations", "expected an object");
    for (auto it = ops->begin(); it != ops->end(); ++it) {
      const std::string sym_ptr = at("/operations", it.key());
      auto arity = signature.arity(it.key());
      if (!arity) throw SchemaError(sym_ptr, "symbol not in the signature");
      if (!it->is_array()) throw SchemaError(sym_ptr, "expected an array of entries");
      for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string entry_ptr = at(sym_ptr, i);
        const json& entry = (*it)[i];
        if (!entry.is_object()) throw SchemaError(entry_ptr, "expected an object");
        only_keys(entry, {"args", "result"}, entry_ptr);
        const json& args_json = require(entry, "args", entry_ptr);
        if (!args_json.is_array()) throw SchemaError(at(entry_ptr, "args"), "expected an array");
        if (args_json.size() != *arity) {
          throw SchemaError(at(entry_ptr, "args"), "expected " + std::to_string(*arity) +
                                                       " arguments, got " +
                                                       std::to_string(args_json.size()));
        }
        Tuple args;
        for (std::size_t k = 0; k < args_json.size(); ++k) {
          const std::string& a = as_string(args_json[k], at(at(entry_ptr, "args"), k));
          if (!universe.count(a)) {
            throw SchemaError(at(at(entry_ptr, "args"), k), "element '" + a + "' is not in the universe");
          }
          args.push_back(a);
        }
        ElementSet result =
            element_set(require(entry, "result", entry_ptr), at(entry_ptr, "result"), &universe, false);
        Application app{it.key(), std::move(args)};
        if (!table.emplace(app, std::move(result)).second) {
          throw SchemaError(entry_ptr, "duplicate entry for " + to_string(app));
        }
      }
    }
  }

  std::optional<ElementSet> designated;
  if (auto it = doc.find("designated"); it != doc.end() && !it->is_null()) {
    designated = element_set(*it, "/designated", &universe, false);
  }

  MultiAlgebra algebra(std::move(signature), std::move(universe), std::move(table), !partial);
  ValidationReport report = validate(algebra);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw SchemaError("/operations", v.rule + " at " + v.location);
  }
  return {std::move(algebra), std::move(designated)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

MultiAlgebraDocument load_document(const std::string& path) {
  return parse_document(read_json_file(path));
}

json to_json(const MultiAlgebra& m, const std::optional<ElementSet>& designated) {
  json doc;
  doc["signature"] = json::object();
  for (const auto& [name, arity] : m.signature().symbols()) doc["signature"][name] = arity;
  doc["universe"] = json(std::vector<Element>(m.universe().begin(), m.universe().end()));
  doc["partial"] = !m.is_total();
  doc["operations"] = json::object();
  for (const auto& [name, arity] : m.signature().symbols()) doc["operations"][name] = json::array();
  for (const auto& [app, results] : m.table()) {
    doc["operations"][app.symbol].push_back(
        {{"args", app.args}, {"result", std::vector<Element>(results.begin(), results.end())}});
  }
  doc["designated"] = designated ? json(std::vector<Element>(designated->begin(), designated->end()))
                                 : json(nullptr);
  return doc;
}

NMatrix to_nmatrix(const MultiAlgebraDocument& doc) {
  if (!doc.designated) throw SchemaError("/designated", "an Nmatrix document needs designated values");
  if (!doc.algebra.is_total()) throw SchemaError("/partial", "an Nmatrix must be total");
  return NMatrix(doc.algebra, *doc.designated);
}

DirectedGraph parse_graph(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "graph document must be a JSON object");
  only_keys(doc, {"vertices", "arrows"}, "");
  const ElementSet vertices = element_set(require(doc, "vertices", ""), "/vertices", nullptr, false);
  DirectedGraph g;
  g.vertices.assign(vertices.begin(), vertices.end());
  const json& arrows = require(doc, "arrows", "");
  if (!arrows.is_array()) throw SchemaError("/arrows", "expected an array of pairs");
  std::set<std::pair<Element, Element>> seen;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string ptr = at("/arrows", i);
    if (!arrows[i].is_array() || arrows[i].size() != 2) throw SchemaError(ptr, "expected a pair");
    const std::string& u = as_string(arrows[i][0], at(ptr, 0));
    const std::string& v = as_string(arrows[i][1], at(ptr, 1));
    if (!vertices.count(u)) throw SchemaError(at(ptr, 0), "undeclared vertex '" + u + "'");
    if (!vertices.count(v)) throw SchemaError(at(ptr, 1), "undeclared vertex '" + v + "'");
    if (!seen.emplace(u, v).second) throw SchemaError(ptr, "duplicate arrow");
    g.arrows.emplace_back(u, v);
  }
  return g;
}

DirectedGraph load_graph(const std::string& path) { return parse_graph(read_json_file(path)); }

json to_json(const DirectedGraph& g) {
  json arrows = json::array();
  for (const auto& [u, v] : g.arrows) arrows.push_back({u, v});
  return {{"vertices", g.vertices}, {"arrows", arrows}};
}

MultiAlgebra graph_to_multialgebra(const DirectedGraph& g, Totality mode) {
  ElementSet universe(g.vertices.begin(), g.vertices.end());
  if (universe.empty()) throw InvalidArgument("graph has no vertices");
  std::map<Element, ElementSet> successors;
  for (const auto& [u, v] : g.arrows) {
    if (!universe.count(u) || !universe.count(v)) {
      throw InvalidArgument("arrow (" + u + ", " + v + ") references an undeclared vertex");
    }
    successors[u].insert(v);
  }
  Table table;
  for (const auto& u : universe) {
    auto it = successors.find(u);
    if (it == successors.end()) {
      if (mode == Totality::Total) throw NotTotal("vertex '" + u + "' has no successor");
      continue;
    }
    table.emplace(Application{"s", {u}}, it->second);
  }
  return MultiAlgebra(Signature{{"s", 1}}, std::move(universe), std::move(table),
                      mode == Totality::Total);
}

DirectedGraph multialgebra_to_graph(const MultiAlgebra& m) {
  const auto& symbols = m.signature().symbols();
  if (symbols.size() != 1 || symbols.begin()->second != 1) {
    throw InvalidArgument("graph export needs a signature with exactly one unary symbol");
  }
  DirectedGraph g;
  g.vertices.assign(m.universe().begin(), m.universe().end());
  for (const auto& [app, results] : m.table()) {
    for (const auto& r : results) g.arrows.emplace_back(app.args.front(), r);
  }
  return g;
}

std::string to_dot(const DirectedGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph {\n";
  for (const auto& v : g.vertices) out << "  " << quote(v) << ";\n";
  for (const auto& [u, v] : g.arrows) out << "  " << quote(u) << " -> " << quote(v) << ";\n";
  out << "}\n";
  return out.str();
}

json to_json(const Application& app) { return {{"symbol", app.symbol}, {"args", app.args}}; }

Application application_from_json(const json& j) {
  return {j.at("symbol").get<std::string>(), j.at("args").get<Tuple>()};
}

json to_json(const OverlapWitness& w) {
  return {{"first", to_json(w.first)}, {"second", to_json(w.second)}, {"shared", w.shared}};
}

OverlapWitness overlap_from_json(const json& j) {
  return {application_from_json(j.at("first")), application_from_json(j.at("second")),
          j.at("shared").get<Element>()};
}

json to_json(const ChainWitness& w) {
  json just = json::array();
  for (const auto& j : w.justifications) {
    just.push_back({{"symbol", j.app.symbol}, {"args", j.app.args}, {"position", j.position}});
  }
  return {{"stem", w.stem}, {"cycle", w.cycle}, {"justifications", just}};
}

ChainWitness chain_from_json(const json& j) {
  ChainWitness w;
  w.stem = j.at("stem").get<std::vector<Element>>();
  w.cycle = j.at("cycle").get<std::vector<Element>>();
  for (const auto& e : j.at("justifications")) {
    w.justifications.push_back({application_from_json(e), e.at("position").get<std::size_t>()});
  }
  return w;
}

json to_json(const GenerationTrace& t) {
  json stages = json::array();
  for (const auto& s : t.stages) stages.push_back(std::vector<Element>(s.begin(), s.end()));
  json producers = json::object();
  for (const auto& [e, p] : t.producers) {
    producers[e] = {{"symbol", p.app.symbol}, {"args", p.app.args}, {"stage", p.stage}};
  }
  return {{"seed", std::vector<Element>(t.seed.begin(), t.seed.end())},
          {"stages", stages},
          {"producers", producers}};
}

json to_json(const CounterWitness& w) {
  const char* kind = w.kind == CounterWitness::Kind::ImageOutside      ? "image-outside"
                     : w.kind == CounterWitness::Kind::ImageIncomplete ? "image-incomplete"
                                                                       : "undefined";
  return {{"kind", kind},
          {"application", to_json(w.app)},
          {"target_application", to_json(w.target_app)},
          {"element", w.element},
          {"image", w.image},
          {"target_results", std::vector<Element>(w.target_results.begin(), w.target_results.end())}};
}

json to_json(const FreenessVerdict& v) {
  json co = json::object();
  for (const auto& [x, gen] : v.strong_basis.certificate.co_generation) co[x] = gen;
  return {
      {"disconnected", v.disconnected},
      {"overlap", v.overlap ? to_json(*v.overlap) : json(nullptr)},
      {"ground", std::vector<Element>(v.ground.begin(), v.ground.end())},
      {"ground_generated", v.ground_generated()},
      {"trace", to_json(v.ground_generation.trace)},
      {"strong_basis", v.strong_basis.basis
                           ? json(std::vector<Element>(v.strong_basis.basis->begin(),
                                                       v.strong_basis.basis->end()))
                           : json(nullptr)},
      {"co_generation", co},
      {"chainless", v.chainless()},
      {"chain", v.chain ? to_json(*v.chain) : json(nullptr)},
      {"weakly_free", v.weakly_free},
      {"basis_clause_mismatch", v.basis_clause_mismatch},
      {"self_produced", std::vector<Element>(v.self_produced.begin(), v.self_produced.end())},
  };
}

Signature parse_signature_spec(const std::string& spec) {
  Signature sig;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
      throw InvalidArgument("signature entry '" + item + "' must look like name:arity");
    }
    const std::string digits = item.substr(colon + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
      throw InvalidArgument("bad arity in '" + item + "'");
    }
    sig.add(item.substr(0, colon), std::stoul(digits));
  }
  return sig;
}

}  // namespace malg::io
