#include "malg/chains.hpp"

#include <algorithm>

#include "malg/error.hpp"

namespace malg {

std::vector<Element> DeconstructionGraph::successors(const Element& r) const {
  std::vector<Element> out;
  for (auto it = edges.lower_bound({r, Element{}}); it != edges.end() && it->first.first == r;
       ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

DeconstructionGraph deconstruction_graph(const MultiAlgebra& a) {
  DeconstructionGraph g;
  g.nodes = a.universe();
  for (const auto& [app, results] : a.table()) {
    for (std::size_t pos = 0; pos < app.args.size(); ++pos) {
      for (const auto& r : results) {
        g.edges.emplace(std::make_pair(r, app.args[pos]), Justification{app, pos});
      }
    }
  }
  return g;
}

std::vector<Element> ChainWitness::unroll(std::size_t n) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < stem.size() ? stem[i] : cycle[(i - stem.size()) % cycle.size()]);
  }
  return out;
}

std::string describe(const ChainWitness& w) {
  std::string out;
  if (!w.stem.empty()) {
    out += "stem ";
    for (const auto& e : w.stem) out += e + "→";
    out += w.cycle.front() + ", ";
  }
  out += "cycle ";
  for (const auto& e : w.cycle) out += e + "→";
  return out + w.cycle.front();
}

namespace {

enum class Color { White, Grey, Black };

struct ChainSearch {
  const DeconstructionGraph& graph;
  std::map<Element, Color> color;
  std::vector<Element> path;
  std::optional<ChainWitness> found;

  bool visit(const Element& v) {
    color[v] = Color::Grey;
    path.push_back(v);
    for (const auto& w : graph.successors(v)) {
      Color c = color[w];
      if (c == Color::Grey) {
        auto start = std::find(path.begin(), path.end(), w);
        ChainWitness witness;
        witness.stem.assign(path.begin(), start);
        witness.cycle.assign(start, path.end());
        found = std::move(witness);
        return true;
      }
      if (c == Color::White && visit(w)) return true;
    }
    path.pop_back();
    color[v] = Color::Black;
    return false;
  }
};

}  // namespace

std::optional<ChainWitness> find_chain(const MultiAlgebra& a) {
  const DeconstructionGraph graph = deconstruction_graph(a);
  ChainSearch search{graph, {}, {}, std::nullopt};
  for (const auto& v : graph.nodes) search.color[v] = Color::White;
  for (const auto& v : graph.nodes) {
    if (search.color[v] == Color::White && search.visit(v)) break;
  }
  if (!search.found) return std::nullopt;

  ChainWitness& w = *search.found;
  std::vector<Element> walk = w.stem;
  walk.insert(walk.end(), w.cycle.begin(), w.cycle.end());
  walk.push_back(w.cycle.front());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    w.justifications.push_back(graph.edges.at({walk[i], walk[i + 1]}));
  }
  return search.found;
}

bool verify_chain(const MultiAlgebra& a, const ChainWitness& w) {
  if (w.cycle.empty()) return false;
  std::vector<Element> walk = w.stem;
  walk.insert(walk.end(), w.cycle.begin(), w.cycle.end());
  walk.push_back(w.cycle.front());
  if (w.justifications.size() != walk.size() - 1) return false;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const Justification& j = w.justifications[i];
    const ElementSet* results = a.results(j.app);
    if (!results || !results->count(walk[i])) return false;
    if (j.position >= j.app.args.size() || j.app.args[j.position] != walk[i + 1]) {
      return false;
    }
  }
  return true;
}

ElementSet self_produced_elements(const MultiAlgebra& a) {
  const ElementSet reached = generate(a, ground(a)).closure();
  std::map<Element, bool> only_self;  // false once a producer lacks the element
  for (const auto& [app, results] : a.table()) {
    for (const auto& r : results) {
      const bool has_self = std::find(app.args.begin(), app.args.end(), r) != app.args.end();
      auto [it, inserted] = only_self.emplace(r, has_self);
      if (!inserted) it->second = it->second && has_self;
    }
  }
  ElementSet out;
  for (const auto& [e, self] : only_self) {
    if (self && !reached.count(e)) out.insert(e);
  }
  return out;
}

FreenessVerdict is_weakly_free(const MultiAlgebra& a) {
  FreenessVerdict v;
  v.overlap = find_overlap(a);
  v.disconnected = !v.overlap;
  v.ground = ground(a);
  v.ground_generation = is_generated_by_ground(a);
  v.strong_basis = strong_basis(a);
  v.chain = find_chain(a);

  const bool by_ground = v.disconnected && v.ground_generated();
  const bool by_chains = v.disconnected && v.chainless();
  const bool by_basis = v.disconnected && v.has_strong_basis();
  if (by_ground != by_chains) {
    throw EquivalenceViolation(
        "ground generation and chainlessness disagree on a disconnected structure");
  }
  v.weakly_free = by_ground;
  if (by_basis != by_ground) {
    v.basis_clause_mismatch = true;
    v.self_produced = self_produced_elements(a);
  }
  return v;
}

}  // namespace malg
