#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "malg/core.hpp"
#include "malg/structure.hpp"

namespace malg {

/// Why r -> x is an edge: r is a result of `app`, which has x at `position`.
struct Justification {
  Application app;
  std::size_t position;

  friend bool operator==(const Justification&, const Justification&) = default;
};

/// Edge (r, x) whenever r ∈ σ(..., x, ...) for a defined application.
///
/// A chain a_0, a_1, ... is exactly an infinite walk in this graph, so a
/// finite multialgebra is chainless iff the graph is acyclic.
struct DeconstructionGraph {
  ElementSet nodes;
  // First justification in table order for each edge.
  std::map<std::pair<Element, Element>, Justification> edges;

  std::vector<Element> successors(const Element& r) const;
};

DeconstructionGraph deconstruction_graph(const MultiAlgebra& a);

/// Lasso: stem[0] -> ... -> stem.back() -> cycle[0] -> ... -> cycle.back()
/// -> cycle[0]. Unrolled, it is the chain stem, cycle, cycle, ...
///
/// `justifications` has one entry per edge: the stem edges (including the
/// one into cycle[0]) followed by the cycle edges.
struct ChainWitness {
  std::vector<Element> stem;
  std::vector<Element> cycle;
  std::vector<Justification> justifications;

  /// First n elements of the infinite chain.
  std::vector<Element> unroll(std::size_t n) const;
};

std::string describe(const ChainWitness& w);

/// Lasso witness if `a` has a chain. Depth-first search over the universe
/// in order; the first back edge found closes the cycle.
std::optional<ChainWitness> find_chain(const MultiAlgebra& a);

inline bool is_chainless(const MultiAlgebra& a) { return !find_chain(a); }

/// Re-checks every edge and justification of a witness against `a`.
bool verify_chain(const MultiAlgebra& a, const ChainWitness& w);

/// The decidable clauses of the weak-freeness characterization.
///
/// weakly_free = disconnected ∧ ground_generated. "disconnected ∧ chainless"
/// must agree with it; is_weakly_free throws EquivalenceViolation otherwise.
///
/// "disconnected ∧ has strong basis" is reported separately: it disagrees
/// on structures where an element's only producing application takes that
/// element as an argument (e.g. s(x) = {x}). Such an element is in every
/// generating set, so a strong basis can exist without the ground
/// generating. `basis_clause_mismatch` flags this case and
/// `self_produced` lists the elements responsible.
struct FreenessVerdict {
  std::optional<OverlapWitness> overlap;
  bool disconnected = false;
  ElementSet ground;
  GroundGeneration ground_generation;
  StrongBasisResult strong_basis;
  std::optional<ChainWitness> chain;
  bool weakly_free = false;
  bool basis_clause_mismatch = false;
  ElementSet self_produced;

  bool ground_generated() const { return ground_generation.generated; }
  bool has_strong_basis() const { return strong_basis.basis.has_value(); }
  bool chainless() const { return !chain; }
};

FreenessVerdict is_weakly_free(const MultiAlgebra& a);

/// Elements whose every producing application has the element among its
/// arguments and which lie outside ⟨G(A)⟩.
ElementSet self_produced_elements(const MultiAlgebra& a);

}  // namespace malg
