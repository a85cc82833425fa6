#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "malg/core.hpp"

namespace malg {

/// B(A): union of all defined result sets.
ElementSet build(const MultiAlgebra& a);

/// G(A): universe minus build.
ElementSet ground(const MultiAlgebra& a);

/// How a generated element first entered the closure.
struct Producer {
  Application app;
  std::size_t stage;  // index of the first stage containing the element
};

/// Stage decomposition of ⟨S⟩.
///
/// stages[0] = S plus every 0-ary result; stages[m+1] adds the results of
/// applications whose arguments all lie in stages[m]. Stages strictly
/// increase and the last one is the fixpoint. Every element of the closure
/// that is not in the seed has exactly one recorded producer.
struct GenerationTrace {
  ElementSet seed;
  std::vector<ElementSet> stages;
  std::map<Element, Producer> producers;

  const ElementSet& closure() const { return stages.back(); }

  /// Least stage index containing `e`, nullopt when e is not generated.
  std::optional<std::size_t> stage_of(const Element& e) const;
};

/// ⟨seed⟩ with stages and producers. Throws SeedOutsideUniverse.
GenerationTrace generate(const MultiAlgebra& a, const ElementSet& seed);

struct GroundGeneration {
  bool generated;
  GenerationTrace trace;

  explicit operator bool() const { return generated; }
};

GroundGeneration is_generated_by_ground(const MultiAlgebra& a);

/// Two distinct defined applications whose result sets meet.
struct OverlapWitness {
  Application first;
  Application second;
  Element shared;
};

/// Returns an overlap when `a` is not disconnected. The first application
/// is the earlier one in table order.
std::optional<OverlapWitness> find_overlap(const MultiAlgebra& a);

inline bool is_disconnected(const MultiAlgebra& a) { return !find_overlap(a); }

/// Re-checks a witness against `a`.
bool verify_overlap(const MultiAlgebra& a, const OverlapWitness& w);

/// Record of the co-generation test behind strong_basis(). `candidate` is
/// the intersection of all generating sets: the x with ⟨A \ {x}⟩ ≠ A.
struct BasisCertificate {
  ElementSet candidate;
  std::map<Element, bool> co_generation;  // x -> whether ⟨A \ {x}⟩ = A
};

struct StrongBasisResult {
  std::optional<ElementSet> basis;
  BasisCertificate certificate;
};

/// Minimum generating set, when one exists. Polynomial: computes the
/// intersection of all generating sets and checks whether it generates.
StrongBasisResult strong_basis(const MultiAlgebra& a);

/// o_B(x): least stage of ⟨basis⟩ containing x.
/// Throws NotGenerating unless ⟨basis⟩ is the universe, and
/// ElementOutsideClosure for an element not in the universe.
std::size_t b_order(const MultiAlgebra& a, const ElementSet& basis, const Element& x);

}  // namespace malg
