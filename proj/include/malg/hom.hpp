#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "malg/chains.hpp"
#include "malg/core.hpp"
#include "malg/error.hpp"
#include "malg/structure.hpp"

namespace malg {

/// One question put to a collection of choices: where does `element` of
/// σ_A(source_args) go inside σ_B(target_args)?
struct ChoiceQuery {
  const std::string& symbol;
  const Tuple& source_args;
  const Tuple& target_args;
  const ElementSet& source_results;
  const ElementSet& target_results;
  const Element& element;
};

/// Collection of choices from A to B, answered lazily per query.
///
/// The full collection has one function per symbol and pair of argument
/// tuples; only the entries actually consulted are ever computed. Answers
/// are deterministic in (strategy, query).
class ChoiceOracle {
 public:
  enum class Strategy { First, InjectiveGreedy, SeededRandom, Explicit };
  using Callback = std::function<Element(const ChoiceQuery&)>;

  /// Every element goes to the first target result.
  static ChoiceOracle first();
  /// The i-th source result goes to the i-th target result; throws
  /// OracleRangeViolation when the source set is larger.
  static ChoiceOracle injective_greedy();
  static ChoiceOracle seeded_random(std::uint64_t seed);
  static ChoiceOracle explicit_table(Callback callback, std::string name = "explicit");

  Strategy strategy() const { return strategy_; }
  std::uint64_t seed() const { return seed_; }
  std::string name() const;

  /// Throws OracleRangeViolation if the answer leaves target_results.
  Element answer(const ChoiceQuery& query) const;

 private:
  ChoiceOracle(Strategy strategy, std::uint64_t seed, Callback callback, std::string name)
      : strategy_(strategy), seed_(seed), callback_(std::move(callback)), name_(std::move(name)) {}

  Strategy strategy_;
  std::uint64_t seed_;
  Callback callback_;
  std::string name_;
};

/// Parses "first", "injective" or "random".
ChoiceOracle oracle_from_name(const std::string& name, std::uint64_t seed);

/// Which clause of weak freeness failed.
class NotWeaklyFree : public Error {
 public:
  NotWeaklyFree(std::string message, std::optional<OverlapWitness> overlap,
                ElementSet ungenerated)
      : Error(std::move(message)), overlap_(std::move(overlap)), ungenerated_(std::move(ungenerated)) {}

  const std::optional<OverlapWitness>& overlap() const { return overlap_; }
  /// Elements outside ⟨G(A)⟩ (empty when the failure is an overlap).
  const ElementSet& ungenerated() const { return ungenerated_; }

 private:
  std::optional<OverlapWitness> overlap_;
  ElementSet ungenerated_;
};

/// Key of a consulted choice: (symbol, source args, target args, element).
using ChoiceKey = std::tuple<std::string, Tuple, Tuple, Element>;

/// The homomorphism f_C extending a seed map along a collection of choices.
struct CdfExtension {
  Mapping map;
  Mapping seed_map;
  std::string oracle_name;
  std::map<ChoiceKey, Element> consulted;
};

/// Extends `seed_map` (defined on G(a)) to the unique homomorphism a -> b
/// that agrees with the oracle on every defined application of a.
///
/// Throws NotWeaklyFree, InvalidArgument for a seed map that is not total on
/// the ground or leaves b, UndefinedTargetApplication when b lacks a needed
/// application, and OracleRangeViolation.
CdfExtension extend_cdf(const MultiAlgebra& a, const Mapping& seed_map, const MultiAlgebra& b,
                        const ChoiceOracle& oracle);

/// Structure on f(A) with σ(c...) = ∪{ f(σ_A(a...)) : f(a...) = c... }.
/// Throws NotHomomorphism.
MultiAlgebra direct_image(const ElementMap& f);

/// M(A): largest result-set size. Throws NoDefinedApplications.
std::size_t m_of(const MultiAlgebra& a);

/// Injective full homomorphism from a weakly free multialgebra into a
/// truncated term multialgebra over its ground.
struct TermEmbedding {
  std::size_t kappa = 1;
  std::size_t depth = 0;
  MultiAlgebra codomain;  // truncate_mt(Σ, G(A), kappa, depth)
  Mapping mapping;
};

/// Ground elements become variables; an element produced by σ(a...) becomes
/// σ^β(t...) with β its rank inside the result set in universe order.
/// Throws NotWeaklyFree.
TermEmbedding embed_into_terms(const MultiAlgebra& a);

/// Bounded-depth instance of the argument that no multialgebra has the
/// universal mapping property: two different homomorphisms
/// T(Σ, V) -> mT(Σ, V, 2) both extend the identity on V.
struct UmpDemo {
  MultiAlgebra terms;       // T(Σ, V) up to depth, formula-style names
  MultiAlgebra multiterms;  // mT(Σ, V, 2) up to depth
  Mapping id_c;             // chooses superscript 0 everywhere
  Mapping id_d;             // chooses superscript 1 everywhere
  bool both_homomorphisms = false;
  bool agree_on_variables = false;
  std::size_t composite_terms = 0;
  std::size_t differing_terms = 0;

  bool refutes() const {
    return both_homomorphisms && agree_on_variables && composite_terms > 0 &&
           composite_terms == differing_terms;
  }
};

/// Throws EmptySignature, EmptyUniverse, InvalidArgument for depth 0.
UmpDemo ump_refutation_demo(const Signature& signature, const ElementSet& variables,
                            std::size_t depth);

}  // namespace malg
