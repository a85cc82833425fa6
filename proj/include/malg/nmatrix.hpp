#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "malg/core.hpp"
#include "malg/terms.hpp"

namespace malg {

/// Non-deterministic matrix: a total multialgebra with designated values.
class NMatrix {
 public:
  /// Throws InvalidArgument unless `algebra` validates as total and
  /// `designated` is a non-empty subset of its universe.
  NMatrix(MultiAlgebra algebra, ElementSet designated);

  const MultiAlgebra& algebra() const { return algebra_; }
  const ElementSet& designated() const { return designated_; }
  bool is_designated(const Element& e) const { return designated_.count(e) != 0; }

 private:
  MultiAlgebra algebra_;
  ElementSet designated_;
};

/// A formula is a Term with every superscript 0 (see parse_formula).
using Formula = Term;

/// Value of each subformula, keyed by its print_formula text. Shared
/// subformulas carry a single value.
using Valuation = std::map<std::string, Element>;

/// Calls `visit` on every legal valuation over the union of the formulas'
/// subformulas, in a fixed order: atoms outermost, then subformulas by
/// increasing order, values in universe order. `visit` returns false to
/// stop. Throws UnknownConnective.
void for_each_legal_valuation(std::span<const Formula> formulas, const NMatrix& m,
                              const std::function<bool(const Valuation&)>& visit);

std::vector<Valuation> legal_valuations(const Formula& phi, const NMatrix& m);

/// ν(σ(α...)) ∈ σ(ν(α)...) at every composite subformula of `formulas`.
bool is_legal(const Valuation& v, std::span<const Formula> formulas, const NMatrix& m);

struct ConsequenceResult {
  bool holds = true;
  std::optional<Valuation> countervaluation;

  explicit operator bool() const { return holds; }
};

ConsequenceResult is_tautology(const Formula& phi, const NMatrix& m);

/// Every legal valuation designating all of `gamma` designates `phi`.
ConsequenceResult entails(std::span<const Formula> gamma, const Formula& phi, const NMatrix& m);

}  // namespace malg
