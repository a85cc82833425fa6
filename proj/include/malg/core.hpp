#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace malg {

// Elements are opaque ids. std::set gives the fixed lexicographic universe
// order that every deterministic choice in the library relies on.
using Element = std::string;
using ElementSet = std::set<Element>;
using Tuple = std::vector<Element>;
using Mapping = std::map<Element, Element>;

/// Finite signature: operation symbol name -> arity.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<std::pair<const std::string, std::size_t>> symbols);
  explicit Signature(std::map<std::string, std::size_t> symbols);

  /// Adds a symbol; throws InvalidArgument on an empty or duplicate name.
  void add(const std::string& name, std::size_t arity);

  bool contains(const std::string& name) const { return symbols_.count(name) != 0; }
  std::optional<std::size_t> arity(const std::string& name) const;
  const std::map<std::string, std::size_t>& symbols() const { return symbols_; }
  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }

  /// Largest arity present, 0 for the empty signature.
  std::size_t max_arity() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, std::size_t> symbols_;
};

/// Σ^κ: every base symbol σ split into κ superscripted copies σ^β.
class ExpandedSignature {
 public:
  ExpandedSignature(Signature base, std::size_t kappa);

  const Signature& base() const { return base_; }
  std::size_t kappa() const { return kappa_; }

 private:
  Signature base_;
  std::size_t kappa_;
};

/// One application σ(a_1, ..., a_n) of a multioperation.
struct Application {
  std::string symbol;
  Tuple args;

  friend auto operator<=>(const Application&, const Application&) = default;
};

std::string to_string(const Application& app);
std::string to_string(const ElementSet& set);

using Table = std::map<Application, ElementSet>;

/// Finite, possibly partial Σ-multialgebra.
///
/// The table is sparse: an application absent from it is undefined. Every
/// predicate in the library quantifies over defined applications only;
/// `is_total()` is the opt-in claim that every application is defined,
/// checked by validate().
///
/// Construction does not validate. Call validate() on untrusted input.
class MultiAlgebra {
 public:
  MultiAlgebra(Signature signature, ElementSet universe, Table table, bool total);

  const Signature& signature() const { return signature_; }
  const ElementSet& universe() const { return universe_; }
  const Table& table() const { return table_; }
  bool is_total() const { return total_; }

  bool contains(const Element& e) const { return universe_.count(e) != 0; }

  /// Result set of a defined application, nullptr when undefined.
  const ElementSet* results(const Application& app) const;
  const ElementSet* results(const std::string& symbol, const Tuple& args) const;

  std::size_t size() const { return universe_.size(); }

  friend bool operator==(const MultiAlgebra&, const MultiAlgebra&) = default;

 private:
  Signature signature_;
  ElementSet universe_;
  Table table_;
  bool total_;
};

struct Violation {
  std::string location;
  std::string rule;  // "empty-universe", "empty-result", "out-of-universe",
                     // "unknown-symbol", "arity-mismatch", "missing-entry"

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& rule) const;
};

/// Reports every structural problem; never throws.
ValidationReport validate(const MultiAlgebra& m);

/// Total function from a source universe into a target universe.
///
/// Holds non-owning references; both algebras must outlive the map.
class ElementMap {
 public:
  /// Throws InvalidArgument unless `mapping` is defined exactly on the
  /// source universe and lands in the target universe.
  ElementMap(const MultiAlgebra& source, const MultiAlgebra& target, Mapping mapping);

  const MultiAlgebra& source() const { return *source_; }
  const MultiAlgebra& target() const { return *target_; }
  const Mapping& mapping() const { return mapping_; }

  const Element& operator()(const Element& e) const;
  Tuple apply(const Tuple& args) const;
  ElementSet apply(const ElementSet& set) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

 private:
  const MultiAlgebra* source_;
  const MultiAlgebra* target_;
  Mapping mapping_;
};

/// Evidence for a failed homomorphism or submultialgebra check.
struct CounterWitness {
  enum class Kind {
    ImageOutside,     // `element` maps outside the target result set
    ImageIncomplete,  // `element` of the target result set is not hit (fullness)
    Undefined,        // the comparison application is undefined
  };

  Kind kind;
  Application app;          // source-side application
  Application target_app;   // comparison application
  Element element;
  Element image;            // image of `element` (ImageOutside only)
  ElementSet target_results;
};

std::string describe(const CounterWitness& w);

struct CheckResult {
  bool holds = true;
  std::optional<CounterWitness> witness;

  explicit operator bool() const { return holds; }
};

/// f(σ_A(a...)) ⊆ σ_B(f(a)...) on every defined source application.
/// Throws UndefinedTargetApplication when the target side is undefined.
CheckResult is_homomorphism(const ElementMap& f);

/// Like is_homomorphism with equality instead of inclusion.
CheckResult is_full_homomorphism(const ElementMap& f);

bool is_isomorphism(const ElementMap& f);

/// `b` is a submultialgebra of `a`: b's universe is a subset of a's and every
/// defined application of b is defined in a with a larger result set.
/// Throws SignatureMismatch when the signatures differ.
CheckResult is_submultialgebra(const MultiAlgebra& b, const MultiAlgebra& a);

/// g ∘ f as a plain mapping (f: A -> B, g: B -> C).
Mapping compose(const Mapping& f, const Mapping& g);

Mapping identity_mapping(const ElementSet& universe);

/// Same structure with every element renamed through `rename` (must be
/// injective on the universe).
MultiAlgebra rename(const MultiAlgebra& m, const Mapping& rename);

/// Restricts `m` to `subset`, keeping applications whose arguments all lie
/// in it. Results are intersected with the subset and entries that become
/// empty are dropped; the restriction is partial.
MultiAlgebra restrict_to(const MultiAlgebra& m, const ElementSet& subset);

/// Visits every tuple in universe^arity in lexicographic order; stops early
/// when `fn` returns false. Returns false iff stopped early.
template <typename Fn>
bool for_each_tuple(const ElementSet& universe, std::size_t arity, Fn&& fn) {
  if (arity == 0) return fn(Tuple{});
  if (universe.empty()) return true;
  std::vector<ElementSet::const_iterator> pos(arity, universe.begin());
  Tuple tuple(arity, *universe.begin());
  while (true) {
    if (!fn(tuple)) return false;
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++pos[i] != universe.end()) {
        tuple[i] = *pos[i];
        break;
      }
      pos[i] = universe.begin();
      tuple[i] = *pos[i];
      if (i == 0) return true;
    }
  }
}

}  // namespace malg
