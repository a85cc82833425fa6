#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "malg/core.hpp"

namespace malg {

/// Term over an expanded signature Σ^κ: a variable or σ^β(t_1, ..., t_n).
class Term {
 public:
  static Term variable(std::string name);
  static Term node(std::string symbol, std::size_t superscript, std::vector<Term> children = {});

  bool is_variable() const { return is_variable_; }
  const std::string& name() const { return name_; }
  std::size_t superscript() const { return superscript_; }
  const std::vector<Term>& children() const { return children_; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b);

 private:
  Term() = default;

  bool is_variable_ = true;
  std::string name_;
  std::size_t superscript_ = 0;
  std::vector<Term> children_;
};

/// 0 for variables and constants, otherwise 1 + the largest child order.
std::size_t term_order(const Term& t);

/// Canonical text: `x`, `c^0`, `s^1(s^0(x))`, `f^0(x,s^1(x))`.
std::string print_term(const Term& t);

/// Formula text, superscripts omitted: `p`, `c`, `or(p,not(p))`.
std::string print_formula(const Term& t);

/// Variables and the expanded signature a term is read against.
struct TermContext {
  Signature signature;
  std::size_t kappa = 1;
  ElementSet variables;
};

/// Parses the canonical grammar
///   term := IDENT | IDENT '^' NAT | IDENT '^' NAT '(' term (',' term)* ')'
/// A bare IDENT must be a declared variable; `IDENT '^' NAT` alone must be
/// a declared 0-ary symbol. Throws SyntaxError, UnknownSymbol,
/// SuperscriptOutOfRange or ArityMismatch.
Term parse_term(std::string_view text, const TermContext& context);

/// Parses a formula: the term grammar without superscripts. A bare IDENT is
/// a constant when the signature declares it with arity 0, otherwise a
/// propositional variable. Every node gets superscript 0.
Term parse_formula(std::string_view text, const Signature& signature);

/// σ applied to `args` in mT(Σ, V, κ): the κ terms σ^β(args), β < κ.
/// Throws UnknownSymbol, ArityMismatch, or InvalidArgument for kappa = 0.
std::vector<Term> mt_apply(const Signature& signature, const std::string& symbol,
                           const std::vector<Term>& args, std::size_t kappa);

/// Every term of order ≤ depth over the signature, variables, and κ,
/// sorted by order and then by Term ordering.
std::vector<Term> enumerate_terms(const Signature& signature, const ElementSet& variables,
                                  std::size_t kappa, std::size_t depth);

/// Finite fragment of mT(Σ, V, κ): all terms of order ≤ depth, with an
/// application defined exactly when its results have order ≤ depth. Elements
/// are named by print_term. Throws EmptyUniverse when there are neither
/// variables nor constants, and InvalidArgument for a variable name that
/// collides with term syntax.
MultiAlgebra truncate_mt(const Signature& signature, const ElementSet& variables,
                         std::size_t kappa, std::size_t depth);

/// Fragment of the term algebra T(Σ, V) = mT(Σ, V, 1), elements named by
/// print_formula.
MultiAlgebra truncate_terms(const Signature& signature, const ElementSet& variables,
                            std::size_t depth);

/// Symbols in the term, including constants (variables excluded).
std::vector<std::string> symbols_of(const Term& t);

}  // namespace malg
