#include "malg/nmatrix.hpp"

#include <algorithm>

#include "malg/error.hpp"

namespace malg {

NMatrix::NMatrix(MultiAlgebra algebra, ElementSet designated)
    : algebra_(std::move(algebra)), designated_(std::move(designated)) {
  if (!algebra_.is_total()) throw InvalidArgument("an Nmatrix needs a total multialgebra");
  ValidationReport report = validate(algebra_);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw InvalidArgument("invalid Nmatrix algebra: " + v.rule + " at " + v.location);
  }
  if (designated_.empty()) throw InvalidArgument("designated set must be non-empty");
  for (const auto& d : designated_) {
    if (!algebra_.contains(d)) throw InvalidArgument("designated value '" + d + "' not in universe");
  }
}

namespace {

struct Subformula {
  std::string name;
  const Term* term;
  std::size_t order;
  std::vector<std::string> children;
};

// Subformulas of all formulas, atoms first, then by (order, name).
std::vector<Subformula> collect(std::span<const Formula> formulas, const Signature& signature) {
  std::map<std::string, Subformula> seen;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    std::string name = print_formula(t);
    if (seen.count(name)) return;
    Subformula s{name, &t, term_order(t), {}};
    if (!t.is_variable()) {
      auto arity = signature.arity(t.name());
      if (!arity || *arity != t.children().size()) {
        throw UnknownConnective("connective '" + t.name() + "' with " +
                                std::to_string(t.children().size()) +
                                " arguments is not in the matrix signature");
      }
      for (const auto& c : t.children()) {
        walk(c);
        s.children.push_back(print_formula(c));
      }
    }
    seen.emplace(name, std::move(s));
  };
  for (const auto& f : formulas) walk(f);

  std::vector<Subformula> out;
  for (auto& [name, s] : seen) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(), [](const Subformula& a, const Subformula& b) {
    if (a.term->is_variable() != b.term->is_variable()) return a.term->is_variable();
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  return out;
}

Tuple child_values(const Subformula& s, const Valuation& v) {
  Tuple out;
  for (const auto& c : s.children) out.push_back(v.at(c));
  return out;
}

}  // namespace

void for_each_legal_valuation(std::span<const Formula> formulas, const NMatrix& m,
                              const std::function<bool(const Valuation&)>& visit) {
  const MultiAlgebra& alg = m.algebra();
  const std::vector<Subformula> subs = collect(formulas, alg.signature());
  Valuation v;

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == subs.size()) return visit(v);
    const Subformula& s = subs[i];
    const ElementSet* choices = &alg.universe();
    if (!s.term->is_variable()) {
      choices = alg.results(s.term->name(), child_values(s, v));
      if (!choices) return true;  // unreachable for a validated total algebra
    }
    for (const auto& value : *choices) {
      v[s.name] = value;
      if (!assign(i + 1)) return false;
    }
    v.erase(s.name);
    return true;
  };
  assign(0);
}

std::vector<Valuation> legal_valuations(const Formula& phi, const NMatrix& m) {
  std::vector<Valuation> out;
  for_each_legal_valuation(std::span<const Formula>(&phi, 1), m, [&](const Valuation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

bool is_legal(const Valuation& v, std::span<const Formula> formulas, const NMatrix& m) {
  const MultiAlgebra& alg = m.algebra();
  for (const auto& s : collect(formulas, alg.signature())) {
    auto it = v.find(s.name);
    if (it == v.end() || !alg.contains(it->second)) return false;
    if (s.term->is_variable()) continue;
    Tuple args;
    for (const auto& c : s.children) {
      auto cv = v.find(c);
      if (cv == v.end()) return false;
      args.push_back(cv->second);
    }
    const ElementSet* allowed = alg.results(s.term->name(), args);
    if (!allowed || !allowed->count(it->second)) return false;
  }
  return true;
}

ConsequenceResult entails(std::span<const Formula> gamma, const Formula& phi, const NMatrix& m) {
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.push_back(phi);
  std::vector<std::string> premises;
  for (const auto& g : gamma) premises.push_back(print_formula(g));
  const std::string conclusion = print_formula(phi);

  ConsequenceResult result;
  for_each_legal_valuation(all, m, [&](const Valuation& v) {
    bool premises_hold = std::all_of(premises.begin(), premises.end(),
                                     [&](const std::string& p) { return m.is_designated(v.at(p)); });
    if (premises_hold && !m.is_designated(v.at(conclusion))) {
      result.holds = false;
      result.countervaluation = v;
      return false;
    }
    return true;
  });
  return result;
}

ConsequenceResult is_tautology(const Formula& phi, const NMatrix& m) {
  return entails({}, phi, m);
}

}  // namespace malg
