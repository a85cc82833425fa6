#include "malg/core.hpp"

#include <algorithm>
#include <sstream>

#include "malg/error.hpp"

namespace malg {

Signature::Signature(
    std::initializer_list<std::pair<const std::string, std::size_t>> symbols) {
  for (const auto& [name, arity] : symbols) add(name, arity);
}

Signature::Signature(std::map<std::string, std::size_t> symbols) {
  for (const auto& [name, arity] : symbols) add(name, arity);
}

void Signature::add(const std::string& name, std::size_t arity) {
  if (name.empty()) throw InvalidArgument("symbol name must be non-empty");
  if (!symbols_.emplace(name, arity).second) {
    throw InvalidArgument("duplicate symbol '" + name + "'");
  }
}

std::optional<std::size_t> Signature::arity(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) return std::nullopt;
  return it->second;
}

std::size_t Signature::max_arity() const {
  std::size_t m = 0;
  for (const auto& [name, arity] : symbols_) m = std::max(m, arity);
  return m;
}

ExpandedSignature::ExpandedSignature(Signature base, std::size_t kappa)
    : base_(std::move(base)), kappa_(kappa) {
  if (kappa_ == 0) throw InvalidArgument("kappa must be at least 1");
}

std::string to_string(const Application& app) {
  std::string out = app.symbol + "(";
  for (std::size_t i = 0; i < app.args.size(); ++i) {
    if (i) out += ", ";
    out += app.args[i];
  }
  return out + ")";
}

std::string to_string(const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : set) {
    if (!first) out += ", ";
    out += e;
    first = false;
  }
  return out + "}";
}

MultiAlgebra::MultiAlgebra(Signature signature, ElementSet universe, Table table,
                           bool total)
    : signature_(std::move(signature)),
      universe_(std::move(universe)),
      table_(std::move(table)),
      total_(total) {}

const ElementSet* MultiAlgebra::results(const Application& app) const {
  auto it = table_.find(app);
  return it == table_.end() ? nullptr : &it->second;
}

const ElementSet* MultiAlgebra::results(const std::string& symbol,
                                        const Tuple& args) const {
  return results(Application{symbol, args});
}

bool ValidationReport::has(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate(const MultiAlgebra& m) {
  ValidationReport report;
  auto add = [&](std::string location, std::string rule) {
    report.violations.push_back({std::move(location), std::move(rule)});
  };

  if (m.universe().empty()) add("universe", "empty-universe");

  for (const auto& [app, results] : m.table()) {
    const std::string loc = to_string(app);
    auto arity = m.signature().arity(app.symbol);
    if (!arity) {
      add(loc, "unknown-symbol");
    } else if (*arity != app.args.size()) {
      add(loc, "arity-mismatch");
    }
    for (const auto& a : app.args) {
      if (!m.contains(a)) add(loc + " argument " + a, "out-of-universe");
    }
    if (results.empty()) add(loc, "empty-result");
    for (const auto& r : results) {
      if (!m.contains(r)) add(loc + " result " + r, "out-of-universe");
    }
  }

  if (m.is_total()) {
    for (const auto& [symbol, arity] : m.signature().symbols()) {
      for_each_tuple(m.universe(), arity, [&](const Tuple& t) {
        Application app{symbol, t};
        if (!m.results(app)) add(to_string(app), "missing-entry");
        return true;
      });
    }
  }
  return report;
}

ElementMap::ElementMap(const MultiAlgebra& source, const MultiAlgebra& target,
                       Mapping mapping)
    : source_(&source), target_(&target), mapping_(std::move(mapping)) {
  for (const auto& a : source.universe()) {
    auto it = mapping_.find(a);
    if (it == mapping_.end()) {
      throw InvalidArgument("element map undefined on '" + a + "'");
    }
    if (!target.contains(it->second)) {
      throw InvalidArgument("element map sends '" + a + "' to '" + it->second +
                            "' outside the target universe");
    }
  }
  if (mapping_.size() != source.universe().size()) {
    throw InvalidArgument("element map defined outside the source universe");
  }
}

const Element& ElementMap::operator()(const Element& e) const {
  auto it = mapping_.find(e);
  if (it == mapping_.end()) throw InvalidArgument("'" + e + "' not in source universe");
  return it->second;
}

Tuple ElementMap::apply(const Tuple& args) const {
  Tuple out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back((*this)(a));
  return out;
}

ElementSet ElementMap::apply(const ElementSet& set) const {
  ElementSet out;
  for (const auto& a : set) out.insert((*this)(a));
  return out;
}

bool ElementMap::is_injective() const {
  ElementSet image;
  for (const auto& [a, b] : mapping_) {
    if (!image.insert(b).second) return false;
  }
  return true;
}

bool ElementMap::is_surjective() const {
  ElementSet image;
  for (const auto& [a, b] : mapping_) image.insert(b);
  return image == target_->universe();
}

std::string describe(const CounterWitness& w) {
  std::ostringstream out;
  switch (w.kind) {
    case CounterWitness::Kind::ImageOutside:
      out << to_string(w.app) << " contains " << w.element << " whose image "
          << w.image << " is not in " << to_string(w.target_app) << " = "
          << to_string(w.target_results);
      break;
    case CounterWitness::Kind::ImageIncomplete:
      out << w.element << " in " << to_string(w.target_app) << " = "
          << to_string(w.target_results) << " is not the image of any element of "
          << to_string(w.app);
      break;
    case CounterWitness::Kind::Undefined:
      out << to_string(w.target_app) << " is undefined while " << to_string(w.app)
          << " is defined";
      break;
  }
  return out.str();
}

namespace {

enum class Comparison { Inclusion, Equality };

CheckResult check_hom(const ElementMap& f, Comparison mode) {
  if (!(f.source().signature() == f.target().signature())) {
    throw SignatureMismatch("source and target signatures differ");
  }
  for (const auto& [app, results] : f.source().table()) {
    Application target_app{app.symbol, f.apply(app.args)};
    const ElementSet* target = f.target().results(target_app);
    if (!target) {
      throw UndefinedTargetApplication(to_string(target_app) +
                                       " is undefined in the target (image of " +
                                       to_string(app) + ")");
    }
    ElementSet image;
    for (const auto& r : results) {
      const Element& fr = f(r);
      if (!target->count(fr)) {
        return {false, CounterWitness{CounterWitness::Kind::ImageOutside, app,
                                      target_app, r, fr, *target}};
      }
      image.insert(fr);
    }
    if (mode == Comparison::Equality && image != *target) {
      for (const auto& t : *target) {
        if (!image.count(t)) {
          return {false, CounterWitness{CounterWitness::Kind::ImageIncomplete, app,
                                        target_app, t, {}, *target}};
        }
      }
    }
  }
  return {};
}

}  // namespace

CheckResult is_homomorphism(const ElementMap& f) {
  return check_hom(f, Comparison::Inclusion);
}

CheckResult is_full_homomorphism(const ElementMap& f) {
  return check_hom(f, Comparison::Equality);
}

bool is_isomorphism(const ElementMap& f) {
  return f.is_bijective() && is_full_homomorphism(f).holds;
}

CheckResult is_submultialgebra(const MultiAlgebra& b, const MultiAlgebra& a) {
  if (!(b.signature() == a.signature())) {
    throw SignatureMismatch("submultialgebra check across different signatures");
  }
  if (!std::includes(a.universe().begin(), a.universe().end(), b.universe().begin(),
                     b.universe().end())) {
    throw InvalidArgument("universe is not a subset of the ambient universe");
  }
  for (const auto& [app, results] : b.table()) {
    const ElementSet* outer = a.results(app);
    if (!outer) {
      return {false, CounterWitness{CounterWitness::Kind::Undefined, app, app, {}, {}, {}}};
    }
    for (const auto& r : results) {
      if (!outer->count(r)) {
        return {false,
                CounterWitness{CounterWitness::Kind::ImageOutside, app, app, r, r, *outer}};
      }
    }
  }
  return {};
}

Mapping compose(const Mapping& f, const Mapping& g) {
  Mapping out;
  for (const auto& [a, b] : f) {
    auto it = g.find(b);
    if (it == g.end()) throw InvalidArgument("composition undefined at '" + b + "'");
    out.emplace(a, it->second);
  }
  return out;
}

Mapping identity_mapping(const ElementSet& universe) {
  Mapping out;
  for (const auto& e : universe) out.emplace(e, e);
  return out;
}

MultiAlgebra rename(const MultiAlgebra& m, const Mapping& rename) {
  auto at = [&](const Element& e) -> const Element& {
    auto it = rename.find(e);
    if (it == rename.end()) throw InvalidArgument("rename undefined at '" + e + "'");
    return it->second;
  };
  ElementSet universe;
  for (const auto& e : m.universe()) universe.insert(at(e));
  if (universe.size() != m.universe().size()) {
    throw InvalidArgument("rename is not injective");
  }
  Table table;
  for (const auto& [app, results] : m.table()) {
    Tuple args;
    for (const auto& a : app.args) args.push_back(at(a));
    ElementSet out;
    for (const auto& r : results) out.insert(at(r));
    table.emplace(Application{app.symbol, std::move(args)}, std::move(out));
  }
  return MultiAlgebra(m.signature(), std::move(universe), std::move(table), m.is_total());
}

MultiAlgebra restrict_to(const MultiAlgebra& m, const ElementSet& subset) {
  ElementSet universe;
  for (const auto& e : subset) {
    if (m.contains(e)) universe.insert(e);
  }
  Table table;
  for (const auto& [app, results] : m.table()) {
    bool inside = std::all_of(app.args.begin(), app.args.end(),
                              [&](const Element& a) { return universe.count(a) != 0; });
    if (!inside) continue;
    ElementSet kept;
    for (const auto& r : results) {
      if (universe.count(r)) kept.insert(r);
    }
    if (!kept.empty()) table.emplace(app, std::move(kept));
  }
  return MultiAlgebra(m.signature(), std::move(universe), std::move(table), false);
}

}  // namespace malg
