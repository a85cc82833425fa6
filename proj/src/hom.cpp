#include "malg/hom.hpp"

#include <algorithm>
#include <iterator>

#include "malg/terms.hpp"

namespace malg {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= 0xff;  // separator
  h *= 1099511628211ULL;
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const Element& nth(const ElementSet& set, std::size_t i) {
  return *std::next(set.begin(), static_cast<std::ptrdiff_t>(i));
}

}  // namespace

ChoiceOracle ChoiceOracle::first() { return ChoiceOracle(Strategy::First, 0, nullptr, "first"); }

ChoiceOracle ChoiceOracle::injective_greedy() {
  return ChoiceOracle(Strategy::InjectiveGreedy, 0, nullptr, "injective");
}

ChoiceOracle ChoiceOracle::seeded_random(std::uint64_t seed) {
  return ChoiceOracle(Strategy::SeededRandom, seed, nullptr, "random");
}

ChoiceOracle ChoiceOracle::explicit_table(Callback callback, std::string name) {
  if (!callback) throw InvalidArgument("explicit oracle needs a callback");
  return ChoiceOracle(Strategy::Explicit, 0, std::move(callback), std::move(name));
}

std::string ChoiceOracle::name() const {
  if (strategy_ == Strategy::SeededRandom) return name_ + "(" + std::to_string(seed_) + ")";
  return name_;
}

Element ChoiceOracle::answer(const ChoiceQuery& q) const {
  if (q.target_results.empty()) {
    throw OracleRangeViolation("empty target result set for " + q.symbol);
  }
  Element out;
  switch (strategy_) {
    case Strategy::First:
      out = *q.target_results.begin();
      break;
    case Strategy::InjectiveGreedy: {
      auto it = q.source_results.find(q.element);
      if (it == q.source_results.end()) {
        throw InvalidArgument("'" + q.element + "' is not in the source result set");
      }
      if (q.source_results.size() > q.target_results.size()) {
        throw OracleRangeViolation(
            "no injective choice: " + to_string(Application{q.symbol, q.source_args}) + " has " +
            std::to_string(q.source_results.size()) + " results but " +
            to_string(Application{q.symbol, q.target_args}) + " has " +
            std::to_string(q.target_results.size()));
      }
      out = nth(q.target_results,
                static_cast<std::size_t>(std::distance(q.source_results.begin(), it)));
      break;
    }
    case Strategy::SeededRandom: {
      std::uint64_t h = 14695981039346656037ULL ^ splitmix64(seed_);
      h = fnv1a(h, q.symbol);
      for (const auto& a : q.source_args) h = fnv1a(h, a);
      h = fnv1a(h, "|");
      for (const auto& b : q.target_args) h = fnv1a(h, b);
      h = fnv1a(h, q.element);
      out = nth(q.target_results, splitmix64(h) % q.target_results.size());
      break;
    }
    case Strategy::Explicit:
      out = callback_(q);
      break;
  }
  if (!q.target_results.count(out)) {
    throw OracleRangeViolation("oracle '" + name() + "' answered " + out + " outside " +
                               to_string(Application{q.symbol, q.target_args}) + " = " +
                               to_string(q.target_results));
  }
  return out;
}

ChoiceOracle oracle_from_name(const std::string& name, std::uint64_t seed) {
  if (name == "first") return ChoiceOracle::first();
  if (name == "injective") return ChoiceOracle::injective_greedy();
  if (name == "random") return ChoiceOracle::seeded_random(seed);
  throw InvalidArgument("unknown oracle '" + name + "' (expected first, injective or random)");
}

namespace {

// Returns the generation trace from the ground, or throws NotWeaklyFree.
GenerationTrace require_weakly_free(const MultiAlgebra& a) {
  if (auto overlap = find_overlap(a)) {
    throw NotWeaklyFree("not disconnected: " + to_string(overlap->first) + " and " +
                            to_string(overlap->second) + " share " + overlap->shared,
                        overlap, {});
  }
  GroundGeneration gen = is_generated_by_ground(a);
  if (!gen.generated) {
    ElementSet missing;
    std::set_difference(a.universe().begin(), a.universe().end(), gen.trace.closure().begin(),
                        gen.trace.closure().end(), std::inserter(missing, missing.end()));
    throw NotWeaklyFree("not generated by its ground: " + to_string(missing) +
                            " lie outside the closure of " + to_string(gen.trace.seed),
                        std::nullopt, std::move(missing));
  }
  return std::move(gen.trace);
}

}  // namespace

CdfExtension extend_cdf(const MultiAlgebra& a, const Mapping& seed_map, const MultiAlgebra& b,
                        const ChoiceOracle& oracle) {
  if (!(a.signature() == b.signature())) {
    throw SignatureMismatch("source and target signatures differ");
  }
  const GenerationTrace trace = require_weakly_free(a);

  CdfExtension ext;
  ext.seed_map = seed_map;
  ext.oracle_name = oracle.name();
  for (const auto& [x, y] : seed_map) {
    if (!trace.seed.count(x)) {
      throw InvalidArgument("seed map is defined on '" + x + "', which is not in the ground");
    }
    if (!b.contains(y)) throw InvalidArgument("seed map sends '" + x + "' outside the target");
  }
  for (const auto& g : trace.seed) {
    auto it = seed_map.find(g);
    if (it == seed_map.end()) throw InvalidArgument("seed map undefined on ground element '" + g + "'");
    ext.map.emplace(g, it->second);
  }

  // Disconnectedness makes each producer the only application containing
  // its results, so every element is assigned exactly once.
  for (const auto& stage : trace.stages) {
    for (const auto& e : stage) {
      if (ext.map.count(e)) continue;
      const Application& app = trace.producers.at(e).app;
      Tuple target_args;
      for (const auto& arg : app.args) target_args.push_back(ext.map.at(arg));
      const ElementSet* target = b.results(app.symbol, target_args);
      if (!target) {
        throw UndefinedTargetApplication(to_string(Application{app.symbol, target_args}) +
                                         " is undefined in the target");
      }
      const ElementSet& source = *a.results(app);
      for (const auto& r : source) {
        Element choice = oracle.answer({app.symbol, app.args, target_args, source, *target, r});
        ext.consulted.emplace(ChoiceKey{app.symbol, app.args, target_args, r}, choice);
        ext.map.emplace(r, std::move(choice));
      }
    }
  }
  return ext;
}

MultiAlgebra direct_image(const ElementMap& f) {
  CheckResult hom;
  try {
    hom = is_homomorphism(f);
  } catch (const UndefinedTargetApplication& e) {
    throw NotHomomorphism(e.what());
  }
  if (!hom) throw NotHomomorphism(describe(*hom.witness));

  ElementSet universe;
  for (const auto& [a, b] : f.mapping()) universe.insert(b);
  Table table;
  for (const auto& [app, results] : f.source().table()) {
    ElementSet& out = table[Application{app.symbol, f.apply(app.args)}];
    for (const auto& r : results) out.insert(f(r));
  }
  return MultiAlgebra(f.source().signature(), std::move(universe), std::move(table),
                      f.source().is_total());
}

std::size_t m_of(const MultiAlgebra& a) {
  if (a.table().empty()) throw NoDefinedApplications("multialgebra has no defined applications");
  std::size_t m = 0;
  for (const auto& [app, results] : a.table()) m = std::max(m, results.size());
  return m;
}

TermEmbedding embed_into_terms(const MultiAlgebra& a) {
  const GenerationTrace trace = require_weakly_free(a);
  const std::size_t kappa = a.table().empty() ? 1 : m_of(a);

  std::map<Element, Term> terms;
  for (const auto& g : trace.seed) terms.emplace(g, Term::variable(g));
  for (const auto& stage : trace.stages) {
    for (const auto& e : stage) {
      if (terms.count(e)) continue;
      const Application& app = trace.producers.at(e).app;
      std::vector<Term> children;
      for (const auto& arg : app.args) children.push_back(terms.at(arg));
      std::size_t beta = 0;
      for (const auto& r : *a.results(app)) terms.emplace(r, Term::node(app.symbol, beta++, children));
    }
  }

  std::size_t depth = 0;
  Mapping mapping;
  for (const auto& [e, t] : terms) {
    depth = std::max(depth, term_order(t));
    mapping.emplace(e, print_term(t));
  }
  MultiAlgebra codomain = truncate_mt(a.signature(), trace.seed, kappa, depth);
  return TermEmbedding{kappa, depth, std::move(codomain), std::move(mapping)};
}

namespace {

ChoiceOracle superscript_oracle(std::size_t beta) {
  return ChoiceOracle::explicit_table(
      [beta](const ChoiceQuery& q) {
        // Target arguments are canonical term names, so this is print_term
        // of σ^β(args).
        std::string name = q.symbol + "^" + std::to_string(beta);
        if (!q.target_args.empty()) {
          name += "(";
          for (std::size_t i = 0; i < q.target_args.size(); ++i) {
            if (i) name += ",";
            name += q.target_args[i];
          }
          name += ")";
        }
        return name;
      },
      "superscript-" + std::to_string(beta));
}

}  // namespace

UmpDemo ump_refutation_demo(const Signature& signature, const ElementSet& variables,
                            std::size_t depth) {
  if (signature.empty()) throw EmptySignature("the signature must be non-empty");
  if (depth == 0) throw InvalidArgument("depth must be at least 1");

  UmpDemo demo{truncate_terms(signature, variables, depth),
               truncate_mt(signature, variables, 2, depth), {}, {}};
  const Mapping identity = identity_mapping(variables);
  demo.id_c = extend_cdf(demo.terms, identity, demo.multiterms, superscript_oracle(0)).map;
  demo.id_d = extend_cdf(demo.terms, identity, demo.multiterms, superscript_oracle(1)).map;

  const ElementMap c(demo.terms, demo.multiterms, demo.id_c);
  const ElementMap d(demo.terms, demo.multiterms, demo.id_d);
  demo.both_homomorphisms = is_homomorphism(c).holds && is_homomorphism(d).holds;
  demo.agree_on_variables = std::all_of(variables.begin(), variables.end(), [&](const Element& v) {
    return demo.id_c.at(v) == v && demo.id_d.at(v) == v;
  });
  for (const auto& t : demo.terms.universe()) {
    if (variables.count(t)) continue;
    ++demo.composite_terms;
    if (demo.id_c.at(t) != demo.id_d.at(t)) ++demo.differing_terms;
  }
  return demo;
}

}  // namespace malg
