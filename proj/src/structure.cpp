#include "malg/structure.hpp"

#include <algorithm>

#include "malg/error.hpp"

namespace malg {

ElementSet build(const MultiAlgebra& a) {
  ElementSet out;
  for (const auto& [app, results] : a.table()) out.insert(results.begin(), results.end());
  return out;
}

ElementSet ground(const MultiAlgebra& a) {
  const ElementSet b = build(a);
  ElementSet out;
  std::set_difference(a.universe().begin(), a.universe().end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

std::optional<std::size_t> GenerationTrace::stage_of(const Element& e) const {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i].count(e)) return i;
  }
  return std::nullopt;
}

namespace {

// Counter-based closure: an application fires once all of its distinct
// arguments have entered the closure. Applications that fire while
// processing stage m deposit their results into stage m+1.
class ClosureIndex {
 public:
  explicit ClosureIndex(const MultiAlgebra& a) {
    apps_.reserve(a.table().size());
    for (const auto& entry : a.table()) apps_.push_back(&entry);
    for (std::size_t i = 0; i < apps_.size(); ++i) {
      ElementSet distinct(apps_[i]->first.args.begin(), apps_[i]->first.args.end());
      pending_.push_back(distinct.size());
      for (const auto& arg : distinct) uses_[arg].push_back(i);
    }
  }

  GenerationTrace run(const ElementSet& seed) const {
    GenerationTrace trace;
    trace.seed = seed;
    std::vector<std::size_t> pending = pending_;

    ElementSet current = seed;
    std::vector<std::size_t> fired;
    for (std::size_t i = 0; i < apps_.size(); ++i) {
      if (pending[i] == 0) fired.push_back(i);
    }
    // 0-ary results belong to stage 0.
    std::vector<Element> frontier(seed.begin(), seed.end());
    for (std::size_t i : fired) {
      for (const auto& r : apps_[i]->second) {
        if (current.insert(r).second) {
          trace.producers.emplace(r, Producer{apps_[i]->first, 0});
          frontier.push_back(r);
        }
      }
    }
    trace.stages.push_back(current);

    std::size_t stage = 0;
    while (!frontier.empty()) {
      fired.clear();
      for (const auto& e : frontier) {
        auto it = uses_.find(e);
        if (it == uses_.end()) continue;
        for (std::size_t i : it->second) {
          if (--pending[i] == 0) fired.push_back(i);
        }
      }
      // Producers are taken from applications in table order.
      std::sort(fired.begin(), fired.end());
      frontier.clear();
      for (std::size_t i : fired) {
        for (const auto& r : apps_[i]->second) {
          if (current.insert(r).second) {
            trace.producers.emplace(r, Producer{apps_[i]->first, stage + 1});
            frontier.push_back(r);
          }
        }
      }
      if (frontier.empty()) break;
      ++stage;
      trace.stages.push_back(current);
    }
    return trace;
  }

 private:
  std::vector<const Table::value_type*> apps_;
  std::vector<std::size_t> pending_;
  std::map<Element, std::vector<std::size_t>> uses_;
};

void check_seed(const MultiAlgebra& a, const ElementSet& seed) {
  for (const auto& e : seed) {
    if (!a.contains(e)) throw SeedOutsideUniverse("seed element '" + e + "' is not in the universe");
  }
}

}  // namespace

GenerationTrace generate(const MultiAlgebra& a, const ElementSet& seed) {
  check_seed(a, seed);
  return ClosureIndex(a).run(seed);
}

GroundGeneration is_generated_by_ground(const MultiAlgebra& a) {
  GenerationTrace trace = generate(a, ground(a));
  const bool generated = trace.closure() == a.universe();
  return {generated, std::move(trace)};
}

std::optional<OverlapWitness> find_overlap(const MultiAlgebra& a) {
  std::map<Element, const Application*> owner;
  for (const auto& [app, results] : a.table()) {
    for (const auto& r : results) {
      auto [it, inserted] = owner.emplace(r, &app);
      if (!inserted) return OverlapWitness{*it->second, app, r};
    }
  }
  return std::nullopt;
}

bool verify_overlap(const MultiAlgebra& a, const OverlapWitness& w) {
  if (w.first == w.second) return false;
  const ElementSet* r1 = a.results(w.first);
  const ElementSet* r2 = a.results(w.second);
  return r1 && r2 && r1->count(w.shared) && r2->count(w.shared);
}

StrongBasisResult strong_basis(const MultiAlgebra& a) {
  ClosureIndex index(a);
  StrongBasisResult result;
  for (const auto& x : a.universe()) {
    ElementSet rest = a.universe();
    rest.erase(x);
    const bool generates = index.run(rest).closure() == a.universe();
    result.certificate.co_generation.emplace(x, generates);
    if (!generates) result.certificate.candidate.insert(x);
  }
  if (index.run(result.certificate.candidate).closure() == a.universe()) {
    result.basis = result.certificate.candidate;
  }
  return result;
}

std::size_t b_order(const MultiAlgebra& a, const ElementSet& basis, const Element& x) {
  if (!a.contains(x)) {
    throw ElementOutsideClosure("'" + x + "' is not in the universe");
  }
  const GenerationTrace trace = generate(a, basis);
  if (trace.closure() != a.universe()) {
    throw NotGenerating(to_string(basis) + " does not generate the universe");
  }
  return *trace.stage_of(x);
}

}  // namespace malg
