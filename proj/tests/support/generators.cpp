#include "generators.hpp"

#include <algorithm>
#include <vector>

#include "malg/hom.hpp"
#include "malg/structure.hpp"

namespace malg::testing {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ElementSet make_universe(std::size_t n) {
  ElementSet out;
  for (std::size_t i = 0; i < n; ++i) out.insert("e" + std::to_string(i));
  return out;
}

ElementSet random_subset(Rng& rng, const std::vector<Element>& pool, std::size_t max_size) {
  std::size_t k = uniform(rng, 1, std::min(max_size, pool.size()));
  std::vector<Element> copy = pool;
  std::shuffle(copy.begin(), copy.end(), rng);
  return ElementSet(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(k));
}

std::size_t tuple_count(std::size_t n, std::size_t arity) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < arity; ++i) c *= n;
  return c;
}

}  // namespace

Signature random_signature(Rng& rng, const ShapeLimits& limits, bool need_positive_arity) {
  Signature sig;
  std::size_t k = uniform(rng, 1, limits.max_symbols);
  bool positive = false;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t arity = uniform(rng, 0, limits.max_arity);
    if (need_positive_arity && i + 1 == k && !positive) arity = uniform(rng, 1, limits.max_arity);
    positive = positive || arity > 0;
    sig.add("f" + std::to_string(i), arity);
  }
  return sig;
}

MultiAlgebra random_partial_over(Rng& rng, const Signature& sig, std::size_t max_elements,
                                 std::size_t max_result) {
  const ElementSet universe = make_universe(uniform(rng, 1, max_elements));
  const std::vector<Element> pool(universe.begin(), universe.end());
  Table table;
  for (const auto& [symbol, arity] : sig.symbols()) {
    // Aim for a handful of defined applications per symbol.
    const double p = std::min(1.0, static_cast<double>(uniform(rng, 1, 4)) /
                                       static_cast<double>(tuple_count(universe.size(), arity)));
    for_each_tuple(universe, arity, [&](const Tuple& args) {
      if (coin(rng, p)) table[{symbol, args}] = random_subset(rng, pool, max_result);
      return true;
    });
  }
  return MultiAlgebra(sig, universe, table, false);
}

MultiAlgebra random_partial(Rng& rng, const ShapeLimits& limits) {
  const Signature sig = random_signature(rng, limits);
  return random_partial_over(rng, sig, limits.max_elements, limits.max_result);
}

MultiAlgebra random_disconnected_biased(Rng& rng, const ShapeLimits& limits) {
  const Signature sig = random_signature(rng, limits);
  const ElementSet universe = make_universe(uniform(rng, 1, limits.max_elements));
  std::vector<Element> unused(universe.begin(), universe.end());
  std::shuffle(unused.begin(), unused.end(), rng);
  Table table;
  for (const auto& [symbol, arity] : sig.symbols()) {
    const double p = std::min(1.0, static_cast<double>(uniform(rng, 1, 3)) /
                                       static_cast<double>(tuple_count(universe.size(), arity)));
    for_each_tuple(universe, arity, [&](const Tuple& args) {
      if (unused.empty() || !coin(rng, p)) return true;
      std::size_t k = uniform(rng, 1, std::min(limits.max_result, unused.size()));
      ElementSet results(unused.end() - static_cast<std::ptrdiff_t>(k), unused.end());
      unused.resize(unused.size() - k);
      table[{symbol, args}] = results;
      return true;
    });
  }
  return MultiAlgebra(sig, universe, table, false);
}

MultiAlgebra random_total_over(Rng& rng, const Signature& sig, std::size_t max_elements,
                               std::size_t max_result) {
  const ElementSet universe = make_universe(uniform(rng, 1, max_elements));
  const std::vector<Element> pool(universe.begin(), universe.end());
  Table table;
  for (const auto& [symbol, arity] : sig.symbols()) {
    for_each_tuple(universe, arity, [&](const Tuple& args) {
      table[{symbol, args}] = random_subset(rng, pool, max_result);
      return true;
    });
  }
  return MultiAlgebra(sig, universe, table, true);
}

MultiAlgebra random_total(Rng& rng, const ShapeLimits& limits) {
  const Signature sig = random_signature(rng, limits, true);
  return random_total_over(rng, sig, limits.max_elements, limits.max_result);
}

MultiAlgebra random_weakly_free(Rng& rng, std::size_t max_elements, std::size_t max_symbols,
                                std::size_t max_arity, std::size_t max_result) {
  ShapeLimits limits{max_elements, max_symbols, max_arity, max_result};
  const Signature sig = random_signature(rng, limits);
  const std::size_t target = uniform(rng, std::min<std::size_t>(2, max_elements), max_elements);
  std::size_t next = 0;
  auto fresh = [&] { return "v" + std::to_string(next++); };

  ElementSet universe;
  std::vector<Element> elements;
  // Leave room for at least one operation result.
  bool has_constant = false;
  for (const auto& [symbol, arity] : sig.symbols()) has_constant = has_constant || arity == 0;
  const std::size_t room = target > 1 ? target - 1 : 0;
  const std::size_t vars =
      uniform(rng, has_constant ? 0 : std::min<std::size_t>(1, room), std::min<std::size_t>(2, room));
  for (std::size_t i = 0; i < vars; ++i) {
    elements.push_back(fresh());
    universe.insert(elements.back());
  }

  Table table;
  for (int attempt = 0; attempt < 40 && universe.size() < target; ++attempt) {
    auto it = sig.symbols().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(uniform(rng, 0, sig.size() - 1)));
    const auto& [symbol, arity] = *it;
    if (arity > 0 && elements.empty()) continue;
    Tuple args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(elements[uniform(rng, 0, elements.size() - 1)]);
    Application app{symbol, args};
    if (table.count(app)) continue;
    const std::size_t k = uniform(rng, 1, std::min(max_result, target - universe.size()));
    ElementSet results;
    for (std::size_t i = 0; i < k; ++i) {
      elements.push_back(fresh());
      universe.insert(elements.back());
      results.insert(elements.back());
    }
    table[app] = results;
  }
  if (universe.empty()) universe.insert(fresh());
  return MultiAlgebra(sig, universe, table, false);
}

std::size_t embedding_codomain_bound(const MultiAlgebra& a, std::size_t cap) {
  const std::size_t kappa = a.table().empty() ? 1 : m_of(a);
  const std::size_t vars = ground(a).size();
  const std::size_t depth = generate(a, ground(a)).stages.size();
  auto sat_add = [cap](std::size_t x, std::size_t y) { return std::min(cap, x + y); };
  auto sat_mul = [cap](std::size_t x, std::size_t y) {
    return x != 0 && y > cap / x ? cap : std::min(cap, x * y);
  };
  std::size_t terms = vars;
  for (std::size_t d = 0; d <= depth; ++d) {
    std::size_t next = vars;
    for (const auto& [symbol, arity] : a.signature().symbols()) {
      std::size_t tuples = 1;
      for (std::size_t i = 0; i < arity; ++i) tuples = sat_mul(tuples, terms);
      next = sat_add(next, sat_mul(kappa, tuples));
    }
    terms = next;
  }
  return terms;
}

}  // namespace malg::testing
