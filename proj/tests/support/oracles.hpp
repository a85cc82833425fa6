#pragma once

// Brute-force reference implementations. They work straight from the
// definitions and share no code with the library beyond its data types.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "malg/core.hpp"
#include "malg/terms.hpp"

namespace malg::testing {

ElementSet naive_ground(const MultiAlgebra& a);

// Fixpoint of "add results of every application whose arguments are in S".
ElementSet naive_closure(const MultiAlgebra& a, const ElementSet& seed);

bool naive_disconnected(const MultiAlgebra& a);

// Minimum generating set under inclusion, found by scanning all 2^|A| subsets.
std::optional<ElementSet> brute_strong_basis(const MultiAlgebra& a);

// Warshall transitive closure of the deconstruction relation; true iff some
// element reaches itself.
bool brute_has_cycle(const MultiAlgebra& a);

// Homomorphism condition checked directly on the tables.
bool naive_is_homomorphism(const MultiAlgebra& a, const MultiAlgebra& b, const Mapping& f);

// Calls fn on every map A -> B (|B|^|A| of them).
void for_each_map(const MultiAlgebra& a, const MultiAlgebra& b,
                  const std::function<void(const Mapping&)>& fn);

std::vector<Mapping> all_homomorphisms(const MultiAlgebra& a, const MultiAlgebra& b);

// Classical two-valued evaluation of not/and/or/imp formulas.
bool truth_table_tautology(const Term& phi);

}  // namespace malg::testing
