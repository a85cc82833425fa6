#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "malg/error.hpp"
#include "malg/nmatrix.hpp"

namespace malg {
namespace {

MultiAlgebra classical_algebra() {
  const Signature sig{{"and", 2}, {"imp", 2}, {"not", 1}, {"or", 2}};
  Table t;
  for (int p = 0; p < 2; ++p) {
    const Element ep = std::to_string(p);
    t[{"not", {ep}}] = {std::to_string(1 - p)};
    for (int q = 0; q < 2; ++q) {
      const Element eq = std::to_string(q);
      t[{"and", {ep, eq}}] = {std::to_string(p & q)};
      t[{"or", {ep, eq}}] = {std::to_string(p | q)};
      t[{"imp", {ep, eq}}] = {std::to_string((1 - p) | q)};
    }
  }
  return MultiAlgebra(sig, {"0", "1"}, t, true);
}

NMatrix classical() { return NMatrix(classical_algebra(), {"1"}); }

NMatrix free_s() {
  return NMatrix(MultiAlgebra(Signature{{"s", 1}}, {"0", "1"},
                              {{{"s", {"0"}}, {"0", "1"}}, {{"s", {"1"}}, {"0", "1"}}}, true),
                 {"1"});
}

NMatrix deterministic_s() {
  return NMatrix(MultiAlgebra(Signature{{"s", 1}}, {"0", "1"},
                              {{{"s", {"0"}}, {"1"}}, {{"s", {"1"}}, {"0"}}}, true),
                 {"1"});
}

Formula f(const std::string& text, const NMatrix& m) {
  return parse_formula(text, m.algebra().signature());
}

TEST(NMatrix, Preconditions) {
  EXPECT_THROW(NMatrix(classical_algebra(), {}), InvalidArgument);
  EXPECT_THROW(NMatrix(classical_algebra(), {"2"}), InvalidArgument);
  MultiAlgebra partial(Signature{{"s", 1}}, {"0"}, {}, false);
  EXPECT_THROW(NMatrix(partial, {"0"}), InvalidArgument);
}

TEST(LegalValuations, Counts) {
  const NMatrix c = classical();
  EXPECT_EQ(legal_valuations(f("p", c), c).size(), 2u);
  const NMatrix ns = free_s();
  auto vs = legal_valuations(f("s(p)", ns), ns);
  EXPECT_EQ(vs.size(), 4u);
  EXPECT_EQ(vs.front(), (Valuation{{"p", "0"}, {"s(p)", "0"}}));
  const NMatrix ds = deterministic_s();
  EXPECT_EQ(legal_valuations(f("s(p)", ds), ds).size(), 2u);
}

TEST(LegalValuations, SharedSubformulaGetsOneValue) {
  const NMatrix ns = free_s();
  // Two free choices per level: p, s(p), s(s(p)).
  auto vs = legal_valuations(f("s(s(p))", ns), ns);
  EXPECT_EQ(vs.size(), 8u);
  const NMatrix c = classical();
  EXPECT_EQ(legal_valuations(f("and(not(p),not(p))", c), c).size(), 2u);
}

TEST(LegalValuations, UnknownConnective) {
  const NMatrix c = classical();
  EXPECT_THROW(legal_valuations(Term::node("xor", 0, {Term::variable("p"), Term::variable("q")}), c),
               UnknownConnective);
  EXPECT_THROW(legal_valuations(Term::node("not", 0, {Term::variable("p"), Term::variable("q")}), c),
               UnknownConnective);
}

TEST(Tautology, Examples) {
  const NMatrix c = classical();
  EXPECT_TRUE(is_tautology(f("or(p, not(p))", c), c));
  ConsequenceResult p = is_tautology(f("p", c), c);
  ASSERT_FALSE(p);
  EXPECT_EQ(*p.countervaluation, (Valuation{{"p", "0"}}));
  const NMatrix ns = free_s();
  EXPECT_FALSE(is_tautology(f("s(p)", ns), ns));
}

TEST(Entails, Examples) {
  const NMatrix c = classical();
  std::vector<Formula> mp{f("p", c), f("imp(p, q)", c)};
  EXPECT_TRUE(entails(mp, f("q", c), c));
  std::vector<Formula> refl{f("and(p,q)", c)};
  EXPECT_TRUE(entails(refl, f("and(p,q)", c), c));
  EXPECT_EQ(entails({}, f("imp(p,p)", c), c).holds, is_tautology(f("imp(p,p)", c), c).holds);
  std::vector<Formula> weak{f("q", c)};
  ConsequenceResult r = entails(weak, f("p", c), c);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.countervaluation->at("p"), "0");
  EXPECT_EQ(r.countervaluation->at("q"), "1");
}

// Formulas over not/imp/and/or with at most `budget` connectives, atoms p, q, r.
std::vector<Formula> formulas(std::size_t budget) {
  std::vector<std::vector<Formula>> by_size(budget + 1);
  for (const char* a : {"p", "q", "r"}) by_size[0].push_back(Term::variable(a));
  for (std::size_t n = 1; n <= budget; ++n) {
    for (const auto& t : by_size[n - 1]) by_size[n].push_back(Term::node("not", 0, {t}));
    for (std::size_t k = 0; k <= n - 1; ++k) {
      for (const auto& l : by_size[k]) {
        for (const auto& r : by_size[n - 1 - k]) {
          for (const char* op : {"and", "or", "imp"}) by_size[n].push_back(Term::node(op, 0, {l, r}));
        }
      }
    }
  }
  std::vector<Formula> out;
  for (const auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

TEST(Tautology, AgreesWithTruthTables) {
  const NMatrix c = classical();
  for (const auto& phi : formulas(2)) {
    EXPECT_EQ(is_tautology(phi, c).holds, testing::truth_table_tautology(phi)) << print_formula(phi);
  }
}

TEST(LegalValuations, DeterministicCountIsPowerOfAtoms) {
  const NMatrix c = classical();
  for (const auto& phi : formulas(2)) {
    std::set<std::string> atoms;
    for (const auto& v : legal_valuations(phi, c)) {
      for (const auto& [k, val] : v) {
        if (k == "p" || k == "q" || k == "r") atoms.insert(k);
      }
    }
    EXPECT_EQ(legal_valuations(phi, c).size(), 1u << atoms.size()) << print_formula(phi);
  }
}

class NmatrixProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(NmatrixProperties, LegalityShrinksAndRechecks) {
  testing::Rng rng(GetParam());
  const Signature sig{{"and", 2}, {"imp", 2}, {"not", 1}, {"or", 2}};
  const MultiAlgebra big = testing::random_total_over(rng, sig, 3, 3);
  Table shrunk = big.table();
  for (auto& [app, r] : shrunk) {
    if (r.size() > 1 && rng() % 2) r.erase(r.begin());
  }
  const NMatrix m(big, {*big.universe().rbegin()});
  const NMatrix s(MultiAlgebra(sig, big.universe(), shrunk, true), {*big.universe().rbegin()});
  for (const auto& phi : formulas(1)) {
    std::vector<Formula> one{phi};
    const auto vm = legal_valuations(phi, m);
    const auto vs = legal_valuations(phi, s);
    EXPECT_LE(vs.size(), vm.size());
    for (const auto& v : vs) {
      EXPECT_TRUE(is_legal(v, one, s));
      EXPECT_TRUE(std::find(vm.begin(), vm.end(), v) != vm.end());
    }
  }
}

TEST_P(NmatrixProperties, EntailmentIsMonotone) {
  testing::Rng rng(GetParam() + 17);
  const Signature sig{{"and", 2}, {"imp", 2}, {"not", 1}, {"or", 2}};
  const MultiAlgebra alg = testing::random_total_over(rng, sig, 3, 2);
  const NMatrix m(alg, {*alg.universe().begin()});
  const auto pool = formulas(1);
  for (int i = 0; i < 20; ++i) {
    std::vector<Formula> gamma{pool[rng() % pool.size()]};
    const Formula phi = pool[rng() % pool.size()];
    if (!entails(gamma, phi, m)) continue;
    gamma.push_back(pool[rng() % pool.size()]);
    EXPECT_TRUE(entails(gamma, phi, m));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, NmatrixProperties, ::testing::Range<std::uint64_t>(1, 31));

}  // namespace
}  // namespace malg
