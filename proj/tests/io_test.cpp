#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "malg/error.hpp"
#include "malg/io.hpp"
#include "malg/structure.hpp"
#include "malg/terms.hpp"

namespace malg {
namespace {

using io::json;
using testing::corpus_path;

std::string schema_pointer(const json& doc) {
  try {
    io::parse_document(doc);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

TEST(Document, LoadsExampleB) {
  auto doc = io::load_document(corpus_path("b.json"));
  EXPECT_EQ(doc.algebra, testing::example_b());
  EXPECT_TRUE(is_generated_by_ground(doc.algebra));
  EXPECT_FALSE(doc.designated);
}

TEST(Document, ExactKeysForC) {
  const json expected = json::parse(R"({"signature": {"s": 1}, "universe": ["-1","1"],
    "partial": false, "operations": {"s": [{"args": ["-1"], "result": ["1"]},
    {"args": ["1"], "result": ["-1"]}]}, "designated": null})");
  EXPECT_EQ(io::to_json(testing::example_c()), expected);
}

TEST(Document, RoundTripIsCanonical) {
  for (const char* name : {"c.json", "b.json", "m.json", "y_prefix.json", "forest.json",
                           "fragment.json", "classical.json", "nondet_negation.json"}) {
    const json raw = io::read_json_file(corpus_path(name));
    auto doc = io::parse_document(raw);
    const json canonical = io::to_json(doc.algebra, doc.designated);
    EXPECT_EQ(io::parse_document(canonical).algebra, doc.algebra) << name;
    EXPECT_EQ(io::to_json(io::parse_document(canonical).algebra, doc.designated), canonical) << name;
  }
}

TEST(Document, TruncationRoundTrips) {
  const MultiAlgebra t = truncate_mt(Signature{{"f", 2}, {"s", 1}}, {"x"}, 2, 2);
  EXPECT_EQ(io::parse_document(io::to_json(t)).algebra, t);
}

TEST(Document, SchemaErrors) {
  json base = io::to_json(testing::example_b());
  EXPECT_EQ(schema_pointer(base), "<accepted>");

  json empty_result = base;
  empty_result["operations"]["s"][0]["result"] = json::array();
  EXPECT_EQ(schema_pointer(empty_result), "/operations/s/0/result");

  json bad_element = base;
  bad_element["operations"]["s"][1]["result"] = {"7"};
  EXPECT_EQ(schema_pointer(bad_element), "/operations/s/1/result/0");

  json extra = base;
  extra["colour"] = "red";
  EXPECT_EQ(schema_pointer(extra), "/colour");

  json arity = base;
  arity["operations"]["s"][0]["args"] = {"0", "1"};
  EXPECT_EQ(schema_pointer(arity), "/operations/s/0/args");

  json missing = base;
  missing["operations"]["s"].erase(1);
  EXPECT_EQ(schema_pointer(missing), "/operations");

  json dup_universe = base;
  dup_universe["universe"] = {"0", "0"};
  EXPECT_EQ(schema_pointer(dup_universe).rfind("/universe", 0), 0u);

  json designated = base;
  designated["designated"] = {"9"};
  EXPECT_EQ(schema_pointer(designated).rfind("/designated", 0), 0u);
}

TEST(Document, PartialDefaultsToFalse) {
  json doc = io::to_json(testing::example_c());
  doc.erase("partial");
  EXPECT_TRUE(io::parse_document(doc).algebra.is_total());
}

TEST(Document, DesignatedMakesNMatrix) {
  NMatrix m = io::to_nmatrix(io::load_document(corpus_path("classical.json")));
  EXPECT_EQ(m.designated(), (ElementSet{"1"}));
  EXPECT_THROW(io::to_nmatrix(io::load_document(corpus_path("c.json"))), SchemaError);
}

TEST(Graph, TreeToMultialgebra) {
  const io::DirectedGraph g = io::load_graph(corpus_path("tree.json"));
  const MultiAlgebra m = io::graph_to_multialgebra(g, io::Totality::Partial);
  EXPECT_EQ(*m.results("s", {"r"}), (ElementSet{"a", "b"}));
  EXPECT_EQ(ground(m), (ElementSet{"r"}));
  EXPECT_THROW(io::graph_to_multialgebra(g, io::Totality::Total), NotTotal);
}

TEST(Graph, CGraphIsExampleC) {
  const io::DirectedGraph g = io::load_graph(corpus_path("c_graph.json"));
  const MultiAlgebra m = io::graph_to_multialgebra(g, io::Totality::Total);
  EXPECT_EQ(m, testing::example_c());
}

TEST(Graph, RoundTrip) {
  io::DirectedGraph g{{"a", "b", "r"}, {{"r", "a"}, {"r", "b"}}};
  EXPECT_EQ(io::multialgebra_to_graph(io::graph_to_multialgebra(g, io::Totality::Partial)), g);
  EXPECT_EQ(io::parse_graph(io::to_json(g)), g);
}

TEST(Graph, RejectsDanglingArrow) {
  EXPECT_THROW(io::parse_graph(json::parse(R"({"vertices": ["a"], "arrows": [["a","z"]]})")),
               SchemaError);
}

TEST(Graph, Dot) {
  io::DirectedGraph g{{"-1", "1"}, {{"-1", "1"}}};
  const std::string dot = io::to_dot(g);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("\"-1\" -> \"1\";"), std::string::npos);
}

TEST(Witness, OverlapAndChainRoundTrip) {
  const MultiAlgebra b = testing::example_b();
  const auto w = find_overlap(b);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_overlap(b, io::overlap_from_json(io::to_json(*w))));
  const MultiAlgebra c = testing::example_c();
  const auto chain = find_chain(c);
  ASSERT_TRUE(chain);
  EXPECT_TRUE(verify_chain(c, io::chain_from_json(io::to_json(*chain))));
}

TEST(SignatureSpec, Parses) {
  EXPECT_EQ(io::parse_signature_spec("s:1,f:2"), (Signature{{"f", 2}, {"s", 1}}));
  EXPECT_THROW(io::parse_signature_spec("s"), Error);
}

TEST(Files, MalformedJsonIsSchemaError) {
  EXPECT_THROW(io::read_json_file(corpus_path("does_not_exist.json")), Error);
}

}  // namespace
}  // namespace malg
