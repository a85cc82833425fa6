// malg: command-line front end for the multialgebra library.
//
// Exit codes: 0 property holds / construction succeeded, 1 property fails
// (witness emitted), 2 input error, 3 internal equivalence violation.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "malg/chains.hpp"
#include "malg/core.hpp"
#include "malg/error.hpp"
#include "malg/hom.hpp"
#include "malg/io.hpp"
#include "malg/nmatrix.hpp"
#include "malg/structure.hpp"
#include "malg/terms.hpp"

namespace {

using namespace malg;
using io::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct Options {
  std::string witness_out;
  std::string out;
  std::string file;
  std::vector<std::string> files;
  std::string sig;
  std::string vars;
  std::size_t depth = 2;
  std::size_t kappa = 2;
  std::uint64_t seed = 0;
  std::string oracle = "first";
  bool partial = false;
  bool total = false;
  bool dot = false;
  std::string formula;
  std::vector<std::string> premises;
};

void emit_witness(const Options& opt, const json& witness) {
  if (!opt.witness_out.empty()) io::write_json_file(opt.witness_out, witness);
}

void emit_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out);
    if (!out) throw InvalidArgument("cannot write '" + opt.out + "'");
    out << text;
  }
}

ElementSet split_list(const std::string& text) {
  ElementSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

Mapping load_mapping(const std::string& path) {
  json j = io::read_json_file(path);
  if (!j.is_object()) throw SchemaError("", "a map document is an object of element -> element");
  Mapping m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it->is_string()) throw SchemaError("/" + it.key(), "expected an element id");
    m.emplace(it.key(), it->get<std::string>());
  }
  return m;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const Valuation& v) {
  std::string out;
  for (const auto& [f, value] : v) {
    if (!out.empty()) out += ", ";
    out += f + " ↦ " + value;
  }
  return out;
}

int cmd_check(const Options& opt) {
  const auto doc = io::load_document(opt.file);
  const MultiAlgebra& a = doc.algebra;
  FreenessVerdict v;
  try {
    v = is_weakly_free(a);
  } catch (const EquivalenceViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  std::cout << "universe: " << to_string(a.universe()) << "\n";
  std::cout << "ground: " << to_string(v.ground) << "\n";
  std::cout << "build: " << to_string(build(a)) << "\n";

  std::string disc = "yes";
  if (v.overlap) {
    disc = "no (" + to_string(v.overlap->first) + " and " + to_string(v.overlap->second) +
           " share " + v.overlap->shared + ")";
  }
  const std::string basis = v.strong_basis.basis ? to_string(*v.strong_basis.basis) : "none";
  const std::string chainless = v.chain ? "no (" + describe(*v.chain) + ")" : "yes";
  std::cout << "disconnected: " << disc << "; ground-generated: " << yes_no(v.ground_generated())
            << "; strong basis: " << basis << "; chainless: " << chainless
            << "; weakly free: " << (v.weakly_free ? "YES" : "NO") << "\n";
  if (v.basis_clause_mismatch) {
    std::cout << "note: disconnected with a strong basis, yet not generated by its ground; "
                 "self-producing elements "
              << to_string(v.self_produced) << "\n";
  }
  emit_witness(opt, io::to_json(v));
  return v.weakly_free ? kHolds : kFails;
}

int cmd_hom(const Options& opt) {
  const auto src = io::load_document(opt.files.at(0));
  const auto tgt = io::load_document(opt.files.at(1));
  const ElementMap f(src.algebra, tgt.algebra, load_mapping(opt.files.at(2)));
  const CheckResult hom = is_homomorphism(f);
  json witness = {{"homomorphism", hom.holds}};
  if (!hom) {
    std::cout << "homomorphism: no (" << describe(*hom.witness) << ")\n";
    witness["witness"] = io::to_json(*hom.witness);
    emit_witness(opt, witness);
    return kFails;
  }
  const CheckResult full = is_full_homomorphism(f);
  const bool iso = full.holds && f.is_bijective();
  std::cout << "homomorphism: yes\n";
  std::cout << "full: " << (full ? "yes" : "no (" + describe(*full.witness) + ")") << "\n";
  std::cout << "injective: " << yes_no(f.is_injective()) << "; surjective: " << yes_no(f.is_surjective())
            << "\n";
  std::cout << "isomorphism: " << yes_no(iso) << "\n";
  witness["full"] = full.holds;
  witness["isomorphism"] = iso;
  if (!full) witness["full_witness"] = io::to_json(*full.witness);
  emit_witness(opt, witness);
  return kHolds;
}

json not_weakly_free_json(const NotWeaklyFree& e) {
  return {{"error", "NotWeaklyFree"},
          {"message", e.what()},
          {"overlap", e.overlap() ? io::to_json(*e.overlap()) : json(nullptr)},
          {"ungenerated", std::vector<Element>(e.ungenerated().begin(), e.ungenerated().end())}};
}

int cmd_extend(const Options& opt) {
  const auto src = io::load_document(opt.files.at(0));
  const auto tgt = io::load_document(opt.files.at(1));
  const Mapping seed = load_mapping(opt.files.at(2));
  const ChoiceOracle oracle = oracle_from_name(opt.oracle, opt.seed);
  try {
    const CdfExtension ext = extend_cdf(src.algebra, seed, tgt.algebra, oracle);
    std::cout << "oracle: " << ext.oracle_name << "\n";
    for (const auto& [x, y] : ext.map) std::cout << x << " ↦ " << y << "\n";
    const bool hom = is_homomorphism(ElementMap(src.algebra, tgt.algebra, ext.map)).holds;
    std::cout << "homomorphism: " << yes_no(hom) << "\n";
    emit_witness(opt, {{"map", ext.map}, {"oracle", ext.oracle_name}, {"homomorphism", hom}});
    return hom ? kHolds : kFails;
  } catch (const NotWeaklyFree& e) {
    std::cout << "not weakly free: " << e.what() << "\n";
    emit_witness(opt, not_weakly_free_json(e));
    return kFails;
  }
}

int cmd_embed(const Options& opt) {
  const auto doc = io::load_document(opt.file);
  try {
    const TermEmbedding emb = embed_into_terms(doc.algebra);
    const ElementMap f(doc.algebra, emb.codomain, emb.mapping);
    const MultiAlgebra image = direct_image(f);
    const bool iso = is_isomorphism(ElementMap(doc.algebra, image, emb.mapping));
    std::cout << "kappa: " << emb.kappa << "\n";
    std::cout << "depth: " << emb.depth << "\n";
    for (const auto& [x, t] : emb.mapping) std::cout << x << " ↦ " << t << "\n";
    std::cout << "isomorphism onto image: " << yes_no(iso) << "\n";
    emit_witness(opt, {{"kappa", emb.kappa},
                       {"depth", emb.depth},
                       {"mapping", emb.mapping},
                       {"isomorphism", iso},
                       {"image", io::to_json(image)}});
    return iso ? kHolds : kFails;
  } catch (const NotWeaklyFree& e) {
    std::cout << "not weakly free: " << e.what() << "\n";
    emit_witness(opt, not_weakly_free_json(e));
    return kFails;
  }
}

int cmd_terms(const Options& opt) {
  const Signature sig = io::parse_signature_spec(opt.sig);
  const MultiAlgebra m = truncate_mt(sig, split_list(opt.vars), opt.kappa, opt.depth);
  emit_output(opt, io::to_json(m).dump(2) + "\n");
  return kHolds;
}

int cmd_ump(const Options& opt) {
  const Signature sig = io::parse_signature_spec(opt.sig);
  const UmpDemo demo = ump_refutation_demo(sig, split_list(opt.vars), opt.depth);

  // Rows by term order, then name.
  std::vector<std::pair<std::size_t, Element>> rows;
  for (const auto& t : demo.terms.universe()) rows.emplace_back(term_order(parse_formula(t, sig)), t);
  std::sort(rows.begin(), rows.end());

  std::size_t width = 4;
  for (const auto& t : demo.terms.universe()) width = std::max(width, t.size());
  std::size_t width_c = 3;
  for (const auto& [t, c] : demo.id_c) width_c = std::max(width_c, c.size());
  std::cout << std::left << std::setw(static_cast<int>(width + 2)) << "term"
            << std::setw(static_cast<int>(width_c + 2)) << "idC" << "idD\n";
  for (const auto& [order, t] : rows) {
    std::cout << std::setw(static_cast<int>(width + 2)) << t
              << std::setw(static_cast<int>(width_c + 2)) << demo.id_c.at(t) << demo.id_d.at(t)
              << "\n";
  }
  std::cout << "both homomorphisms: " << yes_no(demo.both_homomorphisms)
            << "; agree on variables: " << yes_no(demo.agree_on_variables) << "; differ on "
            << demo.differing_terms << "/" << demo.composite_terms << " composite terms\n";
  std::cout << "universal mapping property refuted: " << yes_no(demo.refutes()) << "\n";
  emit_witness(opt, {{"id_c", demo.id_c},
                     {"id_d", demo.id_d},
                     {"both_homomorphisms", demo.both_homomorphisms},
                     {"agree_on_variables", demo.agree_on_variables},
                     {"composite_terms", demo.composite_terms},
                     {"differing_terms", demo.differing_terms}});
  return demo.refutes() ? kHolds : kFails;
}

int report_consequence(const Options& opt, const char* label, const ConsequenceResult& r) {
  if (r) {
    std::cout << label << ": yes\n";
    emit_witness(opt, {{"holds", true}, {"countervaluation", nullptr}});
    return kHolds;
  }
  std::cout << label << ": no; countervaluation: " << describe(*r.countervaluation) << "\n";
  emit_witness(opt, {{"holds", false}, {"countervaluation", *r.countervaluation}});
  return kFails;
}

int cmd_nm_taut(const Options& opt) {
  const NMatrix m = io::to_nmatrix(io::load_document(opt.file));
  const Formula phi = parse_formula(opt.formula, m.algebra().signature());
  return report_consequence(opt, "tautology", is_tautology(phi, m));
}

int cmd_nm_entails(const Options& opt) {
  const NMatrix m = io::to_nmatrix(io::load_document(opt.file));
  std::vector<Formula> gamma;
  for (const auto& p : opt.premises) gamma.push_back(parse_formula(p, m.algebra().signature()));
  const Formula phi = parse_formula(opt.formula, m.algebra().signature());
  return report_consequence(opt, "entails", entails(gamma, phi, m));
}

int cmd_graph_import(const Options& opt) {
  if (opt.partial && opt.total) throw InvalidArgument("--partial and --total are exclusive");
  const io::DirectedGraph g = io::load_graph(opt.file);
  const MultiAlgebra m =
      io::graph_to_multialgebra(g, opt.total ? io::Totality::Total : io::Totality::Partial);
  emit_output(opt, io::to_json(m).dump(2) + "\n");
  return kHolds;
}

int cmd_graph_export(const Options& opt) {
  const auto doc = io::load_document(opt.file);
  const io::DirectedGraph g = io::multialgebra_to_graph(doc.algebra);
  emit_output(opt, opt.dot ? io::to_dot(g) : io::to_json(g).dump(2) + "\n");
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multialgebras: structure checks, term embeddings, Nmatrix semantics"};
  app.require_subcommand(1);
  Options opt;
  std::function<int(const Options&)> run;

  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--witness-out", opt.witness_out, "Write a JSON witness to PATH");
    sub->callback([&run, handler] { run = handler; });
    return sub;
  };

  auto* check = add("check", "Decide weak freeness and print every clause", cmd_check);
  check->add_option("file", opt.file, "Multialgebra document")->required();

  auto* hom = add("hom", "Check a map between two multialgebras", cmd_hom);
  hom->add_option("files", opt.files, "SOURCE TARGET MAP")->required()->expected(3);

  auto* extend = add("extend", "Extend a ground map along a collection of choices", cmd_extend);
  extend->add_option("files", opt.files, "SOURCE TARGET SEED_MAP")->required()->expected(3);
  extend->add_option("--oracle", opt.oracle, "Choice strategy")
      ->check(CLI::IsMember({"first", "injective", "random"}));
  extend->add_option("--seed", opt.seed, "Seed for --oracle random");

  auto* embed = add("embed", "Embed a weakly free multialgebra into a term multialgebra", cmd_embed);
  embed->add_option("file", opt.file, "Multialgebra document")->required();

  auto* terms = add("terms", "Write a truncated term multialgebra document", cmd_terms);
  terms->add_option("--sig", opt.sig, "Signature, e.g. s:1,f:2")->required();
  terms->add_option("--vars", opt.vars, "Variables, e.g. x,y");
  terms->add_option("--kappa", opt.kappa, "Branching degree")->check(CLI::PositiveNumber);
  terms->add_option("--depth", opt.depth, "Maximum term order");
  terms->add_option("--out", opt.out, "Output path (default stdout)");

  auto* ump = add("ump-demo", "Two distinct extensions of the identity on variables", cmd_ump);
  ump->add_option("--sig", opt.sig, "Signature, e.g. s:1")->required();
  ump->add_option("--vars", opt.vars, "Variables, e.g. x");
  ump->add_option("--depth", opt.depth, "Maximum term order")->check(CLI::PositiveNumber);

  auto* taut = add("nm-taut", "Tautology check over an Nmatrix", cmd_nm_taut);
  taut->add_option("matrix", opt.file, "Nmatrix document")->required();
  taut->add_option("formula", opt.formula, "Formula, e.g. or(p,not(p))")->required();

  auto* ent = add("nm-entails", "Consequence check over an Nmatrix", cmd_nm_entails);
  ent->add_option("matrix", opt.file, "Nmatrix document")->required();
  ent->add_option("formula", opt.formula, "Conclusion")->required();
  ent->add_option("--premise", opt.premises, "Premise (repeatable)");

  auto* gin = add("graph-import", "Directed graph document to Σ_s-multialgebra", cmd_graph_import);
  gin->add_option("graph", opt.file, "Graph document")->required();
  gin->add_flag("--partial", opt.partial, "Leave successor-less vertices undefined (default)");
  gin->add_flag("--total", opt.total, "Require every vertex to have a successor");
  gin->add_option("--out", opt.out, "Output path (default stdout)");

  auto* gout = add("graph-export", "Σ_s-multialgebra to graph document or DOT", cmd_graph_export);
  gout->add_option("file", opt.file, "Multialgebra document")->required();
  gout->add_flag("--dot", opt.dot, "Emit DOT instead of JSON");
  gout->add_option("--out", opt.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    return run(opt);
  } catch (const EquivalenceViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const malg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
