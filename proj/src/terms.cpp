#include "malg/terms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "malg/error.hpp"

namespace malg {

Term Term::variable(std::string name) {
  Term t;
  t.is_variable_ = true;
  t.name_ = std::move(name);
  return t;
}

Term Term::node(std::string symbol, std::size_t superscript, std::vector<Term> children) {
  Term t;
  t.is_variable_ = false;
  t.name_ = std::move(symbol);
  t.superscript_ = superscript;
  t.children_ = std::move(children);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  return a.is_variable_ == b.is_variable_ && a.name_ == b.name_ &&
         a.superscript_ == b.superscript_ && a.children_ == b.children_;
}

bool operator<(const Term& a, const Term& b) {
  if (a.is_variable_ != b.is_variable_) return a.is_variable_;
  if (a.name_ != b.name_) return a.name_ < b.name_;
  if (a.superscript_ != b.superscript_) return a.superscript_ < b.superscript_;
  return std::lexicographical_compare(a.children_.begin(), a.children_.end(),
                                      b.children_.begin(), b.children_.end());
}

std::size_t term_order(const Term& t) {
  if (t.children().empty()) return 0;
  std::size_t m = 0;
  for (const auto& c : t.children()) m = std::max(m, term_order(c));
  return m + 1;
}

namespace {

void print_into(const Term& t, bool superscripts, std::string& out) {
  out += t.name();
  if (t.is_variable()) return;
  if (superscripts) out += "^" + std::to_string(t.superscript());
  if (t.children().empty()) return;
  out += "(";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ",";
    print_into(t.children()[i], superscripts, out);
  }
  out += ")";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const Signature& signature, bool superscripts)
      : text_(text), signature_(signature), superscripts_(superscripts) {}

  std::function<bool(const std::string&)> is_variable;
  std::size_t kappa = 1;

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected superscript");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) {
      throw SuperscriptOutOfRange("superscript " + digits + " is out of range");
    }
    return std::stoul(digits);
  }

  std::vector<Term> arguments() {
    std::vector<Term> children;
    expect('(');
    children.push_back(term());
    while (peek(',')) {
      ++pos_;
      children.push_back(term());
    }
    expect(')');
    return children;
  }

  Term finish(const std::string& name, std::size_t beta, std::vector<Term> children) {
    auto arity = signature_.arity(name);
    if (!arity) throw UnknownSymbol("unknown symbol '" + name + "'");
    if (*arity != children.size()) {
      throw ArityMismatch("'" + name + "' expects " + std::to_string(*arity) +
                          " arguments, got " + std::to_string(children.size()));
    }
    return Term::node(name, beta, std::move(children));
  }

  Term term() {
    const std::string name = ident();
    if (superscripts_) {
      if (!peek('^')) {
        if (peek('(')) fail("missing superscript on '" + name + "'");
        if (!is_variable(name)) throw UnknownSymbol("undeclared variable '" + name + "'");
        return Term::variable(name);
      }
      ++pos_;
      std::size_t beta = nat();
      if (beta >= kappa) {
        throw SuperscriptOutOfRange("superscript " + std::to_string(beta) + " of '" + name +
                                    "' must be below " + std::to_string(kappa));
      }
      std::vector<Term> children;
      if (peek('(')) children = arguments();
      return finish(name, beta, std::move(children));
    }
    if (peek('^')) fail("superscripts are not allowed in formulas");
    if (peek('(')) return finish(name, 0, arguments());
    if (signature_.arity(name) == std::optional<std::size_t>(0)) return Term::node(name, 0);
    return Term::variable(name);
  }

  std::string_view text_;
  const Signature& signature_;
  bool superscripts_;
  std::size_t pos_ = 0;
};

void check_variable_name(const std::string& v) {
  if (v.empty()) throw InvalidArgument("empty variable name");
  for (char c : v) {
    if (c == '^' || c == '(' || c == ')' || c == ',' ||
        std::isspace(static_cast<unsigned char>(c))) {
      throw InvalidArgument("variable name '" + v + "' collides with term syntax");
    }
  }
}

MultiAlgebra build_fragment(const Signature& signature, const ElementSet& variables,
                            std::size_t kappa, std::size_t depth, bool superscripts) {
  if (kappa == 0) throw InvalidArgument("kappa must be at least 1");
  bool has_constant = false;
  for (const auto& [name, arity] : signature.symbols()) has_constant |= arity == 0;
  if (variables.empty() && !has_constant) {
    throw EmptyUniverse("no variables and no 0-ary symbols: the term fragment is empty");
  }
  for (const auto& v : variables) {
    check_variable_name(v);
    if (!superscripts && signature.arity(v) == std::optional<std::size_t>(0)) {
      throw InvalidArgument("variable '" + v + "' shadows a constant");
    }
  }
  auto print = [&](const Term& t) { return superscripts ? print_term(t) : print_formula(t); };

  const std::vector<Term> terms = enumerate_terms(signature, variables, kappa, depth);
  ElementSet universe;
  for (const auto& t : terms) universe.insert(print(t));

  // Arguments of a defined application have order ≤ depth - 1.
  std::vector<Term> pool;
  if (depth > 0) {
    for (const auto& t : terms) {
      if (term_order(t) + 1 <= depth) pool.push_back(t);
    }
  }

  Table table;
  for (const auto& [symbol, arity] : signature.symbols()) {
    if (arity > 0 && pool.empty()) continue;
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      std::vector<Term> args;
      Tuple names;
      for (std::size_t i : idx) {
        args.push_back(pool[i]);
        names.push_back(print(pool[i]));
      }
      ElementSet results;
      for (const auto& r : mt_apply(signature, symbol, args, kappa)) results.insert(print(r));
      table.emplace(Application{symbol, std::move(names)}, std::move(results));

      std::size_t i = arity;
      while (i > 0 && ++idx[i - 1] == pool.size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  return MultiAlgebra(signature, std::move(universe), std::move(table), false);
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, true, out);
  return out;
}

std::string print_formula(const Term& t) {
  std::string out;
  print_into(t, false, out);
  return out;
}

Term parse_term(std::string_view text, const TermContext& context) {
  Parser parser(text, context.signature, true);
  parser.kappa = context.kappa;
  parser.is_variable = [&](const std::string& v) { return context.variables.count(v) != 0; };
  return parser.parse();
}

Term parse_formula(std::string_view text, const Signature& signature) {
  Parser parser(text, signature, false);
  parser.is_variable = [](const std::string&) { return true; };
  return parser.parse();
}

std::vector<Term> mt_apply(const Signature& signature, const std::string& symbol,
                           const std::vector<Term>& args, std::size_t kappa) {
  if (kappa == 0) throw InvalidArgument("kappa must be at least 1");
  auto arity = signature.arity(symbol);
  if (!arity) throw UnknownSymbol("unknown symbol '" + symbol + "'");
  if (*arity != args.size()) {
    throw ArityMismatch("'" + symbol + "' expects " + std::to_string(*arity) +
                        " arguments, got " + std::to_string(args.size()));
  }
  std::vector<Term> out;
  out.reserve(kappa);
  for (std::size_t beta = 0; beta < kappa; ++beta) out.push_back(Term::node(symbol, beta, args));
  return out;
}

std::vector<Term> enumerate_terms(const Signature& signature, const ElementSet& variables,
                                  std::size_t kappa, std::size_t depth) {
  if (kappa == 0) throw InvalidArgument("kappa must be at least 1");
  std::vector<Term> pool;
  for (const auto& v : variables) pool.push_back(Term::variable(v));
  for (const auto& [symbol, arity] : signature.symbols()) {
    if (arity != 0) continue;
    for (std::size_t beta = 0; beta < kappa; ++beta) pool.push_back(Term::node(symbol, beta));
  }
  std::sort(pool.begin(), pool.end());
  std::vector<std::size_t> orders(pool.size(), 0);
  for (std::size_t k = 1; k <= depth; ++k) {
    std::vector<Term> level;
    for (const auto& [symbol, arity] : signature.symbols()) {
      if (arity == 0 || pool.empty()) continue;
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        bool reaches = std::any_of(idx.begin(), idx.end(),
                                   [&](std::size_t i) { return orders[i] + 1 == k; });
        if (reaches) {
          std::vector<Term> args;
          for (std::size_t i : idx) args.push_back(pool[i]);
          for (std::size_t beta = 0; beta < kappa; ++beta) level.push_back(Term::node(symbol, beta, args));
        }
        std::size_t i = arity;
        while (i > 0 && ++idx[i - 1] == pool.size()) idx[--i] = 0;
        if (i == 0) break;
      }
    }
    if (level.empty()) break;
    std::sort(level.begin(), level.end());
    for (auto& t : level) {
      pool.push_back(std::move(t));
      orders.push_back(k);
    }
  }
  return pool;
}

MultiAlgebra truncate_mt(const Signature& signature, const ElementSet& variables,
                         std::size_t kappa, std::size_t depth) {
  return build_fragment(signature, variables, kappa, depth, true);
}

MultiAlgebra truncate_terms(const Signature& signature, const ElementSet& variables,
                            std::size_t depth) {
  return build_fragment(signature, variables, 1, depth, false);
}

std::vector<std::string> symbols_of(const Term& t) {
  std::vector<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.is_variable()) return;
    out.push_back(u.name());
    for (const auto& c : u.children()) walk(c);
  };
  walk(t);
  return out;
}

}  // namespace malg
