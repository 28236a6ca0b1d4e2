// Copyright 2026 The proofmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "proofmine/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>

#include "proofmine/error.hpp"

namespace proofmine {

namespace {

struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t offset = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  SExpr Read() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    SExpr e;
    e.offset = pos_;
    if (text_[pos_] == '(') {
      e.is_atom = false;
      ++pos_;
      while (true) {
        SkipSpace();
        if (pos_ >= text_.size()) Fail("unbalanced '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(Read());
      }
    }
    if (text_[pos_] == ')') Fail("unexpected ')'");
    // An atom may carry directly attached bracket groups, as in X(X)(1),
    // Pi[0,0] or f:0(0).
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == ')' || c == ';')) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      e.atom.push_back(c);
      ++pos_;
    }
    if (depth != 0) Fail("unbalanced brackets in '" + e.atom + "'");
    return e;
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw Error(ErrorCode::kParseError, msg + " at offset " + std::to_string(pos_));
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void Fail(const SExpr& e, const std::string& msg) {
  throw Error(ErrorCode::kParseError, msg + " at offset " + std::to_string(e.offset));
}

bool IsNumber(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<FinType> ParseTypeList(const std::string& inner, const SExpr& e) {
  std::vector<FinType> out;
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(ParseType(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(ParseType(cur));
  if (out.empty()) Fail(e, "empty type parameter list");
  return out;
}

class Parser {
 public:
  explicit Parser(const VarContext& ctx) : free_(ctx) {}

  Term ParseTermExpr(const SExpr& e) {
    if (e.is_atom) return ParseAtom(e);
    if (e.items.empty()) Fail(e, "empty application");
    std::size_t first = 0;
    if (e.items[0].is_atom && e.items[0].atom == "App") {
      if (e.items.size() != 3) Fail(e, "App takes two arguments");
      first = 1;
    }
    Term head = ParseTermExpr(e.items[first]);
    std::vector<Term> args;
    for (std::size_t i = first + 1; i < e.items.size(); ++i) args.push_back(ParseTermExpr(e.items[i]));
    return Term::Apply(head, args);
  }

  Formula ParseFormulaExpr(const SExpr& e) {
    if (e.is_atom) {
      if (e.atom == "bot") return Formula::Falsum();
      Fail(e, "expected a formula, got '" + e.atom + "'");
    }
    if (e.items.empty() || !e.items[0].is_atom) Fail(e, "expected a formula head");
    const std::string& op = e.items[0].atom;
    const std::size_t n = e.items.size() - 1;
    auto arity = [&](std::size_t k) {
      if (n != k) Fail(e, "'" + op + "' takes " + std::to_string(k) + " arguments");
    };
    auto term = [&](std::size_t i) { return ParseTermExpr(e.items[i]); };
    auto type = [&](std::size_t i) {
      if (!e.items[i].is_atom) Fail(e.items[i], "expected a type");
      return ParseType(e.items[i].atom);
    };
    static const std::map<std::string, Formula::Rel> kRels = {
        {"=", Formula::Rel::kEq0},   {"<=", Formula::Rel::kLe0}, {"=R", Formula::Rel::kEqR},
        {"<=R", Formula::Rel::kLeR}, {"<R", Formula::Rel::kLtR}};
    if (auto it = kRels.find(op); it != kRels.end()) {
      arity(2);
      return Formula::Atom(it->second, term(1), term(2));
    }
    if (op == "eq" || op == "preceq") {
      arity(3);
      return Formula::Defined(op == "eq" ? Formula::Pred::kEqAt : Formula::Pred::kPreceq, type(1), term(2),
                              term(3));
    }
    if (op == "eqX") {
      arity(2);
      return Formula::Defined(Formula::Pred::kEqX, FinType::X(), term(1), term(2));
    }
    if (op == "in") {
      arity(2);
      return Formula::Defined(Formula::Pred::kMember, FinType::X(), term(1), term(2));
    }
    if (op == "and" || op == "or") {
      if (n < 1) Fail(e, "'" + op + "' needs an argument");
      Formula acc = ParseFormulaExpr(e.items[n]);
      for (std::size_t i = n - 1; i >= 1; --i) {
        Formula lhs = ParseFormulaExpr(e.items[i]);
        acc = op == "and" ? Formula::And(lhs, acc) : Formula::Or(lhs, acc);
      }
      return acc;
    }
    if (op == "->") {
      arity(2);
      return Formula::Implies(ParseFormulaExpr(e.items[1]), ParseFormulaExpr(e.items[2]));
    }
    if (op == "not") {
      arity(1);
      return Formula::Not(ParseFormulaExpr(e.items[1]));
    }
    if (op == "forall" || op == "exists") {
      arity(3);
      if (!e.items[1].is_atom) Fail(e.items[1], "expected a variable name");
      const std::string name = e.items[1].atom;
      FinType t = type(2);
      bound_.emplace_back(name, t);
      Formula body = ParseFormulaExpr(e.items[3]);
      bound_.pop_back();
      return op == "forall" ? Formula::Forall(name, t, body) : Formula::Exists(name, t, body);
    }
    Fail(e, "unknown formula head '" + op + "'");
  }

 private:
  Term ParseAtom(const SExpr& e) {
    const std::string& s = e.atom;
    if (IsNumber(s)) return Numeral(std::stoull(s));
    if (auto colon = s.find(':'); colon != std::string::npos) {
      std::string name = s.substr(0, colon);
      FinType t = ParseType(s.substr(colon + 1));
      for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
        if (it->first == name) Fail(e, "'" + name + "' is bound; do not annotate it");
      if (auto it = free_.find(name); it != free_.end() && it->second != t)
        Fail(e, "'" + name + "' declared with two types");
      free_[name] = t;
      return Term::Var(name, t);
    }
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->first == s) return Term::Var(s, it->second);
    if (auto it = free_.find(s); it != free_.end()) return Term::Var(s, it->second);
    std::string base = s;
    std::vector<FinType> params;
    if (auto br = s.find('['); br != std::string::npos) {
      if (s.back() != ']') Fail(e, "malformed type parameters in '" + s + "'");
      base = s.substr(0, br);
      params = ParseTypeList(s.substr(br + 1, s.size() - br - 2), e);
    }
    auto kind = ConstFromName(base);
    if (!kind) throw Error(ErrorCode::kUnboundVariable, "unknown identifier '" + s + "'");
    return Term::Const(*kind, params);
  }

  VarContext free_;
  std::vector<std::pair<std::string, FinType>> bound_;
};

}  // namespace

Term ParseTerm(std::string_view text, const VarContext& ctx) {
  Reader reader(text);
  SExpr e = reader.Read();
  if (!reader.AtEnd()) reader.Fail("trailing input after term");
  Parser parser(ctx);
  return parser.ParseTermExpr(e);
}

namespace {

void CheckWellTyped(const Formula& f) {
  VarContext ctx;
  for (const TypedVar& v : FreeVariables(f)) ctx[v.name] = v.type;
  TypeCheckFormula(f, ctx);
}

}  // namespace

Formula ParseFormula(std::string_view text, const VarContext& ctx) {
  Reader reader(text);
  SExpr e = reader.Read();
  if (!reader.AtEnd()) reader.Fail("trailing input after formula");
  Parser parser(ctx);
  Formula f = parser.ParseFormulaExpr(e);
  CheckWellTyped(f);
  return f;
}

std::vector<Formula> ParseFormulas(std::string_view text) {
  Reader reader(text);
  std::vector<Formula> out;
  while (!reader.AtEnd()) {
    SExpr e = reader.Read();
    Parser parser({});
    out.push_back(parser.ParseFormulaExpr(e));
    CheckWellTyped(out.back());
  }
  return out;
}

std::vector<Formula> ParseFormulaFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseFormulas(buf.str());
}

}  // namespace proofmine
