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

#ifndef PROOFMINE_SYNTAX_HPP_
#define PROOFMINE_SYNTAX_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "proofmine/formula.hpp"
#include "proofmine/term.hpp"

namespace proofmine {

/// Prefix s-expression syntax shared by terms and formulas.
///
///   term    := numeral | const | const[type,...] | name | name:type
///            | (App term term) | (term term ...)
///   formula := bot | (= t t) | (<= t t) | (=R t t) | (<=R t t) | (<R t t)
///            | (eq type t t) | (eqX t t) | (preceq type t t) | (in y x)
///            | (and f f ...) | (or f f ...) | (-> f f) | (not f)
///            | (forall name type f) | (exists name type f)
///
/// A free variable is declared once with name:type; later bare occurrences
/// reuse that type. Text after ';' up to the end of the line is ignored.
Term ParseTerm(std::string_view text, const VarContext& ctx = {});
Formula ParseFormula(std::string_view text, const VarContext& ctx = {});
/// Every top-level formula in the text, in order.
std::vector<Formula> ParseFormulas(std::string_view text);
std::vector<Formula> ParseFormulaFile(const std::string& path);

}  // namespace proofmine

#endif  // PROOFMINE_SYNTAX_HPP_
