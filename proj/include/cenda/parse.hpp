/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CENDA_PARSE_HPP
#define CENDA_PARSE_HPP

#include <string>
#include <vector>

#include "cenda/conformal.hpp"
#include "cenda/errors.hpp"
#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"

namespace cenda {

// Textual polynomial grammar, used by every file format:
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := number | variable ['^' exponent]
//   number := digits ['/' digits]
// Whitespace-insensitive; coefficient 1 and exponent 1 may be omitted.
// Lines may carry '#' comments.

/// Parse a bivariate polynomial in D and x.
Poly2 parse_poly2(const std::string& text);

/// Parse a univariate polynomial. `letters` lists accepted variable letters
/// (e.g. "y" or "yxt"); whichever appears must be used consistently, and the
/// result is retagged to `tag`.
Poly1 parse_poly1(const std::string& text, const std::string& letters, Var tag);

/// Parse a stream of conformal elements. Each element starts with "N=<size>"
/// and is followed by "[i,j]: <poly>" statements (newline- or ';'-separated,
/// 1-based indices, omitted entries zero).
std::vector<ConformalElement> parse_elements(const std::string& text);

/// Parse exactly one conformal element.
ConformalElement parse_element(const std::string& text);

/// Parse a univariate polynomial matrix: "rows=<r>", "cols=<c>", then
/// "[i,j]: <poly>" statements in the variable y (the letters x and t are
/// accepted as aliases and normalized to y).
Matrix<Poly1> parse_pmat(const std::string& text);

std::string pmat_str(const Matrix<Poly1>& m);
std::string pmat_str_inline(const Matrix<Poly1>& m);

}  // namespace cenda

#endif
