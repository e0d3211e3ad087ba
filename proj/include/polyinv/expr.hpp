/*
   Copyright 2026 The polyinv authors

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

#ifndef POLYINV_EXPR_HPP
#define POLYINV_EXPR_HPP

#include <iosfwd>
#include <string>

#include "polyinv/mpoly.hpp"

namespace polyinv {

/// Parse an expression into an exact polynomial over the given context.
///
/// Grammar (no implicit multiplication):
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | ident | '(' expr ')' | '-' base
///   rational := uint ('/' uint)?
///
/// `w` denotes the field generator zeta_M and is only valid when M > 1.
/// Note that '-' binds to the base, so "-z^2" means (-z)^2; the printer
/// below never emits that shape.
MPoly parse(const std::string& text, const ContextPtr& ctx);

/// Canonical rendering: terms in decreasing canonical monomial order,
/// rational coefficients as "n" or "n/d", cyclotomic coefficients as
/// parenthesized polynomials in w.  Output depends only on the term map
/// and context, and parse(format(F)) == F.
std::string format(const MPoly& F);

/// One scalar in the same convention ("-3/2", "(w + 1)", ...).
std::string format_scalar(const CycloNum& c);

std::ostream& operator<<(std::ostream& os, const MPoly& F);

}  // namespace polyinv

#endif
