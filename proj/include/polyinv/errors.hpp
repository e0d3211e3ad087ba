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

#ifndef POLYINV_ERRORS_HPP
#define POLYINV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyinv {

/// Two scalars from different cyclotomic fields were combined.
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two polynomials from different variable contexts were combined.
struct ContextMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Expression text rejected by the parser; `position` is a 0-based
/// offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// A polynomial handed to decompose() is not fixed by the map.
struct NotInvariantError : std::runtime_error {
    NotInvariantError(const std::string& what, std::string monomial)
        : std::runtime_error(what), first_differing_monomial(std::move(monomial)) {}
    std::string first_differing_monomial;
};

/// A user-supplied generator fails the validity checks.
struct BadGeneratorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exact algebraic identity that must hold failed to hold.  Either a
/// broken internal invariant or a falsified mathematical claim; always fatal.
struct VerificationError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace polyinv

#endif
