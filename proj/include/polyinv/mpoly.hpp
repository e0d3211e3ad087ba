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

#ifndef POLYINV_MPOLY_HPP
#define POLYINV_MPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyinv/cyclo.hpp"

namespace polyinv {

/// Variable context shared by a family of polynomials: an ordered list of
/// names whose last entry is the distinguished variable (conventionally z),
/// over a cyclotomic coefficient field.
class PolyContext {
  public:
    static std::shared_ptr<const PolyContext> make(std::vector<std::string> names,
                                                   unsigned field_index);
    static std::shared_ptr<const PolyContext> make(std::vector<std::string> names,
                                                   FieldPtr field);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t nvars() const { return names_.size(); }
    std::size_t z_slot() const { return names_.size() - 1; }
    const FieldPtr& field() const { return field_; }

  private:
    PolyContext(std::vector<std::string> names, FieldPtr field)
        : names_(std::move(names)), field_(std::move(field)) {}
    std::vector<std::string> names_;
    FieldPtr field_;
};

using ContextPtr = std::shared_ptr<const PolyContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Exponent vector, one slot per context variable (x-block first, z last).
using Monomial = std::vector<unsigned>;

unsigned monomial_degree(const Monomial& m);

/// Canonical monomial order: graded, ties broken by componentwise
/// lexicographic comparison of the exponent tuple read from the first
/// variable.  Fixes printing, leading terms, and division.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q(zeta_M).  Canonical form: the term
/// map never stores a zero coefficient, so structural equality is
/// polynomial equality.
class MPoly {
  public:
    using TermMap = std::map<Monomial, CycloNum, MonomialOrder>;

    explicit MPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MPoly zero(const ContextPtr& ctx) { return MPoly(ctx); }
    static MPoly constant(const ContextPtr& ctx, const CycloNum& c);
    static MPoly constant(const ContextPtr& ctx, const Rational& r);
    static MPoly variable(const ContextPtr& ctx, std::size_t slot);
    static MPoly term(const ContextPtr& ctx, Monomial m, const CycloNum& c);

    const ContextPtr& context() const { return ctx_; }
    // ref-qualified so that iterating terms() of a temporary stays valid
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial (zero if absent); the full value
    /// when is_constant().
    CycloNum constant_value() const;
    CycloNum coefficient(const Monomial& m) const;

    int total_degree() const;  // -1 for the zero polynomial

    const Monomial& leading_monomial() const;
    const CycloNum& leading_coefficient() const;

    bool has_integer_coefficients() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const CycloNum& c) const;
    friend MPoly operator*(const MPoly& a, const CycloNum& c) { return a.scaled(c); }
    friend MPoly operator*(const CycloNum& c, const MPoly& a) { return a.scaled(c); }
    friend MPoly operator*(const MPoly& a, const Rational& r);
    friend MPoly operator*(const Rational& r, const MPoly& a) { return a * r; }

    /// F^k by repeated squaring; F^0 = 1 for every F.
    MPoly pow(unsigned k) const;

    /// Exact evaluation at a rational point (one value per variable).
    CycloNum eval(const std::vector<Rational>& point) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  private:
    void add_term(const Monomial& m, const CycloNum& c);
    ContextPtr ctx_;
    TermMap terms_;
};

/// Quotient F / D when D divides F exactly, absent otherwise.  Leading-term
/// reduction under the canonical order; a surviving remainder yields absent,
/// never a wrong quotient.
std::optional<MPoly> exact_div(const MPoly& F, const MPoly& D);

/// Replace variable `slot` by the polynomial p, expanding exactly.
MPoly substitute_var(const MPoly& F, std::size_t slot, const MPoly& p);

/// Replace the distinguished last variable by p; all others untouched.
MPoly substitute_z(const MPoly& F, const MPoly& p);

/// Degree in the distinguished variable; -1 for the zero polynomial.
int degree_in_z(const MPoly& F);

/// The sub-polynomial of terms free of the distinguished variable,
/// i.e. F evaluated at z = 0.
MPoly eval_z_zero(const MPoly& F);

/// Coefficients c_0..c_d with F = sum c_k z^k, each free of z.
/// Empty for the zero polynomial.
std::vector<MPoly> z_coefficients(const MPoly& F);

/// Same, for an arbitrary variable slot.
std::vector<MPoly> coefficients_in(const MPoly& F, std::size_t slot);

/// Relabel variables: slot i goes to slot sigma[i]; sigma must be a
/// bijection on all nvars slots.
MPoly permute_vars(const MPoly& F, const std::vector<std::size_t>& sigma);

/// For P = a z + c and Q = a' z + c' (a, a', c, c' free of z, a, a' != 0):
/// the z-resultant a c' - a' c.  P, Q are coprime in K(x)[z] exactly when
/// the witness is nonzero; interpretation is the caller's.
MPoly linear_coprime_witness(const MPoly& P, const MPoly& Q);

}  // namespace polyinv

#endif
