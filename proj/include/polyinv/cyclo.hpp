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

#ifndef POLYINV_CYCLO_HPP
#define POLYINV_CYCLO_HPP

#include <memory>
#include <optional>
#include <vector>

#include "polyinv/rational.hpp"

namespace polyinv {

unsigned euler_phi(unsigned n);

/// Coefficients of the M-th cyclotomic polynomial, ascending in w.
/// Monic of degree phi(M), computed by exact division of w^M - 1 by the
/// cyclotomic polynomials of the proper divisors of M.
std::vector<Integer> cyclotomic_polynomial(unsigned index);

/// The field Q(zeta_M), realized as residues modulo Phi_M.  index = 1 is
/// plain Q.  Fields compare by index, not identity.
class CycloField {
  public:
    static std::shared_ptr<const CycloField> make(unsigned index);

    unsigned index() const { return index_; }
    std::size_t degree() const { return modulus_.size() - 1; }
    const std::vector<Integer>& modulus() const { return modulus_; }

  private:
    CycloField(unsigned index, std::vector<Integer> modulus)
        : index_(index), modulus_(std::move(modulus)) {}
    unsigned index_;
    std::vector<Integer> modulus_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a.get() == b.get() || a->index() == b->index();
}

/// Element of Q(zeta_M): the residue representative modulo Phi_M, stored
/// as phi(M) rational coordinates (ascending powers of w).  Immutable in
/// spirit; all arithmetic returns reduced values.
class CycloNum {
  public:
    CycloNum(FieldPtr field, std::vector<Rational> coeffs);

    static CycloNum zero(const FieldPtr& f);
    static CycloNum one(const FieldPtr& f);
    static CycloNum from_rational(const FieldPtr& f, const Rational& r);
    /// zeta_M itself, i.e. w reduced mod Phi_M (equals 1 for M = 1, -1 for M = 2).
    static CycloNum generator(const FieldPtr& f);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (all coordinates above w^0 vanish).
    bool is_rational() const;
    bool is_integer() const;
    /// The w^0 coordinate; only meaningful together with is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator/(const CycloNum& o) const;
    CycloNum inverse() const;
    CycloNum pow(unsigned long k) const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// Least k >= 1 with a^k = 1, searched up to lcm(2, M); absent when a is
/// not a root of unity.  Every root of unity in Q(zeta_M) has order
/// dividing lcm(2, M), so the bound is exhaustive.
std::optional<unsigned> root_of_unity_order(const CycloNum& a);

}  // namespace polyinv

#endif
