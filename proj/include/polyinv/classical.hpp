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

#ifndef POLYINV_CLASSICAL_HPP
#define POLYINV_CLASSICAL_HPP

#include "polyinv/invariance.hpp"
#include "polyinv/mpoly.hpp"

namespace polyinv {

/// Shared contexts for the classical identities: (x, y, z) over Q, and a
/// single variable t over Q.
ContextPtr trivariate_context();
ContextPtr univariate_context();

/// The map z -> -(x+y+z) on the trivariate context (2-adequate, q = -1,
/// r = -(x+y)).  E3 is invariant under it.
AdequateMap granville_map();

/// (x+y)^p - x^p - y^p  (z-free in the trivariate context).
MPoly power_gap2(unsigned p);

/// (t+1)^p - t^p - 1 = sum_{k=1}^{p-1} C(p,k) t^k; the dehomogenization
/// of power_gap2 by y^p.
MPoly power_gap_univariate(unsigned p);

/// Multiplicity of t^2+t+1 in the univariate power gap: 1 when
/// p = -1 (mod 6), 2 when p = 1 (mod 6).
unsigned cyclotomic_multiplicity(unsigned p);

/// (t+1)^p - t^p - 1 = p t (t+1) (t^2+t+1)^multiplicity * cauchy, with
/// cauchy of degree p - 3 - 2*multiplicity and integer coefficients.
struct CauchyFactorization {
    unsigned p;
    unsigned multiplicity;
    MPoly cauchy;  // univariate context
};

CauchyFactorization cauchy_factorization(unsigned p);

/// The Cauchy polynomial homogenized to x, y: sum c_j x^j y^(deg-j).
MPoly cauchy_xy(const CauchyFactorization& f);

/// E2 = ((x+y)^p - x^p - y^p) / (p x y (x+y)), checked to equal
/// (x^2+xy+y^2)^multiplicity * cauchy_xy with integer coefficients.
MPoly e2_by_division(unsigned p);

/// E2 built directly from its coefficients (C(p-1,k) - (-1)^k)/p, each
/// checked to be an integer.
MPoly e2_closed_form(unsigned p);

/// (x+y+z)^p - x^p - y^p - z^p; vanishes at y = -x, z = -y and z = -x.
MPoly power_gap3(unsigned p);

/// E3 = ((x+y+z)^p - x^p - y^p - z^p) / (p (x+y)(y+z)(z+x)).  Checked:
/// integer coefficients, symmetric in x, y, z, invariant under the
/// Granville map, and E3 at z = 0 equals E2.
MPoly e3_by_division(unsigned p);

/// E3 from the single-sum expression
/// (1/(p(y+z)(z+x))) sum_k ( C(p,k+1) (x+y)^k z^(p-k-1) - (-1)^k x^k y^(p-k-1) ),
/// checked to equal e3_by_division.
MPoly e3_alternative(unsigned p);

/// E3 written in b = z(x+y+z): E3 = sum_j a[j] b^(n-j) with n = (p-3)/2,
/// a[0] = 1 and a[n] = E2.  Note the descending-power indexing.
struct PowerGapExpansion {
    unsigned p;
    unsigned n;
    std::vector<MPoly> a;
};

PowerGapExpansion e3_expansion(unsigned p);

struct IdentityReport {
    bool equal;
    MPoly lhs, rhs, difference;
};

/// Does a_n + x y a_{n-1} equal (x+y)^(p-3)?  Reported, not asserted.
IdentityReport check_xy_identity(const PowerGapExpansion& exp);
IdentityReport check_xy_identity(unsigned p);

/// The shifted version: a_{n-m} + x y a_{n-m-1} against
/// lead(a_{n-m}) * (x+y)^(p-2m-3), for 0 <= m <= n-1, where lead() is the
/// leading coefficient in the canonical monomial order.
IdentityReport check_conjecture(const PowerGapExpansion& exp, unsigned m_index);
IdentityReport check_conjecture(unsigned p, unsigned m_index);

/// Sum of all monomials x^j y^k z^l of degree m (unit coefficients);
/// `power` substitutes x^power etc. (power 2 gives H_m(x^2, y^2, z^2)).
MPoly complete_homogeneous(unsigned m, unsigned power = 1);

/// Catalan's identity for odd n > 3 (n need not be prime):
///   ((x+y+z)^n - x^n - y^n - z^n) / ((x+y)(y+z)(z+x))
///     = sum_{m=0}^{n-3} H_m P^(n-3-m) + 2 H_{(n-3)/2}(x^2, y^2, z^2),
/// with P = x+y+z.  The left side deliberately carries no 1/n factor.
IdentityReport catalan_check(unsigned n);

}  // namespace polyinv

#endif
