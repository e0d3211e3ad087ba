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

#include "polyinv/classical.hpp"

#include <array>

#include "polyinv/expr.hpp"

namespace polyinv {

namespace {

void validate_prime(unsigned p) {
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("p must be a prime greater than 3 (got " +
                                    std::to_string(p) + ")");
}

MPoly tri_var(std::size_t slot) { return MPoly::variable(trivariate_context(), slot); }

MPoly tri_const(const Rational& r) { return MPoly::constant(trivariate_context(), r); }

}  // namespace

ContextPtr trivariate_context() {
    static const ContextPtr ctx = PolyContext::make({"x", "y", "z"}, 1u);
    return ctx;
}

ContextPtr univariate_context() {
    static const ContextPtr ctx = PolyContext::make({"t"}, 1u);
    return ctx;
}

AdequateMap granville_map() {
    return AdequateMap::make(CycloNum::from_rational(trivariate_context()->field(), Rational(-1)),
                             -(tri_var(0) + tri_var(1)));
}

MPoly power_gap2(unsigned p) {
    validate_prime(p);
    MPoly x = tri_var(0), y = tri_var(1);
    return (x + y).pow(p) - x.pow(p) - y.pow(p);
}

MPoly power_gap_univariate(unsigned p) {
    validate_prime(p);
    const ContextPtr ctx = univariate_context();
    MPoly out(ctx);
    for (unsigned k = 1; k <= p - 1; ++k)
        out += MPoly::term(ctx, Monomial{k},
                           CycloNum::from_rational(ctx->field(),
                                                   Rational(binomial_coefficient(p, k))));
    return out;
}

unsigned cyclotomic_multiplicity(unsigned p) {
    validate_prime(p);
    switch (p % 6) {
        case 5: return 1;
        case 1: return 2;
        default:
            throw std::invalid_argument("p = " + std::to_string(p) +
                                        " is not +-1 mod 6; not a prime > 3");
    }
}

CauchyFactorization cauchy_factorization(unsigned p) {
    validate_prime(p);
    const unsigned e = cyclotomic_multiplicity(p);
    const ContextPtr ctx = univariate_context();
    MPoly t = MPoly::variable(ctx, 0);
    MPoly one = MPoly::constant(ctx, Rational(1));
    MPoly divisor =
        (t * (t + one) * (t * t + t + one).pow(e)) * Rational(static_cast<long>(p));
    auto cauchy = exact_div(power_gap_univariate(p), divisor);
    if (!cauchy)
        throw VerificationError("power gap is not divisible by p t (t+1) (t^2+t+1)^e");
    if (cauchy->total_degree() != static_cast<int>(p - 3 - 2 * e))
        throw VerificationError("Cauchy polynomial has wrong degree");
    if (!cauchy->has_integer_coefficients())
        throw VerificationError("Cauchy polynomial has a non-integer coefficient");
    return {p, e, std::move(*cauchy)};
}

MPoly cauchy_xy(const CauchyFactorization& f) {
    const unsigned deg = f.p - 3 - 2 * f.multiplicity;
    MPoly out(trivariate_context());
    for (const auto& [m, c] : f.cauchy.terms()) {
        const unsigned j = m[0];
        out += MPoly::term(trivariate_context(), Monomial{j, deg - j, 0},
                           CycloNum::from_rational(trivariate_context()->field(),
                                                   c.rational_part()));
    }
    return out;
}

MPoly e2_by_division(unsigned p) {
    validate_prime(p);
    MPoly x = tri_var(0), y = tri_var(1);
    MPoly divisor = (x * y * (x + y)) * Rational(static_cast<long>(p));
    auto e2 = exact_div(power_gap2(p), divisor);
    if (!e2) throw VerificationError("power gap not divisible by p x y (x+y)");
    if (!e2->has_integer_coefficients())
        throw VerificationError("E2 has a non-integer coefficient");
    CauchyFactorization f = cauchy_factorization(p);
    if (*e2 != (x * x + x * y + y * y).pow(f.multiplicity) * cauchy_xy(f))
        throw VerificationError("E2 != (x^2+xy+y^2)^e * C_p(x,y)");
    return std::move(*e2);
}

MPoly e2_closed_form(unsigned p) {
    validate_prime(p);
    const ContextPtr ctx = trivariate_context();
    MPoly out(ctx);
    for (unsigned k = 1; k <= p - 2; ++k) {
        Rational c(binomial_coefficient(p - 1, k) - (k % 2 == 0 ? 1 : -1),
                   Integer(static_cast<long>(p)));
        if (!c.is_integer())
            throw VerificationError("(C(p-1,k) - (-1)^k)/p is not an integer at k = " +
                                    std::to_string(k));
        out += MPoly::term(ctx, Monomial{k - 1, p - k - 2, 0},
                           CycloNum::from_rational(ctx->field(), c));
    }
    return out;
}

MPoly power_gap3(unsigned p) {
    validate_prime(p);
    MPoly x = tri_var(0), y = tri_var(1), z = tri_var(2);
    MPoly gap = (x + y + z).pow(p) - x.pow(p) - y.pow(p) - z.pow(p);
    if (!substitute_var(gap, 1, -x).is_zero() || !substitute_var(gap, 2, -y).is_zero() ||
        !substitute_var(gap, 2, -x).is_zero())
        throw VerificationError("power gap does not vanish on x+y, y+z, z+x");
    return gap;
}

MPoly e3_by_division(unsigned p) {
    validate_prime(p);
    MPoly x = tri_var(0), y = tri_var(1), z = tri_var(2);
    MPoly divisor = ((x + y) * (y + z) * (z + x)) * Rational(static_cast<long>(p));
    auto e3 = exact_div(power_gap3(p), divisor);
    if (!e3) throw VerificationError("power gap not divisible by p (x+y)(y+z)(z+x)");
    if (!e3->has_integer_coefficients())
        throw VerificationError("E3 has a non-integer coefficient");
    static const std::array<std::vector<std::size_t>, 5> nontrivial_perms = {
        std::vector<std::size_t>{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& sigma : nontrivial_perms)
        if (permute_vars(*e3, sigma) != *e3)
            throw VerificationError("E3 is not symmetric in x, y, z");
    if (!is_invariant(*e3, granville_map().map()))
        throw VerificationError("E3 is not invariant under z -> -(x+y+z)");
    if (eval_z_zero(*e3) != e2_by_division(p))
        throw VerificationError("E3 at z = 0 differs from E2");
    return std::move(*e3);
}

MPoly e3_alternative(unsigned p) {
    validate_prime(p);
    MPoly x = tri_var(0), y = tri_var(1), z = tri_var(2);
    MPoly sum(trivariate_context());
    for (unsigned k = 0; k <= p - 1; ++k) {
        Rational sign(k % 2 == 0 ? 1 : -1);
        sum += (x + y).pow(k) * z.pow(p - k - 1) * Rational(binomial_coefficient(p, k + 1));
        sum -= x.pow(k) * y.pow(p - k - 1) * sign;
    }
    MPoly divisor = ((y + z) * (z + x)) * Rational(static_cast<long>(p));
    auto e3 = exact_div(sum, divisor);
    if (!e3) throw VerificationError("single-sum numerator not divisible by p (y+z)(z+x)");
    if (*e3 != e3_by_division(p))
        throw VerificationError("single-sum expression for E3 disagrees with the quotient");
    return std::move(*e3);
}

PowerGapExpansion e3_expansion(unsigned p) {
    validate_prime(p);
    const unsigned n = (p - 3) / 2;
    MPoly z = tri_var(2);
    MPoly b = z * (tri_var(0) + tri_var(1) + z);  // z(x+y+z), the classical sign
    Decomposition dec = decompose(e3_by_division(p), granville_map(), b);
    if (dec.coeffs.size() != n + 1)
        throw VerificationError("expansion of E3 has wrong length");
    PowerGapExpansion out{p, n, {}};
    out.a.reserve(n + 1);
    for (std::size_t j = dec.coeffs.size(); j-- > 0;) {
        if (degree_in_z(dec.coeffs[j]) > 0)
            throw VerificationError("expansion coefficient not free of z");
        out.a.push_back(dec.coeffs[j]);
    }
    if (out.a.front() != tri_const(Rational(1)))
        throw VerificationError("leading expansion coefficient is not 1");
    if (out.a.back() != e2_by_division(p))
        throw VerificationError("constant expansion coefficient is not E2");
    return out;
}

IdentityReport check_xy_identity(const PowerGapExpansion& exp) {
    MPoly x = tri_var(0), y = tri_var(1);
    MPoly lhs = exp.a[exp.n] + x * y * exp.a[exp.n - 1];
    MPoly rhs = (x + y).pow(exp.p - 3);
    return {lhs == rhs, lhs, rhs, lhs - rhs};
}

IdentityReport check_xy_identity(unsigned p) { return check_xy_identity(e3_expansion(p)); }

IdentityReport check_conjecture(const PowerGapExpansion& exp, unsigned m_index) {
    if (m_index > exp.n - 1)
        throw std::invalid_argument("m_index out of range (need 0 <= m <= n-1 with n = " +
                                    std::to_string(exp.n) + ")");
    MPoly x = tri_var(0), y = tri_var(1);
    const MPoly& upper = exp.a[exp.n - m_index];
    const MPoly& lower = exp.a[exp.n - m_index - 1];
    MPoly lhs = upper + x * y * lower;
    MPoly rhs = (x + y).pow(exp.p - 2 * m_index - 3).scaled(upper.leading_coefficient());
    return {lhs == rhs, lhs, rhs, lhs - rhs};
}

IdentityReport check_conjecture(unsigned p, unsigned m_index) {
    return check_conjecture(e3_expansion(p), m_index);
}

MPoly complete_homogeneous(unsigned m, unsigned power) {
    const ContextPtr ctx = trivariate_context();
    if (power == 0) throw std::invalid_argument("substitution power must be positive");
    MPoly out(ctx);
    const CycloNum one = CycloNum::one(ctx->field());
    for (unsigned j = 0; j <= m; ++j)
        for (unsigned k = 0; j + k <= m; ++k)
            out += MPoly::term(ctx, Monomial{j * power, k * power, (m - j - k) * power}, one);
    return out;
}

IdentityReport catalan_check(unsigned n) {
    if (n <= 3 || n % 2 == 0)
        throw std::invalid_argument("n must be an odd integer greater than 3 (got " +
                                    std::to_string(n) + ")");
    MPoly x = tri_var(0), y = tri_var(1), z = tri_var(2);
    MPoly gap = (x + y + z).pow(n) - x.pow(n) - y.pow(n) - z.pow(n);
    auto lhs = exact_div(gap, (x + y) * (y + z) * (z + x));
    if (!lhs) throw VerificationError("odd power gap not divisible by (x+y)(y+z)(z+x)");
    MPoly sum_side(trivariate_context());
    MPoly perimeter = x + y + z;
    for (unsigned m = 0; m <= n - 3; ++m)
        sum_side += complete_homogeneous(m) * perimeter.pow(n - 3 - m);
    MPoly rhs = sum_side + complete_homogeneous((n - 3) / 2, 2) * Rational(2);
    MPoly diff = *lhs - rhs;
    return {diff.is_zero(), std::move(*lhs), std::move(rhs), std::move(diff)};
}

}  // namespace polyinv
