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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyinv/classical.hpp"
#include "polyinv/expr.hpp"

using namespace polyinv;

namespace {

MPoly P(const std::string& text) { return parse(text, trivariate_context()); }

MPoly T(const std::string& text) { return parse(text, univariate_context()); }

Rational eval1(const MPoly& f) {
    CycloNum v = f.eval({Rational(1), Rational(1), Rational(1)});
    REQUIRE(v.is_rational());
    return v.rational_part();
}

}  // namespace

TEST_CASE("bivariate power gap") {
    CHECK(power_gap2(5) == P("5*x^4*y + 10*x^3*y^2 + 10*x^2*y^3 + 5*x*y^4"));
    for (const auto& [m, c] : power_gap2(7).terms())
        CHECK(monomial_degree(m) == 7);  // homogeneous of degree p
    CHECK(power_gap2(7).coefficient(Monomial{3, 4, 0}) ==
          CycloNum::from_rational(trivariate_context()->field(), Rational(35)));
    CHECK_THROWS_AS(power_gap2(9), std::invalid_argument);
    CHECK_THROWS_AS(power_gap2(2), std::invalid_argument);
}

TEST_CASE("univariate power gap") {
    CHECK(power_gap_univariate(5) == T("5*t^4 + 10*t^3 + 10*t^2 + 5*t"));
    MPoly k11 = power_gap_univariate(11);
    CHECK(k11.eval({Rational(0)}).is_zero());
    CHECK(k11.eval({Rational(-1)}).is_zero());
    for (const auto& [m, c] : k11.terms())
        CHECK((c.rational_part() / Rational(11)).is_integer());
}

TEST_CASE("multiplicity of t^2+t+1 follows p mod 6") {
    CHECK(cyclotomic_multiplicity(5) == 1);
    CHECK(cyclotomic_multiplicity(7) == 2);
    CHECK(cyclotomic_multiplicity(13) == 2);
    CHECK(cyclotomic_multiplicity(11) == 1);
    CHECK_THROWS_AS(cyclotomic_multiplicity(9), std::invalid_argument);
}

TEST_CASE("Cauchy factorization") {
    CauchyFactorization f5 = cauchy_factorization(5);
    CHECK(f5.multiplicity == 1);
    CHECK(f5.cauchy == T("1"));
    // oracle: 5 t (t+1) (t^2+t+1) re-expands to the gap
    CHECK(T("5*t") * T("t+1") * T("t^2+t+1") == power_gap_univariate(5));

    CauchyFactorization f7 = cauchy_factorization(7);
    CHECK(f7.multiplicity == 2);
    CHECK(f7.cauchy == T("1"));
    CHECK(T("7*t") * T("t+1") * T("t^2+t+1").pow(2) == power_gap_univariate(7));

    CauchyFactorization f11 = cauchy_factorization(11);
    CHECK(f11.cauchy.total_degree() == 11 - 3 - 2);
    CHECK(f11.cauchy.has_integer_coefficients());
}

TEST_CASE("E2 for small primes") {
    CHECK(e2_by_division(5) == P("x^2 + x*y + y^2"));
    CHECK(e2_by_division(7) == P("(x^2 + x*y + y^2)^2"));
    for (const auto& [m, c] : e2_by_division(11).terms())
        CHECK(monomial_degree(m) == 11 - 3);  // homogeneous of degree p - 3
}

TEST_CASE("E2 closed form coefficients") {
    // p = 5: (C(4,1)+1)/5, (C(4,2)-1)/5, (C(4,3)+1)/5 = 1, 1, 1
    CHECK(e2_closed_form(5) == P("x^2 + x*y + y^2"));
    for (unsigned p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u})
        CHECK(e2_closed_form(p) == e2_by_division(p));
}

TEST_CASE("trivariate power gap") {
    MPoly h5 = power_gap3(5);
    CHECK(h5.coefficient(Monomial{1, 1, 3}) ==
          CycloNum::from_rational(trivariate_context()->field(), Rational(20)));
    CHECK(eval1(h5) == Rational(240));  // 3^5 - 3
    for (const auto& [m, c] : power_gap3(7).terms())
        CHECK((c.rational_part() / Rational(7)).is_integer());
}

TEST_CASE("E3 by division") {
    CHECK(e3_by_division(5) == P("x^2 + y^2 + z^2 + x*y + y*z + z*x"));
    CHECK(eval1(e3_by_division(7)) == Rational(39));  // (3^7 - 3)/(7*8)
    CHECK(eval_z_zero(e3_by_division(7)) == P("(x^2 + x*y + y^2)^2"));
}

TEST_CASE("E3 single-sum expression") {
    CHECK(e3_alternative(5) == P("x^2 + y^2 + z^2 + x*y + y*z + z*x"));
    CHECK(e3_alternative(7) == e3_by_division(7));
    CHECK(e3_alternative(11) == e3_by_division(11));
}

TEST_CASE("expansion of E3 in b = z(x+y+z)") {
    PowerGapExpansion e5 = e3_expansion(5);
    CHECK(e5.n == 1);
    CHECK(e5.a == std::vector<MPoly>{P("1"), P("x^2 + x*y + y^2")});
    // spot: at (1,1,1), E3 = 6 and b = 3, so 6 = 3 + 3
    CHECK(eval1(e3_by_division(5)) == Rational(6));

    PowerGapExpansion e7 = e3_expansion(7);
    CHECK(e7.n == 2);
    CHECK(e7.a[0] == P("1"));
    CHECK(e7.a[1] == P("2*x^2 + 3*x*y + 2*y^2"));
    CHECK(e7.a[2] == P("(x^2 + x*y + y^2)^2"));
    // spot: 39 = 3^2 + 3*7 + 9 with b = 3, a1 = 7, a2 = 9 at (1,1,1)
    CHECK(eval1(e7.a[1]) == Rational(7));
    CHECK(eval1(e7.a[2]) == Rational(9));

    for (unsigned p : {11u, 13u}) {
        PowerGapExpansion e = e3_expansion(p);
        CHECK(e.n == (p - 3) / 2);
        CHECK(e.a.size() == e.n + 1);
        for (const MPoly& a : e.a) CHECK(degree_in_z(a) <= 0);
    }
}

TEST_CASE("xy identity") {
    // p = 5: (x^2+xy+y^2) + xy = (x+y)^2
    CHECK(check_xy_identity(5).equal);
    IdentityReport r7 = check_xy_identity(7);
    CHECK(r7.equal);
    CHECK(r7.rhs == P("(x+y)^4"));
    CHECK(check_xy_identity(11).equal);
}

TEST_CASE("shifted identity from the correspondence") {
    IdentityReport r50 = check_conjecture(5, 0);
    CHECK(r50.equal);
    CHECK(r50.rhs == P("(x+y)^2"));  // leading coefficient of a_1 is 1

    CHECK(check_conjecture(7, 0).equal);
    IdentityReport r71 = check_conjecture(7, 1);
    CHECK(r71.equal);
    CHECK(r71.lhs == P("2*x^2 + 4*x*y + 2*y^2"));
    CHECK(r71.rhs == P("2*(x+y)^2"));

    CHECK_THROWS_AS(check_conjecture(5, 1), std::invalid_argument);
}

TEST_CASE("complete homogeneous sums") {
    CHECK(complete_homogeneous(0) == P("1"));
    CHECK(complete_homogeneous(1) == P("x + y + z"));
    CHECK(complete_homogeneous(2) == P("x^2 + y^2 + z^2 + x*y + y*z + z*x"));
    CHECK(complete_homogeneous(1, 2) == P("x^2 + y^2 + z^2"));
    CHECK(complete_homogeneous(2).term_count() == 6);
    CHECK(complete_homogeneous(4).term_count() == 15);  // C(4+2,2)
}

TEST_CASE("Catalan's identity") {
    IdentityReport r5 = catalan_check(5);
    CHECK(r5.equal);
    // the left side carries no 1/n: at (1,1,1) it is 240/8 = 30 = 5 * 6
    CHECK(eval1(r5.lhs) == Rational(30));
    CHECK(catalan_check(7).equal);
    CHECK(catalan_check(9).equal);   // composite n is fine
    CHECK(catalan_check(15).equal);
    CHECK_THROWS_AS(catalan_check(4), std::invalid_argument);
    CHECK_THROWS_AS(catalan_check(6), std::invalid_argument);
    CHECK_THROWS_AS(catalan_check(3), std::invalid_argument);
}

TEST_CASE("documented pipeline values for p = 13") {
    // one denser prime end to end
    CauchyFactorization f = cauchy_factorization(13);
    CHECK(f.multiplicity == 2);
    CHECK(f.cauchy.total_degree() == 13 - 3 - 4);
    PowerGapExpansion e = e3_expansion(13);
    CHECK(e.n == 5);
    CHECK(check_xy_identity(13).equal);
    // the shifted identities are conjectural for general m; the reports
    // just have to be internally consistent
    for (unsigned m = 0; m + 1 <= e.n; ++m) {
        IdentityReport r = check_conjecture(e, m);
        CHECK(r.equal == r.difference.is_zero());
        CHECK(r.lhs - r.rhs == r.difference);
    }
}
