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

#include <random>

#include "polyinv/expr.hpp"
#include "polyinv/mpoly.hpp"

using namespace polyinv;

namespace {

const ContextPtr& xyz() {
    static const ContextPtr ctx = PolyContext::make({"x", "y", "z"}, 1u);
    return ctx;
}

MPoly P(const std::string& text) { return parse(text, xyz()); }

MPoly random_poly(std::mt19937_64& rng, const ContextPtr& ctx, unsigned max_deg,
                  unsigned max_terms) {
    MPoly out(ctx);
    const unsigned nterms = static_cast<unsigned>(rng() % (max_terms + 1));
    for (unsigned t = 0; t < nterms; ++t) {
        Monomial m(ctx->nvars(), 0);
        const unsigned deg = static_cast<unsigned>(rng() % (max_deg + 1));
        for (unsigned d = 0; d < deg; ++d) m[rng() % ctx->nvars()] += 1;
        long num = static_cast<long>(rng() % 9) - 4;
        out += MPoly::term(ctx, m,
                           CycloNum::from_rational(ctx->field(), Rational(num)));
    }
    return out;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    MPoly f = P("3*x^2*z - y + 1/2");
    CHECK(f + MPoly::zero(xyz()) == f);
    CHECK(f - f == MPoly::zero(xyz()));
    // hand expansion of t(t+1)(t^2+t+1) in the univariate context
    ContextPtr tctx = PolyContext::make({"t"}, 1u);
    MPoly t = MPoly::variable(tctx, 0);
    MPoly one = MPoly::constant(tctx, Rational(1));
    CHECK(t * (t + one) * (t * t + t + one) == parse("t^4 + 2*t^3 + 2*t^2 + t", tctx));
}

TEST_CASE("operations reject mixed contexts") {
    ContextPtr other = PolyContext::make({"x", "z"}, 1u);
    CHECK_THROWS_AS(P("x") + MPoly::variable(other, 0), ContextMismatchError);
    CHECK_THROWS_AS(P("x") * MPoly::variable(other, 0), ContextMismatchError);
    CHECK_THROWS_AS(substitute_z(P("z"), MPoly::variable(other, 1)), ContextMismatchError);
}

TEST_CASE("powers by repeated squaring") {
    CHECK(P("x+y").pow(0) == P("1"));
    CHECK(MPoly::zero(xyz()).pow(0) == P("1"));
    CHECK(P("x+y").pow(2) == P("x^2 + 2*x*y + y^2"));
    // multinomial: coefficient of x y z^3 in (x+y+z)^5 is 5!/(1!1!3!) = 20
    MPoly quintic = P("x+y+z").pow(5);
    CHECK(quintic.coefficient(Monomial{1, 1, 3}) ==
          CycloNum::from_rational(xyz()->field(), Rational(20)));
}

TEST_CASE("exact division") {
    CHECK(*exact_div(P("x^2 - y^2"), P("x + y")) == P("x - y"));
    CHECK_FALSE(exact_div(P("z^2 + x"), P("z")).has_value());
    CHECK_THROWS_AS(exact_div(P("x"), MPoly::zero(xyz())), DivisionByZeroError);
    CHECK(*exact_div(MPoly::zero(xyz()), P("x + z")) == MPoly::zero(xyz()));
}

TEST_CASE("quotient of the quintic power gap") {
    MPoly gap = P("x+y+z").pow(5) - P("x^5") - P("y^5") - P("z^5");
    MPoly divisor = P("5*(x+y)*(y+z)*(z+x)");
    auto quotient = exact_div(gap, divisor);
    REQUIRE(quotient.has_value());
    MPoly expected = P("x^2 + y^2 + z^2 + x*y + y*z + z*x");
    CHECK(*quotient == expected);
    // oracle: expand quotient times divisor and compare
    CHECK(expected * divisor == gap);
    // numeric spot: (3^5 - 3) / (5 * 8) = 6 at (1,1,1)
    CHECK(gap.eval({Rational(1), Rational(1), Rational(1)}) ==
          CycloNum::from_rational(xyz()->field(), Rational(240)));
    CHECK(quotient->eval({Rational(1), Rational(1), Rational(1)}) ==
          CycloNum::from_rational(xyz()->field(), Rational(6)));
}

TEST_CASE("exact_div soundness on random products") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 80; ++i) {
        MPoly d = random_poly(rng, xyz(), 3, 4);
        if (d.is_zero()) continue;
        MPoly q = random_poly(rng, xyz(), 3, 4);
        auto recovered = exact_div(d * q, d);
        REQUIRE(recovered.has_value());
        CHECK(*recovered == q);
    }
}

TEST_CASE("z substitution") {
    CHECK(substitute_z(P("z^2"), P("-(x+y+z)")) == P("(x+y+z)^2"));
    CHECK(substitute_z(P("x"), P("x^2 - z")) == P("x"));  // fixes the x-block
    MPoly b = P("z*(x+y+z)");
    CHECK(substitute_z(b, P("-(x+y+z)")) == b);  // b is invariant
}

TEST_CASE("substitution is a ring homomorphism fixing K[x]") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        MPoly f = random_poly(rng, xyz(), 3, 4);
        MPoly g = random_poly(rng, xyz(), 3, 4);
        MPoly image = random_poly(rng, xyz(), 1, 3);  // substitute a (near-)linear p
        CHECK(substitute_z(f + g, image) ==
              substitute_z(f, image) + substitute_z(g, image));
        CHECK(substitute_z(f * g, image) ==
              substitute_z(f, image) * substitute_z(g, image));
    }
}

TEST_CASE("degree law under substitution") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        MPoly f = random_poly(rng, xyz(), 4, 5);
        MPoly image = random_poly(rng, xyz(), 3, 4);
        const int dp = degree_in_z(image);
        if (dp < 1 || f.is_zero()) continue;
        CHECK(degree_in_z(substitute_z(f, image)) == degree_in_z(f) * dp);
    }
}

TEST_CASE("z-degree, z = 0, z-coefficients") {
    CHECK(degree_in_z(P("x^3*y")) == 0);
    CHECK(degree_in_z(P("z^3*x + z")) == 3);
    CHECK(degree_in_z(MPoly::zero(xyz())) == -1);

    CHECK(eval_z_zero(P("z*(x+y+z)")) == MPoly::zero(xyz()));
    CHECK(eval_z_zero(P("x^2 + x*z")) == P("x^2"));

    CHECK(z_coefficients(P("z^2*x + z*y + 1")) ==
          std::vector<MPoly>{P("1"), P("y"), P("x")});
    CHECK(z_coefficients(P("x")) == std::vector<MPoly>{P("x")});
    CHECK(z_coefficients(P("z*(x+y+z)")) ==
          std::vector<MPoly>{P("0"), P("x + y"), P("1")});
}

TEST_CASE("z-coefficients round-trip") {
    std::mt19937_64 rng(41);
    MPoly z = P("z");
    for (int i = 0; i < 60; ++i) {
        MPoly f = random_poly(rng, xyz(), 4, 6);
        std::vector<MPoly> cs = z_coefficients(f);
        MPoly rebuilt(xyz());
        for (std::size_t k = 0; k < cs.size(); ++k) rebuilt += cs[k] * z.pow(static_cast<unsigned>(k));
        CHECK(rebuilt == f);
        for (const MPoly& c : cs) CHECK(degree_in_z(c) <= 0);
    }
}

TEST_CASE("variable permutations") {
    CHECK(permute_vars(P("x*y^2"), {1, 0, 2}) == P("x^2*y"));
    CHECK(permute_vars(P("x+y+z"), {2, 0, 1}) == P("x+y+z"));
    MPoly e3 = P("x^2 + y^2 + z^2 + x*y + y*z + z*x");
    for (const auto& sigma : std::vector<std::vector<std::size_t>>{
             {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}})
        CHECK(permute_vars(e3, sigma) == e3);
    CHECK_THROWS_AS(permute_vars(e3, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permute_vars(e3, {0, 1}), std::invalid_argument);
}

TEST_CASE("coprimality witness of linear pairs") {
    CHECK(linear_coprime_witness(P("z"), P("-z - (x+y)")) == P("-(x+y)"));
    CHECK(linear_coprime_witness(P("z + x"), P("z + x")) == MPoly::zero(xyz()));
    ContextPtr c3 = PolyContext::make({"x", "z"}, 3u);
    CHECK(linear_coprime_witness(parse("z", c3), parse("w*z", c3)) == MPoly::zero(c3));
    CHECK_THROWS_AS(linear_coprime_witness(P("z^2"), P("z")), std::invalid_argument);
    CHECK_THROWS_AS(linear_coprime_witness(P("z"), P("x")), std::invalid_argument);
}

TEST_CASE("canonical form stores no zero coefficients") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60; ++i) {
        MPoly f = random_poly(rng, xyz(), 3, 5);
        MPoly g = random_poly(rng, xyz(), 3, 5);
        for (const auto& [m, c] : (f + g).terms()) CHECK_FALSE(c.is_zero());
        for (const auto& [m, c] : (f * g).terms()) CHECK_FALSE(c.is_zero());
        MPoly h = random_poly(rng, xyz(), 2, 3);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("leading term follows the graded order with x1 read first") {
    CHECK(P("x^2 + x*y + y^2").leading_monomial() == Monomial{2, 0, 0});
    CHECK(P("y + z^2").leading_monomial() == Monomial{0, 0, 2});
    CHECK(P("x*y*z + x^3").leading_monomial() == Monomial{3, 0, 0});
}
