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

#include "polyinv/cyclo.hpp"

#include <algorithm>
#include <numeric>

namespace polyinv {

namespace {

// dense univariate helpers over Z, ascending coefficients, no trailing zeros

void ztrim(std::vector<Integer>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Integer> zmul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division by a monic divisor; throws if a remainder survives
std::vector<Integer> zdiv_exact_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    ztrim(num);
    if (num.empty()) return {};
    if (num.size() < den.size())
        throw VerificationError("cyclotomic division: degree underflow");
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    ztrim(num);
    if (!num.empty()) throw VerificationError("cyclotomic division left a remainder");
    return q;
}

// dense univariate helpers over Q, used for reduction and inversion mod Phi_M

void qtrim(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int qdeg(const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; }

std::vector<Rational> qsub_scaled(std::vector<Rational> a, const Rational& c,
                                  const std::vector<Rational>& b, std::size_t shift) {
    // a - c * b * w^shift
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    qtrim(a);
    return a;
}

std::vector<Rational> qmul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

// quotient and remainder of a by b over Q, b nonzero
std::pair<std::vector<Rational>, std::vector<Rational>> qdivmod(std::vector<Rational> a,
                                                                const std::vector<Rational>& b) {
    std::vector<Rational> q;
    qtrim(a);
    if (qdeg(a) >= qdeg(b)) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (qdeg(a) >= qdeg(b)) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        a = qsub_scaled(std::move(a), c, b, shift);
    }
    return {std::move(q), std::move(a)};
}

std::vector<Rational> modulus_as_rationals(const CycloField& f) {
    std::vector<Rational> m;
    m.reserve(f.modulus().size());
    for (const Integer& c : f.modulus()) m.emplace_back(c);
    return m;
}

// reduce an arbitrary representative modulo Phi_M, then pad to phi(M) slots
std::vector<Rational> reduce_mod(const CycloField& f, std::vector<Rational> p) {
    const std::vector<Integer>& mod = f.modulus();
    const std::size_t deg = f.degree();
    qtrim(p);
    while (p.size() > deg) {
        Rational c = p.back();
        std::size_t shift = p.size() - mod.size();
        p.pop_back();
        if (!c.is_zero()) {
            for (std::size_t j = 0; j + 1 < mod.size(); ++j) p[j + shift] -= c * Rational(mod[j]);
        }
        qtrim(p);
    }
    p.resize(deg, Rational(0));
    return p;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned index) {
    if (index == 0) throw std::invalid_argument("cyclotomic index must be positive");
    // Phi_d for every divisor d of index, in increasing d
    std::vector<std::pair<unsigned, std::vector<Integer>>> table;
    for (unsigned d = 1; d <= index; ++d) {
        if (index % d != 0) continue;
        std::vector<Integer> num(d + 1, Integer(0));  // w^d - 1
        num[0] = -1;
        num[d] = 1;
        for (const auto& [e, phi_e] : table)
            if (d % e == 0) num = zdiv_exact_monic(std::move(num), phi_e);
        table.emplace_back(d, std::move(num));
    }
    return table.back().second;
}

std::shared_ptr<const CycloField> CycloField::make(unsigned index) {
    auto mod = cyclotomic_polynomial(index);
    if (mod.size() != euler_phi(index) + 1 || mod.back() != 1)
        throw VerificationError("cyclotomic modulus is not monic of degree phi(M)");
    return std::shared_ptr<const CycloField>(new CycloField(index, std::move(mod)));
}

CycloNum::CycloNum(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    coeffs_ = reduce_mod(*field_, std::move(coeffs));
}

CycloNum CycloNum::zero(const FieldPtr& f) { return CycloNum(f, {}); }

CycloNum CycloNum::one(const FieldPtr& f) { return CycloNum(f, {Rational(1)}); }

CycloNum CycloNum::from_rational(const FieldPtr& f, const Rational& r) { return CycloNum(f, {r}); }

CycloNum CycloNum::generator(const FieldPtr& f) {
    return CycloNum(f, {Rational(0), Rational(1)});
}

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

bool CycloNum::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

bool CycloNum::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

bool CycloNum::is_integer() const { return is_rational() && coeffs_[0].is_integer(); }

CycloNum CycloNum::operator-() const {
    std::vector<Rational> r(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), r.begin(),
                   [](const Rational& c) { return -c; });
    return CycloNum(field_, std::move(r));
}

static void check_fields(const CycloNum& a, const CycloNum& b) {
    if (!same_field(a.field(), b.field()))
        throw FieldMismatchError("cyclotomic operands from different fields");
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    check_fields(*this, o);
    std::vector<Rational> r(coeffs_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coeffs_[i];
    return CycloNum(field_, std::move(r));
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    check_fields(*this, o);
    std::vector<Rational> r(coeffs_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coeffs_[i];
    return CycloNum(field_, std::move(r));
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    check_fields(*this, o);
    return CycloNum(field_, qmul(coeffs_, o.coeffs_));
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
    // extended Euclid on (this, Phi_M) over Q[w]; Phi_M is irreducible, so
    // the gcd is a nonzero constant and the Bezout coefficient inverts us
    std::vector<Rational> r0(coeffs_), r1 = modulus_as_rationals(*field_);
    qtrim(r0);
    std::vector<Rational> s0{Rational(1)}, s1;
    while (!r1.empty()) {
        auto [q, rem] = qdivmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        std::vector<Rational> s2 = qsub_scaled(std::move(s0), Rational(1), qmul(q, s1), 0);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (qdeg(r0) != 0)
        throw VerificationError("noninvertible residue: modulus not irreducible?");
    const Rational g = r0[0];
    for (Rational& c : s0) c /= g;
    return CycloNum(field_, std::move(s0));
}

CycloNum CycloNum::operator/(const CycloNum& o) const {
    check_fields(*this, o);
    if (o.is_zero()) throw DivisionByZeroError("cyclotomic division by zero");
    return *this * o.inverse();
}

CycloNum CycloNum::pow(unsigned long k) const {
    CycloNum base = *this, acc = CycloNum::one(field_);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

std::optional<unsigned> root_of_unity_order(const CycloNum& a) {
    if (a.is_zero()) return std::nullopt;
    const unsigned bound = std::lcm(2u, a.field()->index());
    CycloNum power = a;
    for (unsigned k = 1; k <= bound; ++k) {
        if (power.is_one()) return k;
        power = power * a;
    }
    return std::nullopt;
}

}  // namespace polyinv
