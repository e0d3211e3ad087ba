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

#include "polyinv/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polyinv {

namespace {

void validate_names(const std::vector<std::string>& names, unsigned field_index) {
    if (names.empty()) throw std::invalid_argument("context needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
        if (n == "w" && field_index > 1)
            throw std::invalid_argument("'w' is reserved for the field generator when M > 1");
    }
}

}  // namespace

std::shared_ptr<const PolyContext> PolyContext::make(std::vector<std::string> names,
                                                     unsigned field_index) {
    return make(std::move(names), CycloField::make(field_index));
}

std::shared_ptr<const PolyContext> PolyContext::make(std::vector<std::string> names,
                                                     FieldPtr field) {
    validate_names(names, field->index());
    return std::shared_ptr<const PolyContext>(new PolyContext(std::move(names), std::move(field)));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a.get() == b.get()) return true;
    return a->names() == b->names() && a->field()->index() == b->field()->index();
}

unsigned monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(const ContextPtr& ctx, const CycloNum& c) {
    if (!same_field(c.field(), ctx->field()))
        throw FieldMismatchError("constant from a different field than the context");
    return term(ctx, Monomial(ctx->nvars(), 0), c);
}

MPoly MPoly::constant(const ContextPtr& ctx, const Rational& r) {
    return constant(ctx, CycloNum::from_rational(ctx->field(), r));
}

MPoly MPoly::variable(const ContextPtr& ctx, std::size_t slot) {
    if (slot >= ctx->nvars()) throw std::invalid_argument("variable slot out of range");
    Monomial m(ctx->nvars(), 0);
    m[slot] = 1;
    return term(ctx, std::move(m), CycloNum::one(ctx->field()));
}

MPoly MPoly::term(const ContextPtr& ctx, Monomial m, const CycloNum& c) {
    if (m.size() != ctx->nvars()) throw std::invalid_argument("monomial arity mismatch");
    if (!same_field(c.field(), ctx->field()))
        throw FieldMismatchError("coefficient from a different field than the context");
    MPoly p(ctx);
    p.add_term(m, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

CycloNum MPoly::constant_value() const {
    return coefficient(Monomial(ctx_->nvars(), 0));
}

CycloNum MPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycloNum::zero(ctx_->field()) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(monomial_degree(m)));
    return d;
}

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const CycloNum& MPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

bool MPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
}

void MPoly::add_term(const Monomial& m, const CycloNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

static void check_contexts(const MPoly& a, const MPoly& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatchError("polynomial operands from different contexts");
}

MPoly MPoly::operator-() const {
    MPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_contexts(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_contexts(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_contexts(*this, o);
    MPoly r(ctx_);
    Monomial prod(ctx_->nvars());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const CycloNum& c) const {
    MPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.add_term(m, a * c);
    return r;
}

MPoly operator*(const MPoly& a, const Rational& r) {
    return a.scaled(CycloNum::from_rational(a.context()->field(), r));
}

MPoly MPoly::pow(unsigned k) const {
    MPoly acc = constant(ctx_, Rational(1));
    MPoly base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

CycloNum MPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != ctx_->nvars())
        throw std::invalid_argument("evaluation point arity mismatch");
    CycloNum acc = CycloNum::zero(ctx_->field());
    for (const auto& [m, c] : terms_) {
        Rational v(1);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
        acc = acc + c * CycloNum::from_rational(ctx_->field(), v);
    }
    return acc;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

std::optional<MPoly> exact_div(const MPoly& F, const MPoly& D) {
    check_contexts(F, D);
    if (D.is_zero()) throw DivisionByZeroError("polynomial division by the zero polynomial");
    const Monomial& dm = D.leading_monomial();
    const CycloNum& dc = D.leading_coefficient();
    MPoly quotient(F.context());
    MPoly rest = F;
    Monomial t(dm.size());
    while (!rest.is_zero()) {
        const Monomial& rm = rest.leading_monomial();
        // if D | F then lt(D) | lt(F); a failed monomial division is final
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            t[i] = rm[i] - dm[i];
        }
        MPoly step = MPoly::term(F.context(), t, rest.leading_coefficient() / dc);
        quotient += step;
        rest -= step * D;
    }
#ifndef POLYINV_NO_DIVISION_CHECK
    if (quotient * D != F)
        throw VerificationError("exact_div produced a wrong quotient");
#endif
    return quotient;
}

std::vector<MPoly> coefficients_in(const MPoly& F, std::size_t slot) {
    if (slot >= F.context()->nvars()) throw std::invalid_argument("variable slot out of range");
    int d = -1;
    for (const auto& [m, c] : F.terms()) d = std::max(d, static_cast<int>(m[slot]));
    if (d < 0) return {};
    std::vector<MPoly> out(static_cast<std::size_t>(d) + 1, MPoly(F.context()));
    for (const auto& [m, c] : F.terms()) {
        Monomial stripped = m;
        stripped[slot] = 0;
        out[m[slot]] += MPoly::term(F.context(), std::move(stripped), c);
    }
    return out;
}

MPoly substitute_var(const MPoly& F, std::size_t slot, const MPoly& p) {
    check_contexts(F, p);
    std::vector<MPoly> cs = coefficients_in(F, slot);
    MPoly acc(F.context());
    for (std::size_t k = cs.size(); k-- > 0;) acc = acc * p + cs[k];
    return acc;
}

MPoly substitute_z(const MPoly& F, const MPoly& p) {
    return substitute_var(F, F.context()->z_slot(), p);
}

int degree_in_z(const MPoly& F) {
    const std::size_t slot = F.context()->z_slot();
    int d = -1;
    for (const auto& [m, c] : F.terms()) d = std::max(d, static_cast<int>(m[slot]));
    return d;
}

MPoly eval_z_zero(const MPoly& F) {
    const std::size_t slot = F.context()->z_slot();
    MPoly r(F.context());
    for (const auto& [m, c] : F.terms())
        if (m[slot] == 0) r += MPoly::term(F.context(), m, c);
    return r;
}

std::vector<MPoly> z_coefficients(const MPoly& F) {
    return coefficients_in(F, F.context()->z_slot());
}

MPoly permute_vars(const MPoly& F, const std::vector<std::size_t>& sigma) {
    const std::size_t n = F.context()->nvars();
    if (sigma.size() != n) throw std::invalid_argument("permutation arity mismatch");
    std::vector<bool> hit(n, false);
    for (std::size_t s : sigma) {
        if (s >= n || hit[s]) throw std::invalid_argument("not a permutation of the variable slots");
        hit[s] = true;
    }
    MPoly r(F.context());
    Monomial im(n);
    for (const auto& [m, c] : F.terms()) {
        for (std::size_t i = 0; i < n; ++i) im[sigma[i]] = m[i];
        r += MPoly::term(F.context(), im, c);
    }
    return r;
}

MPoly linear_coprime_witness(const MPoly& P, const MPoly& Q) {
    check_contexts(P, Q);
    if (degree_in_z(P) != 1 || degree_in_z(Q) != 1)
        throw std::invalid_argument("coprimality witness needs polynomials linear in z");
    std::vector<MPoly> pc = z_coefficients(P), qc = z_coefficients(Q);
    return pc[1] * qc[0] - qc[1] * pc[0];
}

}  // namespace polyinv
