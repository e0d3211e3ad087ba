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

#include "polyinv/invariance.hpp"

#include "polyinv/expr.hpp"

namespace polyinv {

MPoly apply_map(const MPoly& F, const SubstMap& map) { return substitute_z(F, map.image); }

bool is_invariant(const MPoly& F, const SubstMap& map) { return apply_map(F, map) == F; }

const char* map_kind_name(MapKind kind) {
    switch (kind) {
        case MapKind::Identity: return "identity";
        case MapKind::Adequate: return "adequate";
        case MapKind::NonlinearInZ: return "nonlinear_in_z";
        case MapKind::UnitNotRootOfUnity: return "unit_not_root_of_unity";
        case MapKind::TranslationLike: return "translation_like";
        case MapKind::NonconstantLeading: return "nonconstant_leading";
    }
    return "?";
}

AdequateMap AdequateMap::make(const CycloNum& q, MPoly r) {
    const ContextPtr& ctx = r.context();
    if (!same_field(q.field(), ctx->field()))
        throw FieldMismatchError("unit q from a different field than the context");
    if (degree_in_z(r) > 0)
        throw std::invalid_argument("shift r must be free of the distinguished variable");
    auto ord = root_of_unity_order(q);
    if (!ord) throw std::invalid_argument("q is not a root of unity");
    if (*ord == 1 && !r.is_zero())
        throw std::invalid_argument("q = 1 requires r = 0 (translations admit no invariants)");
    return AdequateMap(*ord, q, std::move(r));
}

AdequateMap AdequateMap::identity(const ContextPtr& ctx) {
    return AdequateMap(1, CycloNum::one(ctx->field()), MPoly::zero(ctx));
}

MPoly AdequateMap::image() const {
    const ContextPtr& ctx = r_.context();
    return MPoly::variable(ctx, ctx->z_slot()).scaled(q_) + r_;
}

Classification classify_map(const MPoly& p) {
    const int d = degree_in_z(p);
    if (d != 1)
        return {MapKind::NonlinearInZ, std::nullopt,
                "degree in z is " + std::to_string(d) + ", not 1; B = K[x]"};
    std::vector<MPoly> cs = z_coefficients(p);
    const MPoly& r = cs[0];
    const MPoly& lead = cs[1];
    if (!lead.is_constant())
        return {MapKind::NonconstantLeading, std::nullopt,
                "leading z-coefficient " + format(lead) +
                    " is not a scalar; no nonconstant invariants (C is empty)"};
    const CycloNum q = lead.constant_value();
    auto ord = root_of_unity_order(q);
    if (!ord)
        return {MapKind::UnitNotRootOfUnity, std::nullopt,
                "q = " + format_scalar(q) +
                    " is not a root of unity; no nonconstant invariants (C is empty)"};
    if (*ord == 1 && !r.is_zero())
        return {MapKind::TranslationLike, std::nullopt,
                "q = 1 with r = " + format(r) +
                    " != 0; the orbit of z never closes (C is empty)"};
    AdequateMap map = AdequateMap::make(q, r);
    if (*ord == 1)
        return {MapKind::Identity, std::move(map), "p = z; every polynomial is invariant (B = A)"};
    return {MapKind::Adequate, std::move(map),
            std::to_string(*ord) + "-adequate: q is a primitive root of unity of order " +
                std::to_string(*ord)};
}

MPoly iterate_z(const AdequateMap& map, unsigned k) {
    const ContextPtr& ctx = map.context();
    const CycloNum& q = map.unit();
    const FieldPtr& field = ctx->field();
    // geometric sum 1 + q + ... + q^{k-1}
    CycloNum partial = CycloNum::zero(field);
    if (q.is_one()) partial = CycloNum::from_rational(field, Rational(static_cast<long>(k)));
    else partial = (q.pow(k) - CycloNum::one(field)) / (q - CycloNum::one(field));
    return MPoly::variable(ctx, ctx->z_slot()).scaled(q.pow(k)) + map.shift().scaled(partial);
}

MPoly invariant_generator(const AdequateMap& map) {
    const ContextPtr& ctx = map.context();
    MPoly b = MPoly::constant(ctx, Rational(1));
    for (unsigned k = 0; k < map.order(); ++k) b = b * iterate_z(map, k);
    if (!is_invariant(b, map.map()))
        throw VerificationError("orbit product is not invariant");
    if (degree_in_z(b) != static_cast<int>(map.order()))
        throw VerificationError("orbit product has wrong z-degree");
    return b;
}

namespace {

void require_invariant(const MPoly& F, const AdequateMap& map, const char* who) {
    MPoly image = apply_map(F, map.map());
    if (image == F) return;
    MPoly diff = image - F;
    std::string mono =
        format(MPoly::term(F.context(), diff.leading_monomial(),
                           CycloNum::one(F.context()->field())));
    throw NotInvariantError(std::string(who) + ": polynomial is not invariant; first differing monomial " +
                                mono + " (coefficient changes by " +
                                format_scalar(diff.leading_coefficient()) + ")",
                            mono);
}

}  // namespace

Decomposition decompose(const MPoly& F, const AdequateMap& map,
                        const std::optional<MPoly>& generator) {
    if (!same_context(F.context(), map.context()))
        throw ContextMismatchError("polynomial and map from different contexts");
    require_invariant(F, map, "decompose");
    MPoly b = invariant_generator(map);
    if (generator) {
        if (!same_context(generator->context(), map.context()))
            throw ContextMismatchError("generator from a different context");
        if (degree_in_z(*generator) != static_cast<int>(map.order()))
            throw BadGeneratorError("generator must have z-degree equal to the map order");
        if (!is_invariant(*generator, map.map()))
            throw BadGeneratorError("generator is not invariant under the map");
        auto scale = exact_div(*generator, b);
        if (!scale || !scale->is_constant() || scale->is_zero())
            throw BadGeneratorError(
                "generator must be a nonzero constant multiple of the orbit product " + format(b));
        b = *generator;
    }
    std::vector<MPoly> coeffs;
    MPoly cur = F;
    while (!cur.is_zero()) {
        MPoly a = eval_z_zero(cur);
        coeffs.push_back(a);
        MPoly rest = cur - a;
        if (rest.is_zero()) break;
        auto quotient = exact_div(rest, b);
        if (!quotient)
            throw VerificationError(
                "decompose: generator failed to divide an invariant remainder");
        cur = std::move(*quotient);
    }
    return {std::move(b), std::move(coeffs)};
}

MPoly expand(const Decomposition& dec) {
    MPoly acc(dec.generator.context());
    for (std::size_t j = dec.coeffs.size(); j-- > 0;) acc = acc * dec.generator + dec.coeffs[j];
    return acc;
}

std::vector<MPoly> iterate_quotients(const MPoly& F, const AdequateMap& map) {
    if (!same_context(F.context(), map.context()))
        throw ContextMismatchError("polynomial and map from different contexts");
    require_invariant(F, map, "iterate_quotients");
    MPoly difference = F - eval_z_zero(F);
    std::vector<MPoly> out;
    out.reserve(map.order());
    for (unsigned k = 0; k < map.order(); ++k) {
        auto q = exact_div(difference, iterate_z(map, k));
        if (!q)
            throw VerificationError("iterate p_" + std::to_string(k) +
                                    " failed to divide F - F(x,0)");
        out.push_back(std::move(*q));
    }
    return out;
}

std::vector<CoprimalityWitness> coprimality_witnesses(const AdequateMap& map) {
    std::vector<MPoly> iterates;
    for (unsigned k = 0; k < map.order(); ++k) iterates.push_back(iterate_z(map, k));
    std::vector<CoprimalityWitness> out;
    for (unsigned j = 0; j < map.order(); ++j)
        for (unsigned k = j + 1; k < map.order(); ++k)
            out.push_back({j, k, linear_coprime_witness(iterates[j], iterates[k])});
    return out;
}

}  // namespace polyinv
