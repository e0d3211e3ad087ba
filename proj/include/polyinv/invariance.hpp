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

#ifndef POLYINV_INVARIANCE_HPP
#define POLYINV_INVARIANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyinv/mpoly.hpp"

namespace polyinv {

/// A substitution endomorphism of K[x, z]: z goes to `image`, the x-block
/// is fixed pointwise.  Ring homomorphism over K[x].
struct SubstMap {
    MPoly image;
};

/// F(x, p(x, z)), the map applied to F.
MPoly apply_map(const MPoly& F, const SubstMap& map);

/// True exactly when the map fixes F (structural equality of term maps).
bool is_invariant(const MPoly& F, const SubstMap& map);

/// Why a substitution map does or does not admit nonconstant invariants.
enum class MapKind {
    Identity,             // p = z; every polynomial is invariant
    Adequate,             // p = q z + r(x) with q a primitive m-th root of unity, m >= 2
    NonlinearInZ,         // degree of p in z differs from 1; only K[x] is invariant
    UnitNotRootOfUnity,   // p = q z + r with constant q that is not a root of unity
    TranslationLike,      // p = z + r with r != 0; the orbit of z never closes
    NonconstantLeading    // p = q(x) z + r(x) with q outside K
};

const char* map_kind_name(MapKind kind);

/// Validated substitution data for z -> q z + r(x): q has exact
/// root-of-unity order m, r is free of z, and m = 1 forces q = 1, r = 0.
class AdequateMap {
  public:
    /// Builds and validates; r supplies the context.  Throws
    /// std::invalid_argument when (q, r) is not adequate.
    static AdequateMap make(const CycloNum& q, MPoly r);
    static AdequateMap identity(const ContextPtr& ctx);

    unsigned order() const { return m_; }
    const CycloNum& unit() const { return q_; }
    const MPoly& shift() const { return r_; }
    const ContextPtr& context() const { return r_.context(); }

    /// The image polynomial q z + r (just z for the identity).
    MPoly image() const;
    SubstMap map() const { return SubstMap{image()}; }

  private:
    AdequateMap(unsigned m, CycloNum q, MPoly r)
        : m_(m), q_(std::move(q)), r_(std::move(r)) {}
    unsigned m_;
    CycloNum q_;
    MPoly r_;
};

struct Classification {
    MapKind kind;
    std::optional<AdequateMap> adequate;  // present for Identity and Adequate
    std::string detail;                   // human-readable consequence
};

/// Decide which invariants a substitution z -> p(x, z) admits.  Only the
/// Identity and Adequate outcomes leave nonconstant invariants; every
/// other outcome confines the invariant algebra to K[x] or below.
Classification classify_map(const MPoly& p);

/// The image of z under the k-th iterate, in closed form:
/// q^k z + (q^{k-1} + ... + q + 1) r.  k = order gives back z.
MPoly iterate_z(const AdequateMap& map, unsigned k);

/// b = p_0 p_1 ... p_{m-1}, the product of the orbit of z.  Invariant of
/// z-degree m; every invariant polynomial is a polynomial in b with
/// coefficients free of z.
MPoly invariant_generator(const AdequateMap& map);

/// coeffs[j] (free of z) multiplies generator^j; the zero polynomial has
/// an empty coefficient list, otherwise the last entry is nonzero.
struct Decomposition {
    MPoly generator;
    std::vector<MPoly> coeffs;
};

/// Write an invariant F as a polynomial in the generator, peeling one
/// x-only coefficient per step: a = F at z = 0, then F := (F - a) / b.
/// A caller-supplied generator must be a nonzero constant multiple of the
/// canonical product (so coefficient tables can match a preferred sign).
/// Throws NotInvariantError / BadGeneratorError; a division failure inside
/// the loop would falsify the underlying theorem and raises
/// VerificationError.
Decomposition decompose(const MPoly& F, const AdequateMap& map,
                        const std::optional<MPoly>& generator = std::nullopt);

/// Sum of coeffs[j] * generator^j.
MPoly expand(const Decomposition& dec);

/// For invariant F: the exact quotients (F - F(x,0)) / p_k for
/// k = 0..m-1.  Each p_k divides that difference; a failed division here
/// is a VerificationError.
std::vector<MPoly> iterate_quotients(const MPoly& F, const AdequateMap& map);

struct CoprimalityWitness {
    unsigned j, k;
    MPoly witness;  // nonzero iff p_j, p_k are coprime in K(x)[z]
};

/// Pairwise z-resultants of the orbit polynomials p_0..p_{m-1}; all
/// nonzero exactly when r != 0.
std::vector<CoprimalityWitness> coprimality_witnesses(const AdequateMap& map);

}  // namespace polyinv

#endif
