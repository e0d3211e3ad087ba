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

#ifndef POLYINV_SUITES_HPP
#define POLYINV_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polyinv {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // empty on success unless informative
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const;
    std::size_t passed_count() const;
};

/// Factorization of the univariate power gap and both E2 routes, for every
/// prime 5 <= p <= max_p.  Exact structural equality throughout.
SuiteReport run_cauchy_suite(unsigned max_p = 31);

/// E3 integrality/symmetry/invariance, the single-sum expression, the
/// expansion in b = z(x+y+z), and the a_n + xy a_{n-1} identity, for every
/// prime 5 <= p <= max_p.
SuiteReport run_granville_suite(unsigned max_p = 19);

/// Catalan's identity for the given odd n.
SuiteReport run_catalan_suite(const std::vector<unsigned>& ns = {5, 7, 9, 11, 13, 15});

/// decompose(expand(G)) == G over random adequate maps with
/// m in {1,2,3,4,6}, fields Q(zeta_m), up to 3 x-variables, deg r <= 2,
/// deg G <= 4.  Reports an aggregate count plus any failures.
SuiteReport run_roundtrip_suite(unsigned cases = 200, std::uint64_t seed = 42);

/// Orbit and divisibility facts for a roster of adequate maps: p_m = z by
/// closed form and by m-fold substitution, generator invariance and degree,
/// orbit quotients for random invariants, pairwise coprimality witnesses
/// (nonzero iff r != 0), and the z^m structure of invariants when r = 0.
SuiteReport run_lemma_suite(unsigned cases_per_map = 20, std::uint64_t seed = 42);

}  // namespace polyinv

#endif
