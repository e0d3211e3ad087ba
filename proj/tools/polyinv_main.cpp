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

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>

#include "polyinv/classical.hpp"
#include "polyinv/expr.hpp"
#include "polyinv/invariance.hpp"
#include "polyinv/suites.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace polyinv;

namespace {

// exit codes: 0 success, 1 mathematical verification failure, 2 usage/parse
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

ContextPtr make_map_context(const std::string& vars, unsigned field_index) {
    std::vector<std::string> names = split_names(vars);
    if (names.empty() || names.back() != "z")
        throw std::invalid_argument("--vars must be a nonempty list ending in z");
    return PolyContext::make(std::move(names), field_index);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json classification_json(const Classification& cls) {
    ordered_json data;
    data["kind"] = map_kind_name(cls.kind);
    data["detail"] = cls.detail;
    if (cls.adequate) {
        const AdequateMap& map = *cls.adequate;
        data["m"] = map.order();
        data["q"] = format_scalar(map.unit());
        data["r"] = format(map.shift());
        ordered_json iterates = ordered_json::array();
        for (unsigned k = 0; k < map.order(); ++k) iterates.push_back(format(iterate_z(map, k)));
        data["iterates"] = std::move(iterates);
        data["generator"] = format(invariant_generator(map));
        ordered_json cop = ordered_json::array();
        for (const auto& w : coprimality_witnesses(map)) {
            ordered_json entry;
            entry["j"] = w.j;
            entry["k"] = w.k;
            entry["witness"] = format(w.witness);
            entry["nonzero"] = !w.witness.is_zero();
            cop.push_back(std::move(entry));
        }
        data["coprimality"] = std::move(cop);
    }
    return data;
}

int cmd_classify(const std::string& map_expr, const std::string& vars, unsigned field_index,
                 bool json) {
    ContextPtr ctx = make_map_context(vars, field_index);
    Classification cls = classify_map(parse(map_expr, ctx));
    ordered_json data = classification_json(cls);
    if (json) {
        emit({{"command", "classify"}, {"status", "ok"}, {"data", data}});
        return 0;
    }
    std::cout << "kind: " << map_kind_name(cls.kind) << "\n";
    std::cout << "detail: " << cls.detail << "\n";
    if (cls.adequate) {
        const AdequateMap& map = *cls.adequate;
        std::cout << "m: " << map.order() << "\n";
        std::cout << "q: " << format_scalar(map.unit()) << "\n";
        std::cout << "r: " << format(map.shift()) << "\n";
        for (unsigned k = 0; k < map.order(); ++k)
            std::cout << "p_" << k << ": " << format(iterate_z(map, k)) << "\n";
        std::cout << "generator b: " << format(invariant_generator(map)) << "\n";
        for (const auto& w : coprimality_witnesses(map))
            std::cout << "coprimality witness (" << w.j << "," << w.k << "): " << format(w.witness)
                      << (w.witness.is_zero() ? "  [zero]" : "  [nonzero]") << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& map_expr, const std::string& poly_expr,
                  const std::string& generator_expr, const std::string& vars,
                  unsigned field_index, bool json) {
    ContextPtr ctx = make_map_context(vars, field_index);
    Classification cls = classify_map(parse(map_expr, ctx));
    if (!cls.adequate)
        throw std::invalid_argument("map is not adequate (" + std::string(map_kind_name(cls.kind)) +
                                    "): " + cls.detail);
    MPoly input = parse(poly_expr, ctx);
    std::optional<MPoly> generator;
    if (!generator_expr.empty()) generator = parse(generator_expr, ctx);
    Decomposition dec = decompose(input, *cls.adequate, generator);
    const bool verified = expand(dec) == input;
    if (!verified) throw VerificationError("expand(coefficients) does not reproduce the input");
    if (json) {
        ordered_json data;
        data["map"] = format(cls.adequate->image());
        data["kind"] = map_kind_name(cls.kind);
        data["m"] = cls.adequate->order();
        data["generator"] = format(dec.generator);
        data["indexing"] = "coefficients[j] multiplies generator^j";
        ordered_json coeffs = ordered_json::array();
        for (const MPoly& c : dec.coeffs) coeffs.push_back(format(c));
        data["coefficients"] = std::move(coeffs);
        data["verified"] = verified;
        emit({{"command", "decompose"}, {"status", "ok"}, {"data", data}});
        return 0;
    }
    std::cout << "map: " << format(cls.adequate->image()) << "  (" << map_kind_name(cls.kind)
              << ", m=" << cls.adequate->order() << ")\n";
    std::cout << "generator: " << format(dec.generator) << "\n";
    std::cout << "coefficients (coefficients[j] multiplies generator^j):\n";
    for (std::size_t j = 0; j < dec.coeffs.size(); ++j)
        std::cout << "  [" << j << "] " << format(dec.coeffs[j]) << "\n";
    std::cout << "verify: expand(coefficients) == input  ok\n";
    return 0;
}

int cmd_fermat(unsigned p, bool show_e3, bool json) {
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("p must be a prime greater than 3");
    CauchyFactorization f = cauchy_factorization(p);
    MPoly e2 = e2_by_division(p);
    PowerGapExpansion exp = e3_expansion(p);
    IdentityReport xy = check_xy_identity(exp);
    if (json) {
        ordered_json data;
        data["p"] = p;
        data["e"] = f.multiplicity;
        data["cauchy"] = format(f.cauchy);
        data["e2"] = format(e2);
        if (show_e3) data["e3"] = format(e3_by_division(p));
        data["n"] = exp.n;
        data["a_indexing"] = "a[j] multiplies b^(n-j); b = z*(x+y+z)";
        ordered_json table = ordered_json::array();
        for (const MPoly& a : exp.a) table.push_back(format(a));
        data["a"] = std::move(table);
        data["xy_identity"] =
            ordered_json{{"equal", xy.equal}, {"lhs", format(xy.lhs)}, {"rhs", format(xy.rhs)}};
        ordered_json conj = ordered_json::array();
        for (unsigned m = 0; m + 1 <= exp.n; ++m) {
            IdentityReport r = check_conjecture(exp, m);
            conj.push_back(ordered_json{{"m", m},
                                        {"equal", r.equal},
                                        {"lhs", format(r.lhs)},
                                        {"rhs", format(r.rhs)}});
        }
        data["conjecture"] = std::move(conj);
        emit({{"command", "fermat"}, {"status", "ok"}, {"data", data}});
        return 0;
    }
    std::cout << "p: " << p << "\n";
    std::cout << "e: " << f.multiplicity << "\n";
    std::cout << "C_p: " << format(f.cauchy) << "\n";
    std::cout << "E2: " << format(e2) << "\n";
    if (show_e3) std::cout << "E3: " << format(e3_by_division(p)) << "\n";
    std::cout << "n: " << exp.n << "\n";
    std::cout << "a-table (a[j] multiplies b^(n-j), b = z*(x+y+z)):\n";
    for (std::size_t j = 0; j < exp.a.size(); ++j)
        std::cout << "  a[" << j << "] = " << format(exp.a[j]) << "\n";
    std::cout << "identity a_n + x*y*a_(n-1) == (x+y)^(p-3): "
              << (xy.equal ? "equal" : "UNEQUAL") << "\n";
    for (unsigned m = 0; m + 1 <= exp.n; ++m) {
        IdentityReport r = check_conjecture(exp, m);
        std::cout << "conjecture m=" << m << ": " << (r.equal ? "equal" : "UNEQUAL") << "\n";
    }
    return 0;
}

int cmd_catalan(unsigned n, bool json) {
    IdentityReport r = catalan_check(n);
    if (json) {
        ordered_json data;
        data["n"] = n;
        data["lhs"] = format(r.lhs);
        data["rhs"] = format(r.rhs);
        data["equal"] = r.equal;
        emit({{"command", "catalan"},
              {"status", r.equal ? "ok" : "unequal"},
              {"data", data}});
    } else {
        std::cout << "n: " << n << "\n";
        std::cout << "lhs: " << format(r.lhs) << "\n";
        std::cout << "rhs: " << format(r.rhs) << "\n";
        std::cout << "result: " << (r.equal ? "equal" : "UNEQUAL") << "\n";
    }
    return r.equal ? 0 : kExitVerification;
}

int cmd_suite(const std::string& selection, unsigned max_p, unsigned cases, std::uint64_t seed,
              bool json) {
    std::vector<SuiteReport> reports;
    const bool all = selection == "all";
    if (all || selection == "cauchy") reports.push_back(run_cauchy_suite(max_p ? max_p : 31));
    if (all || selection == "granville") reports.push_back(run_granville_suite(max_p ? max_p : 19));
    if (all || selection == "catalan") reports.push_back(run_catalan_suite());
    if (all || selection == "roundtrip") reports.push_back(run_roundtrip_suite(cases, seed));
    if (all || selection == "lemmas") reports.push_back(run_lemma_suite(20, seed));
    if (reports.empty())
        throw std::invalid_argument(
            "unknown suite '" + selection +
            "' (expected granville, cauchy, catalan, roundtrip, lemmas or all)");
    std::size_t total = 0, passed = 0;
    for (const auto& rep : reports) {
        total += rep.checks.size();
        passed += rep.passed_count();
    }
    if (json) {
        ordered_json checks = ordered_json::array();
        for (const auto& rep : reports)
            for (const auto& c : rep.checks)
                checks.push_back(ordered_json{{"suite", rep.suite},
                                              {"name", c.name},
                                              {"passed", c.passed},
                                              {"detail", c.detail}});
        ordered_json data;
        data["selection"] = selection;
        data["seed"] = seed;
        data["passed"] = passed;
        data["total"] = total;
        data["checks"] = std::move(checks);
        emit({{"command", "suite"},
              {"status", passed == total ? "ok" : "fail"},
              {"data", data}});
    } else {
        for (const auto& rep : reports)
            for (const auto& c : rep.checks)
                std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << rep.suite << ": " << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        std::cout << passed << "/" << total << " checks passed\n";
    }
    return passed == total ? 0 : kExitVerification;
}

int fail_with(int code, const std::string& command, const std::string& what, bool json) {
    if (json)
        emit({{"command", command},
              {"status", "error"},
              {"data", ordered_json{{"error", what}}}});
    std::cerr << "error: " << what << "\n";
    return code;
}

// Polynomial expressions routinely start with '-', which a getopt-style
// parser would read as an option.  Rewrite the command line so that the
// subcommand stays in place, value-taking options become --opt=value, and
// everything else moves behind a "--" separator.
std::vector<std::string> arrange_args(int argc, char** argv) {
    static const std::set<std::string> value_opts = {"--vars",  "--field", "--generator",
                                                     "--max-p", "--cases", "--seed"};
    std::vector<std::string> options, positionals;
    bool subcommand_seen = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--") {
            for (++i; i < argc; ++i) positionals.emplace_back(argv[i]);
            break;
        }
        if (a.rfind("--", 0) == 0) {
            if (a.find('=') == std::string::npos && value_opts.count(a) && i + 1 < argc)
                a += "=" + std::string(argv[++i]);
            options.push_back(std::move(a));
        } else if (a == "-h") {
            options.push_back(std::move(a));
        } else if (!subcommand_seen && !a.empty() && a[0] != '-') {
            options.push_back(std::move(a));  // the subcommand itself
            subcommand_seen = true;
        } else {
            positionals.push_back(std::move(a));
        }
    }
    if (!positionals.empty()) {
        options.emplace_back("--");
        options.insert(options.end(), positionals.begin(), positionals.end());
    }
    return options;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for substitution-invariant polynomials"};
    app.name("polyinv");
    app.require_subcommand(1);

    std::string vars = "x,y,z";
    unsigned field_index = 1;
    bool json = false;
    app.add_option("--vars", vars, "comma-separated variable names, ending in z")
        ->capture_default_str();
    app.add_option("--field", field_index, "cyclotomic field index M (1 = plain rationals)")
        ->capture_default_str();
    app.add_flag("--json", json, "emit JSON instead of text");

    auto* classify = app.add_subcommand("classify", "classify a substitution map z -> p(x,z)");
    classify->fallthrough();
    std::string map_expr;
    classify->add_option("map", map_expr, "image of z, e.g. \"-(x+y+z)\"")->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "write an invariant polynomial in the generator b");
    decompose_cmd->fallthrough();
    std::string dec_map, dec_poly, dec_generator;
    decompose_cmd->add_option("map", dec_map, "image of z")->required();
    decompose_cmd->add_option("poly", dec_poly, "invariant polynomial")->required();
    decompose_cmd->add_option("--generator", dec_generator,
                              "generator to use (a nonzero constant multiple of the orbit product)");

    auto* fermat =
        app.add_subcommand("fermat", "Cauchy factorization, E2, E3 and its expansion in b");
    fermat->fallthrough();
    unsigned fermat_p = 0;
    bool show_e3 = false;
    fermat->add_option("p", fermat_p, "odd prime > 3")->required();
    fermat->add_flag("--show-e3", show_e3, "include the full E3 polynomial in the output");

    auto* catalan = app.add_subcommand("catalan", "Catalan's identity for an odd n > 3");
    catalan->fallthrough();
    unsigned catalan_n = 0;
    catalan->add_option("n", catalan_n, "odd integer > 3")->required();

    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->fallthrough();
    std::string selection;
    unsigned max_p = 0, cases = 200;
    std::uint64_t seed = 42;
    suite->add_option("selection", selection, "granville|cauchy|catalan|roundtrip|lemmas|all")
        ->required();
    suite->add_option("--max-p", max_p, "largest prime to test (0 = per-suite default)");
    suite->add_option("--cases", cases, "random cases for the roundtrip suite")
        ->capture_default_str();
    suite->add_option("--seed", seed, "seed for the random suites")->capture_default_str();

    try {
        std::vector<std::string> args = arrange_args(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (classify->parsed()) return cmd_classify(map_expr, vars, field_index, json);
        if (decompose_cmd->parsed())
            return cmd_decompose(dec_map, dec_poly, dec_generator, vars, field_index, json);
        if (fermat->parsed()) return cmd_fermat(fermat_p, show_e3, json);
        if (catalan->parsed()) return cmd_catalan(catalan_n, json);
        if (suite->parsed()) return cmd_suite(selection, max_p, cases, seed, json);
    } catch (const ParseError& e) {
        return fail_with(kExitUsage, command, e.what(), json);
    } catch (const NotInvariantError& e) {
        return fail_with(kExitVerification, command, e.what(), json);
    } catch (const BadGeneratorError& e) {
        return fail_with(kExitVerification, command, e.what(), json);
    } catch (const std::invalid_argument& e) {
        return fail_with(kExitUsage, command, e.what(), json);
    } catch (const std::exception& e) {
        return fail_with(kExitVerification, command, e.what(), json);
    }
    return kExitUsage;
}
