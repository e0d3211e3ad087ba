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
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

std::string cli() {
    const char* path = std::getenv("POLYINV_CLI");
    REQUIRE_MESSAGE(path != nullptr, "POLYINV_CLI must point at the binary");
    return path;
}

std::pair<int, std::string> run(const std::string& args) {
    const std::string out_file = "cli_test_output.tmp";
    const int status =
        std::system(("\"" + cli() + "\" " + args + " > " + out_file + " 2>/dev/null").c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

nlohmann::json run_json(const std::string& args, int expected_code) {
    auto [code, out] = run(args);
    CHECK(code == expected_code);
    auto doc = nlohmann::json::parse(out, nullptr, false);
    REQUIRE_FALSE(doc.is_discarded());
    return doc;
}

}  // namespace

TEST_CASE("classify json carries the full adequate report") {
    nlohmann::json doc = run_json("classify --json -- \"-(x+y+z)\"", 0);
    CHECK(doc["command"] == "classify");
    CHECK(doc["status"] == "ok");
    const auto& data = doc["data"];
    CHECK(data["kind"] == "adequate");
    CHECK(data["m"] == 2);
    CHECK(data["q"] == "-1");
    CHECK(data["r"] == "-x - y");
    CHECK(data["iterates"] == nlohmann::json({"z", "-x - y - z"}));
    CHECK(data["generator"] == "-x*z - y*z - z^2");
    CHECK(data["coprimality"][0]["witness"] == "-x - y");
    CHECK(data["coprimality"][0]["nonzero"] == true);
}

TEST_CASE("classify output is deterministic") {
    auto first = run("classify --json -- \"-(x+y+z)\"");
    auto second = run("classify --json -- \"-(x+y+z)\"");
    CHECK(first.second == second.second);
}

TEST_CASE("decompose reports ascending coefficients and verifies") {
    nlohmann::json doc = run_json("decompose --json -- \"-(x+y+z)\" \"z^2+x*z+y*z+x*y\"", 0);
    const auto& data = doc["data"];
    CHECK(data["coefficients"] == nlohmann::json({"x*y", "-1"}));
    CHECK(data["indexing"] == "coefficients[j] multiplies generator^j");
    CHECK(data["verified"] == true);

    nlohmann::json with_gen = run_json(
        "decompose --json --generator \"z*(x+y+z)\" -- \"-(x+y+z)\" \"z^2+x*z+y*z+x*y\"", 0);
    CHECK(with_gen["data"]["coefficients"] == nlohmann::json({"x*y", "1"}));
    CHECK(with_gen["data"]["generator"] == "x*z + y*z + z^2");
}

TEST_CASE("decompose rejects non-invariants with exit 1") {
    auto [code, out] = run("decompose --json -- \"-(x+y+z)\" \"z\"");
    CHECK(code == 1);
    auto doc = nlohmann::json::parse(out, nullptr, false);
    REQUIRE_FALSE(doc.is_discarded());
    CHECK(doc["status"] == "error");
    std::string message = doc["data"]["error"].get<std::string>();
    CHECK(message.find("not invariant") != std::string::npos);
}

TEST_CASE("decompose of an inadequate map is a usage error") {
    CHECK(run("decompose -- \"z^2\" \"x\"").first == 2);
}

TEST_CASE("fermat emits the expansion table") {
    nlohmann::json doc = run_json("fermat 7 --json", 0);
    const auto& data = doc["data"];
    CHECK(data["e"] == 2);
    CHECK(data["cauchy"] == "1");
    CHECK(data["n"] == 2);
    CHECK(data["a"] ==
          nlohmann::json({"1", "2*x^2 + 3*x*y + 2*y^2",
                          "x^4 + 2*x^3*y + 3*x^2*y^2 + 2*x*y^3 + y^4"}));
    CHECK(data["a_indexing"] == "a[j] multiplies b^(n-j); b = z*(x+y+z)");
    CHECK(data["xy_identity"]["equal"] == true);
    CHECK(data["conjecture"].size() == 2);
    CHECK(data.count("e3") == 0);

    nlohmann::json with_e3 = run_json("fermat 5 --json --show-e3", 0);
    CHECK(with_e3["data"]["e3"] == "x^2 + x*y + x*z + y^2 + y*z + z^2");
}

TEST_CASE("fermat rejects non-primes with exit 2") {
    CHECK(run("fermat 9").first == 2);
    CHECK(run("fermat 2").first == 2);
}

TEST_CASE("catalan equal and usage paths") {
    nlohmann::json doc = run_json("catalan 9 --json", 0);
    CHECK(doc["data"]["equal"] == true);
    CHECK(run("catalan 4").first == 2);
}

TEST_CASE("suite command aggregates checks") {
    nlohmann::json doc = run_json("suite roundtrip --cases 20 --seed 7 --json", 0);
    CHECK(doc["status"] == "ok");
    CHECK(doc["data"]["passed"] == doc["data"]["total"]);
    CHECK(run("suite nosuch").first == 2);
}

TEST_CASE("cyclotomic contexts through the CLI") {
    nlohmann::json doc = run_json("classify --json --vars x,z --field 3 -- \"w*z + x\"", 0);
    CHECK(doc["data"]["kind"] == "adequate");
    CHECK(doc["data"]["m"] == 3);
    CHECK(doc["data"]["q"] == "(w)");
    CHECK(run("classify --vars x,y \"x\"").first == 2);  // variables must end in z
}
