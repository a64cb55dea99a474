// Copyright 2026 The fqc developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fqc/gates.hpp"
#include "fqc/identities.hpp"

#include "test_support.hpp"

using namespace fqc;

TEST_CASE("catalog shape: enough identities, unique ids, one negative") {
    const auto &catalog = builtin_catalog();
    CHECK(catalog.size() >= 25);

    std::set<std::string> ids;
    int negatives = 0;
    for (const Identity &identity : catalog) {
        ids.insert(identity.id);
        negatives += identity.negative ? 1 : 0;
        CHECK(eval(identity.lhs).dim() == eval(identity.rhs).dim());
    }
    CHECK(ids.size() == catalog.size());
    CHECK(negatives == 1);
}

TEST_CASE("the full catalog passes at the default tolerance") {
    const Report report = run_all(Tolerance{});
    CHECK(report.all_pass);
    CHECK(report.failed == 0);
    CHECK(report.passed == static_cast<int>(builtin_catalog().size()));

    for (const CheckResult &r : report.results) {
        CAPTURE(r.id);
        if (r.negative) {
            CHECK(r.distance > 0.1);
        } else {
            CHECK(r.distance < 1e-10);
        }
    }
}

TEST_CASE("check evaluates both expression kinds") {
    const ComplexMatrix h = GateCatalog::instance().at("h").matrix;
    const Identity trivial{"same", "", h, h, false, 0.0, std::nullopt};
    const CheckResult same = check(trivial);
    CHECK(same.pass);
    CHECK(same.distance == doctest::Approx(0.0));

    // A recipe against its literal passes with zero phase.
    const ComplexMatrix x = GateCatalog::instance().at("x").matrix;
    const ComplexMatrix z = GateCatalog::instance().at("z").matrix;
    const Identity recipe{"z-recipe", "", h * x * h, z, false, 0.0, std::nullopt};
    const CheckResult r = check(recipe);
    CHECK(r.pass);
    CHECK(std::abs(r.phase) < 1e-12);

    // A phase-rotated unitary passes with the phase recovered.
    std::mt19937 rng(101);
    const Circuit c = fqc::test::random_circuit(2, 6, rng);
    const ComplexMatrix u = unitary_of(c);
    const double theta = 0.7;
    const Identity rotated{"rotated", "", Expr{std::polar(1.0, theta) * u}, Expr{c},
                           false, 0.0, std::nullopt};
    const CheckResult rot = check(rotated);
    CHECK(rot.pass);
    CHECK(rot.phase == doctest::Approx(theta).epsilon(1e-9));
}

TEST_CASE("a corrupted entry fails alone") {
    std::vector<Identity> catalog = builtin_catalog();
    // Scaling one side breaks equality no matter the phase.
    for (Identity &identity : catalog) {
        if (identity.id == "eq8-cnot-qft-squared") {
            identity.rhs = 1.5 * eval(identity.rhs);
        }
    }
    const Report report = run_all(catalog, Tolerance{});
    CHECK(report.failed == 1);
    CHECK_FALSE(report.all_pass);
    for (const CheckResult &r : report.results) {
        if (r.id == "eq8-cnot-qft-squared") {
            CHECK_FALSE(r.pass);
            CHECK(r.distance >= 1e-10);
        } else {
            CHECK(r.pass);
        }
    }
}

TEST_CASE("empty catalog gives an empty report") {
    const Report report = run_all(std::vector<Identity>{}, Tolerance{});
    CHECK(report.results.empty());
    CHECK(report.all_pass);
}

TEST_CASE("report is deterministic and serializes in catalog order") {
    const std::string first = report_to_json(run_all(Tolerance{})).dump();
    const std::string second = report_to_json(run_all(Tolerance{})).dump();
    CHECK(first == second);

    const nlohmann::json j = report_to_json(run_all(Tolerance{}));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == builtin_catalog().size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        CHECK(j[i].at("id").get<std::string>() == builtin_catalog()[i].id);
        CHECK(j[i].contains("paper_ref"));
        CHECK(j[i].contains("pass"));
        CHECK(j[i].contains("distance"));
        CHECK(j[i].contains("phase"));
    }
}

TEST_CASE("evaluation failures carry the identity id") {
    const Identity broken{"mismatched", "", ComplexMatrix::identity(2),
                          ComplexMatrix::identity(4), false, 0.0, std::nullopt};
    CHECK_THROWS_WITH_AS(check(broken),
                         doctest::Contains("identity mismatched"), std::runtime_error);
}
