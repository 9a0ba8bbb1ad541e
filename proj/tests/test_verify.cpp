#include <algorithm>

#include "doctest.h"
#include "gprod/verify.hpp"

using namespace gprod;

TEST_CASE("suite names are stable and dispatch works") {
    auto names = suite_names();
    CHECK(names.size() == 16);
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const auto& expected :
         {"alpha-circ", "alpha-otimes", "assoc", "chromatic", "clique", "degree",
          "domination", "fiber-family", "kappa-circ", "kneser-tuple", "lambda-circ",
          "main-otimes", "partition-otimes", "partitions", "sufficient", "weichsel"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());

    CHECK_THROWS_AS(run_case("no-such-suite", 0), std::invalid_argument);
}

TEST_CASE("every suite stays clean on a short seed range") {
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name, 0, 12);
        INFO(name << ": "
                  << (r.violations.empty() ? std::string{} : r.violations.front().details));
        CHECK(r.passed());
        CHECK(r.checked + r.skipped == 12);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("single case reports carry the suite and seed") {
    VerifyReport rep = run_case("weichsel", 3);
    CHECK(rep.suite == "weichsel");
    CHECK(rep.seed == 3);
    CHECK(rep.status != VerifyStatus::violation);
}
