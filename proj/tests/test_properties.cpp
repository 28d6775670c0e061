#include <doctest.h>

#include "property_suites.hpp"

using namespace ncdisc::testsupport;

TEST_SUITE("properties") {

TEST_CASE("randomized structural identities") {
    auto results = run_property_suites();
    CHECK(results.size() == 11);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.ok);
        CHECK(r.cases >= 100);
    }
}

} // TEST_SUITE
