#include <doctest.h>

#include <algorithm>

#include "dlap/verify.hpp"

using namespace dlap;

namespace {

const SuiteResult* find_suite(const VerifyReport& r, const std::string& name) {
    for (const auto& s : r.suites)
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("random verification passes and is deterministic") {
    VerifyReport a = verify_random(20, 7);
    CHECK(a.ok());
    for (const auto& s : a.suites) {
        INFO(s.name);
        CHECK(s.failures == 0);
    }
    VerifyReport b = verify_random(20, 7);
    REQUIRE(a.suites.size() == b.suites.size());
    for (std::size_t i = 0; i < a.suites.size(); ++i) {
        CHECK(a.suites[i].checks == b.suites[i].checks);
        CHECK(a.suites[i].worst_deviation == b.suites[i].worst_deviation);
    }
}

TEST_CASE("a single random trial still exercises inertia") {
    VerifyReport r = verify_random(1, 0);
    CHECK(r.ok());
    const SuiteResult* inertia = find_suite(r, "tree-inertia-vs-oracle");
    REQUIRE(inertia);
    CHECK(inertia->checks > 0);
}

TEST_CASE("verify_graph reports the sub-Laplacian reversal as a finding") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
    VerifyReport r = verify_graph(g);
    CHECK(r.ok());
    bool found = false;
    for (const auto& s : r.suites)
        for (const auto& f : s.findings)
            if (f.find("0.75") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("verify_graph on a tree runs the tree suites") {
    VerifyReport r = verify_graph(starlike_graph({1, 2, 3}));
    CHECK(r.ok());
    CHECK(find_suite(r, "tree-inertia-vs-oracle"));
}

TEST_CASE("suite bookkeeping") {
    SuiteResult s;
    s.note_deviation(1e-12);
    s.note_deviation(1e-14);
    CHECK(s.worst_deviation == 1e-12);
    for (int i = 0; i < 15; ++i) s.fail("x");
    CHECK(s.failures == 15);
    CHECK(s.failure_details.size() == 10);
    CHECK_FALSE(s.ok());
}
