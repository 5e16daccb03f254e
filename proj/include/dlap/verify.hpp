#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dlap/graph.hpp"
#include "dlap/hjoin.hpp"

namespace dlap {

/// Outcome of one property suite: how many instances were checked, which
/// failed, the largest numerical deviation seen, and noteworthy findings
/// that are not failures (e.g. a sub-Laplacian monotonicity reversal).
struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double worst_deviation = 0.0;
    std::vector<std::string> failure_details;
    std::vector<std::string> findings;

    void fail(std::string detail);
    void note_deviation(double d);
    bool ok() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok() const;
};

struct VerifyOptions {
    double eps_zero = 1e-12;
    double tol = 1e-10;
};

/// Random H-join spec: connected template on 1..max_r vertices, components
/// drawn from complete graphs, cycles, K2 and edgeless graphs, total order
/// at most max_total.
HJoinSpec random_hjoin_spec(std::mt19937_64& rng, std::size_t max_r = 4, std::size_t max_total = 24);

/// Property suites over randomly generated instances, deterministic in seed.
VerifyReport verify_random(std::size_t trials, std::uint64_t seed, const VerifyOptions& opt = {});

/// Property suites applicable to one graph (trace, bounds, bipartite
/// cospectrality, edge monotonicity, and the tree suites when g is a tree).
VerifyReport verify_graph(const Graph& g, const VerifyOptions& opt = {});

// Individual suites, exposed for the test binaries.
void check_inertia_against_oracle(const Graph& tree, Vertex root, double s, SuiteResult& out,
                                  const VerifyOptions& opt = {});
void check_trace_identity(const Graph& g, double s, SuiteResult& out);
void check_bounds(const Graph& g, double s, SuiteResult& out);
void check_bipartite_cospectrality(const Graph& g, double s, SuiteResult& out);
void check_hjoin_against_oracle(const HJoinSpec& spec, double s, SuiteResult& out);

}  // namespace dlap
