#include "dlap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dlap/deformed.hpp"
#include "dlap/dense_eigen.hpp"
#include "dlap/tree_inertia.hpp"

namespace dlap {

namespace {

constexpr std::size_t kMaxDetails = 10;
const std::vector<double> kInertiaS{-2.0, -1.0, -0.6, 0.0, 0.3, 1.0, 1.7};
const std::vector<double> kGraphS{-2.0, -1.0, -0.75, -0.3, 0.0, 0.3, 0.75, 1.0, 1.4, 2.5};
const std::vector<double> kHJoinS{-2.0, -1.0, -0.5, 0.3, 1.0, 1.6};

std::string describe(const Graph& g) {
    std::ostringstream os;
    os.precision(9);
    os << "n=" << g.order() << " edges=[";
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        os << (i ? " " : "") << g.edges()[i].first << "-" << g.edges()[i].second;
    os << "]";
    return os.str();
}

std::string with_s(const std::string& what, double s) {
    std::ostringstream os;
    os.precision(9);
    os << what << " s=" << s;
    return os.str();
}

}  // namespace

void SuiteResult::fail(std::string detail) {
    ++failures;
    if (failure_details.size() < kMaxDetails) failure_details.push_back(std::move(detail));
}

void SuiteResult::note_deviation(double d) { worst_deviation = std::max(worst_deviation, d); }

bool VerifyReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

void check_trace_identity(const Graph& g, double s, SuiteResult& out) {
    if (g.order() == 0) return;
    ++out.checks;
    const double dev = std::abs(symmetric_spectrum(deformed_matrix(g, s)).sum() - deformed_trace(g, s));
    out.note_deviation(dev);
    if (dev > 1e-8 * static_cast<double>(g.order()))
        out.fail(with_s("trace identity " + describe(g), s));
}

void check_bounds(const Graph& g, double s, SuiteResult& out) {
    if (g.order() < 2 || !is_connected(g)) return;
    const double top = largest_eigenvalue(deformed_matrix(g, s));
    const double upper = upper_bound_radius(g, s);
    ++out.checks;
    out.note_deviation(std::max(0.0, top - upper));
    if (top > upper + 1e-9) out.fail(with_s("upper bound " + describe(g), s));
    if (auto lower = lower_bound_radius(g, s)) {
        ++out.checks;
        out.note_deviation(std::max(0.0, *lower - top));
        if (*lower > top + 1e-9) out.fail(with_s("lower bound " + describe(g), s));
        const bool star = g.max_degree() + 1 == g.order() && g.size() + 1 == g.order();
        if (star) {
            ++out.checks;
            out.note_deviation(std::abs(*lower - top));
            if (std::abs(*lower - top) > 1e-9) out.fail(with_s("star equality " + describe(g), s));
        }
    }
    const double bottom = symmetric_spectrum(deformed_matrix(g, s)).min();
    if (std::abs(bottom) > top + 1e-9)
        out.findings.push_back(with_s("|lambda_min| > lambda_max for " + describe(g), s));
}

void check_bipartite_cospectrality(const Graph& g, double s, SuiteResult& out) {
    auto u = bipartite_conjugation(g, s);
    if (!u) return;
    std::vector<double> signs(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) signs[i] = (*u)(i, i);
    const SymMatrix plus = deformed_matrix(g, s);
    const SymMatrix minus = deformed_matrix(g, -s);
    out.checks += 2;
    if (!(diagonal_congruence(signs, plus) == minus))
        out.fail(with_s("conjugation U M(s) U != M(-s) for " + describe(g), s));
    const double dev = spectrum_deviation(symmetric_spectrum(plus), symmetric_spectrum(minus));
    out.note_deviation(dev);
    if (dev > 1e-9) out.fail(with_s("sigma(M(s)) != sigma(M(-s)) for " + describe(g), s));
}

void check_inertia_against_oracle(const Graph& tree, Vertex root, double s, SuiteResult& out,
                                  const VerifyOptions& opt) {
    const RootedTree t = root_and_order(tree, root);
    const Spectrum spec = symmetric_spectrum(deformed_matrix(tree, s));
    const auto groups = spec.grouped();
    const double tau = spec.group_tolerance();

    auto expect = [&](double lambda) {
        InertiaCounts c;
        for (double v : spec.values()) {
            if (v > lambda + tau)
                ++c.greater;
            else if (v < lambda - tau)
                ++c.less;
            else
                ++c.equal;
        }
        return c;
    };

    std::vector<double> probes;
    probes.push_back(groups.front().first - 1.0);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        probes.push_back(groups[i].first);
        probes.push_back(i + 1 < groups.size() ? 0.5 * (groups[i].first + groups[i + 1].first)
                                               : groups[i].first + 1.0);
    }
    for (double lambda : probes) {
        ++out.checks;
        const InertiaCounts got = count_relative(t, s, lambda, opt.eps_zero);
        if (!(got == expect(lambda))) {
            std::ostringstream os;
            os.precision(9);
            os << "inertia mismatch root=" << root << " lambda=" << lambda << " got (" << got.greater
               << "," << got.equal << "," << got.less << ") for " << describe(tree);
            out.fail(with_s(os.str(), s));
        }
    }
}

void check_hjoin_against_oracle(const HJoinSpec& spec, double s, SuiteResult& out) {
    ++out.checks;
    const Spectrum synth = hjoin_spectrum(spec, s);
    const Spectrum oracle = symmetric_spectrum(deformed_matrix(assemble_graph(spec), s));
    const double dev = spectrum_deviation(synth, oracle);
    out.note_deviation(dev);
    if (dev > 1e-8) {
        std::ostringstream os;
        os.precision(9);
        os << "H-join spectrum deviates by " << dev << " for H " << describe(spec.h) << " components";
        for (const auto& c : spec.components) os << " " << c.describe();
        out.fail(with_s(os.str(), s));
    }
}

HJoinSpec random_hjoin_spec(std::mt19937_64& rng, std::size_t max_r, std::size_t max_total) {
    std::uniform_int_distribution<std::size_t> pick_r(1, max_r);
    std::uniform_int_distribution<int> pick_kind(0, 3);
    const std::size_t r = pick_r(rng);
    HJoinSpec spec{random_connected_graph(r, 0.4, rng), {}};
    const std::size_t budget = std::max<std::size_t>(1, max_total / r);
    for (std::size_t i = 0; i < r; ++i) {
        auto upto = [&](std::size_t lo, std::size_t hi) {
            return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, std::min(hi, budget)))(rng);
        };
        switch (budget < 3 ? 0 : pick_kind(rng)) {
            case 0: spec.components.push_back(ComponentSpec::from_family(FamilySpec::complete(upto(1, 5)))); break;
            case 1: spec.components.push_back(ComponentSpec::from_family(FamilySpec::cycle(upto(3, 6)))); break;
            case 2: spec.components.push_back(ComponentSpec::from_family(FamilySpec::path(2))); break;
            default: spec.components.push_back(ComponentSpec::from_graph(Graph(upto(1, 4), {}))); break;
        }
    }
    return spec;
}

namespace {

void tree_suites(const Graph& tree, VerifyReport& rep, std::size_t inertia_idx, std::size_t props_idx,
                 std::size_t mono_idx, const std::vector<double>& s_values, const VerifyOptions& opt,
                 std::mt19937_64* rng) {
    std::vector<Vertex> roots;
    if (rng) {
        roots.push_back(std::uniform_int_distribution<Vertex>(0, tree.order() - 1)(*rng));
    } else {
        for (Vertex v = 0; v < tree.order(); ++v) roots.push_back(v);
    }
    for (double s : s_values) {
        for (Vertex root : roots) check_inertia_against_oracle(tree, root, s, rep.suites[inertia_idx], opt);
        if (tree.order() < 2) continue;

        // Root independence: every root gives the same counts at the same probe.
        SuiteResult& props = rep.suites[props_idx];
        const double probe = 1.0 + s * s;
        const InertiaCounts ref = count_relative(root_and_order(tree, 0), s, probe, opt.eps_zero);
        for (Vertex v = 1; v < tree.order(); ++v) {
            ++props.checks;
            if (!(count_relative(root_and_order(tree, v), s, probe, opt.eps_zero) == ref))
                props.fail(with_s("root dependence at root " + std::to_string(v) + " " + describe(tree), s));
        }

        const TreePropertyReport r = check_tree_properties(root_and_order(tree, roots[0]), s, opt.eps_zero);
        for (const auto& c : r.checks) {
            if (c.status == CheckStatus::not_applicable) continue;
            ++props.checks;
            if (c.status == CheckStatus::fail)
                props.fail(with_s("item " + c.item + " (" + c.description + ") " + describe(tree), s));
            if (c.status == CheckStatus::flagged)
                props.findings.push_back(with_s("item " + c.item + " flagged for " + describe(tree), s));
        }

        if (s != 0.0) {
            SuiteResult& mono = rep.suites[mono_idx];
            const double top = tree_lambda_max(root_and_order(tree, 0), s, 1e-12, opt.eps_zero);
            for (Vertex v = 0; v < tree.order(); ++v) {
                if (tree.degree(v) != 1) continue;
                ++mono.checks;
                Graph sub = remove_vertex(tree, v);
                const double sub_top = sub.order() == 1
                                           ? 1.0
                                           : largest_eigenvalue(deformed_matrix(sub, s));
                const double oracle_top = largest_eigenvalue(deformed_matrix(tree, s));
                mono.note_deviation(std::abs(top - oracle_top));
                if (!(oracle_top - sub_top > 1e-9))
                    mono.fail(with_s("pendant deletion at " + std::to_string(v) + " did not lower lambda_max " +
                                         describe(tree),
                                     s));
            }
        }
    }
}

std::vector<SuiteResult> named_suites(std::initializer_list<const char*> names) {
    std::vector<SuiteResult> out;
    for (const char* n : names) {
        out.emplace_back();
        out.back().name = n;
    }
    return out;
}

}  // namespace

VerifyReport verify_random(std::size_t trials, std::uint64_t seed, const VerifyOptions& opt) {
    std::mt19937_64 rng(seed);
    VerifyReport rep;
    rep.suites = named_suites({"trace-identity", "tree-inertia-vs-oracle", "tree-properties",
                               "pendant-monotonicity", "bipartite-cospectrality", "radius-bounds",
                               "hjoin-vs-oracle", "path-recurrence"});
    auto& trace = rep.suites[0];
    auto& bip = rep.suites[4];
    auto& bounds = rep.suites[5];
    auto& hj = rep.suites[6];
    auto& path = rep.suites[7];

    std::uniform_int_distribution<std::size_t> tree_n(1, 12);
    std::uniform_int_distribution<std::size_t> part_n(1, 7);
    std::uniform_int_distribution<std::size_t> graph_n(2, 14);
    std::uniform_real_distribution<double> prob(0.1, 0.7);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Graph tree = random_tree(tree_n(rng), rng);
        tree_suites(tree, rep, 1, 2, 3, kInertiaS, opt, &rng);
        for (double s : kInertiaS) check_trace_identity(tree, s, trace);

        const Graph bg = random_bipartite_graph(part_n(rng), part_n(rng), prob(rng), rng);
        for (double s : {0.3, 0.8, 1.4}) {
            check_bipartite_cospectrality(bg, s, bip);
            check_trace_identity(bg, s, trace);
        }

        const Graph cg = random_connected_graph(graph_n(rng), prob(rng), rng);
        for (double s : kGraphS) {
            check_bounds(cg, s, bounds);
            check_trace_identity(cg, s, trace);
        }

        const HJoinSpec spec = random_hjoin_spec(rng);
        for (double s : kHJoinS) check_hjoin_against_oracle(spec, s, hj);
    }

    for (std::size_t n : {5, 20, 100}) {
        for (double s : {-1.5, -0.5, 0.4, 1.0, 2.0}) {
            const double lambda = largest_eigenvalue(deformed_matrix(path_graph(n), s)) + 0.1;
            if (!classify_s(s, lambda).adapted.value_or(false)) continue;
            ++path.checks;
            const PathRecurrence pr = path_recurrence(n, s, lambda);
            bool ok = pr.theta && !pr.singular_pivot;
            if (ok) {
                const auto& u = pr.theta_offset;
                for (std::size_t j = 0; j < u.size(); ++j) ok = ok && u[j] < 0.0;
                for (std::size_t j = 1; j < u.size(); ++j) ok = ok && u[j] > u[j - 1];
                const double prod = std::abs(*pr.theta * *pr.theta_prime - s * s);
                const double sum = std::abs(*pr.theta + *pr.theta_prime - (1.0 + s * s - lambda));
                path.note_deviation(std::max(prod, sum));
                ok = ok && prod <= 1e-12 && sum <= 1e-12;
            }
            if (!ok) path.fail(with_s("path recurrence n=" + std::to_string(n), s));
        }
    }
    return rep;
}

VerifyReport verify_graph(const Graph& g, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suites = named_suites({"trace-identity", "radius-bounds", "bipartite-cospectrality",
                               "edge-monotonicity", "tree-inertia-vs-oracle", "tree-properties",
                               "pendant-monotonicity"});
    for (double s : kGraphS) {
        check_trace_identity(g, s, rep.suites[0]);
        check_bounds(g, s, rep.suites[1]);
        check_bipartite_cospectrality(g, s, rep.suites[2]);
        for (const Edge& e : g.edges()) {
            auto& mono = rep.suites[3];
            ++mono.checks;
            const MonotonicityReport m = verify_edge_monotonicity(g, e, s);
            if (m.violation()) {
                mono.fail(with_s("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                     " deletion raised lambda_max",
                                 s));
            } else if (!m.inequality_holds) {
                std::ostringstream os;
                os.precision(9);
                os << "expected finding: deleting edge " << e.first << "-" << e.second
                   << " raises lambda_max from " << m.radius_full << " to " << m.radius_reduced;
                mono.findings.push_back(with_s(os.str(), s));
            }
        }
    }
    if (is_tree(g)) tree_suites(g, rep, 4, 5, 6, kInertiaS, opt, nullptr);
    return rep;
}

}  // namespace dlap
