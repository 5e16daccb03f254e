#include "dlap/tree_inertia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dlap/error.hpp"

namespace dlap {

namespace {

double zero_threshold(const Graph& g, Vertex v, double s, double x, double eps_zero) {
    const double m_vv = 1.0 + s * s * (static_cast<double>(g.degree(v)) - 1.0);
    return eps_zero * std::max(1.0, std::abs(m_vv) + std::abs(x));
}

}  // namespace

DiagResult diagonalize(const RootedTree& t, double s, double x, double eps_zero) {
    const Graph& g = t.graph();
    const std::size_t n = t.order();
    const auto& seq = t.sequence();
    const double w2 = s * s;  // squared edge weight (-s)^2

    DiagResult out;
    out.diagonal.resize(n);
    // slope[k] = d(diagonal[k])/dx. A pivot is compared against the zero
    // threshold scaled by its slope, so a pivot that amplifies rounding in x
    // by a factor of 1e5 gets a proportionally wider window.
    std::vector<double> slope(n, 1.0);
    std::vector<double> eps(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vertex v = seq[k];
        out.diagonal[k] = 1.0 + w2 * (static_cast<double>(g.degree(v)) - 1.0) + x;
        eps[k] = zero_threshold(g, v, s, x, eps_zero);
    }

    std::vector<bool> cut(n, false);  // by position: link to parent removed
    auto is_zero = [&](std::size_t pos) {
        return std::abs(out.diagonal[pos]) <= eps[pos] * std::abs(slope[pos]);
    };

    if (s != 0.0) {
        for (std::size_t k = 0; k < n; ++k) {
            Vertex v = seq[k];
            // Children are already sorted by bottom-up position.
            std::vector<std::size_t> kids;
            for (Vertex c : t.children(v)) {
                std::size_t pc = t.position(c);
                if (!cut[pc]) kids.push_back(pc);
            }
            if (kids.empty()) continue;

            auto zero_kid = std::find_if(kids.begin(), kids.end(), is_zero);
            if (zero_kid == kids.end()) {
                for (std::size_t pc : kids) {
                    const double dc = out.diagonal[pc];
                    out.diagonal[k] -= w2 / dc;
                    slope[k] += w2 * slope[pc] / (dc * dc);
                }
            } else {
                out.diagonal[k] = -w2 / 2.0;
                out.diagonal[*zero_kid] = 2.0;
                slope[k] = 1.0;
                slope[*zero_kid] = 1.0;
                if (auto p = t.parent(v)) {
                    cut[k] = true;
                    out.removed_edges.emplace_back(v, *p);
                }
            }
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(k))
            ++out.n_zero;
        else if (out.diagonal[k] > 0.0)
            ++out.n_pos;
        else
            ++out.n_neg;
    }
    return out;
}

InertiaCounts count_relative(const RootedTree& t, double s, double lambda, double eps_zero) {
    DiagResult d = diagonalize(t, s, -lambda, eps_zero);
    return {d.n_pos, d.n_zero, d.n_neg};
}

std::size_t count_in_interval(const RootedTree& t, double s, double a, double b,
                              double eps_zero) {
    if (a > b) throw ParameterError("interval lower end exceeds upper end");
    const std::size_t above_a = count_relative(t, s, a, eps_zero).greater;
    const std::size_t above_b = count_relative(t, s, b, eps_zero).greater;
    return above_a - above_b;
}

double tree_upper_bracket(const Graph& g, double s) {
    const double delta = static_cast<double>(g.max_degree());
    return 1.0 + s * s * (delta - 1.0) + std::abs(s) * delta + 1.0;
}

namespace {

double gershgorin_lower(const Graph& g, double s) {
    double lo = 1.0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const double d = static_cast<double>(g.degree(v));
        lo = std::min(lo, 1.0 + s * s * (d - 1.0) - std::abs(s) * d);
    }
    return lo;
}

void require_tol(double tol) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
}

}  // namespace

double tree_lambda_max(const RootedTree& t, double s, double tol, double eps_zero) {
    require_tol(tol);
    if (t.order() == 1) return 1.0 - s * s;
    double lo = 1.0;
    if (count_relative(t, s, lo, eps_zero).greater == 0) lo = gershgorin_lower(t.graph(), s) - 1.0;
    double hi = tree_upper_bracket(t.graph(), s);
    for (int step = 0; step < kMaxBisectionSteps && hi - lo > tol; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (count_relative(t, s, mid, eps_zero).greater >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double kth_eigenvalue(const RootedTree& t, double s, std::size_t k, double tol, double eps_zero) {
    require_tol(tol);
    const std::size_t n = t.order();
    if (k < 1 || k > n)
        throw ParameterError("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    double lo = gershgorin_lower(t.graph(), s) - 1.0;
    double hi = tree_upper_bracket(t.graph(), s);
    for (int step = 0; step < kMaxBisectionSteps && hi - lo > tol; ++step) {
        const double mid = 0.5 * (lo + hi);
        const std::size_t at_or_below = n - count_relative(t, s, mid, eps_zero).greater;
        if (at_or_below >= k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

PathRecurrence path_recurrence(std::size_t n, double s, double lambda) {
    if (n < 2) throw ParameterError("path recurrence needs n >= 2");
    PathRecurrence r;
    r.s = s;
    r.lambda = lambda;
    const double s2 = s * s;
    const double c = 1.0 + s2 - lambda;

    r.discriminant = c * c - 4.0 * s2;
    if (r.discriminant > 0.0) {
        const double root = std::sqrt(r.discriminant);
        r.theta = 0.5 * (c - root);
        r.theta_prime = 0.5 * (c + root);
    }

    r.z.reserve(n);
    r.z.push_back(1.0 - lambda);
    for (std::size_t j = 1; j < n; ++j) {
        const double prev = r.z.back();
        if (std::abs(prev) <= kPathPivotTolerance) {
            r.singular_pivot = j - 1;
            break;
        }
        const double base = (j + 1 == n) ? 1.0 - lambda : c;
        r.z.push_back(base - s2 / prev);
    }
    if (r.theta && !r.singular_pivot) {
        const double th = *r.theta;
        r.theta_offset.push_back(r.z[0] - th);
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double u = r.theta_offset.back();
            r.theta_offset.push_back(s2 * u / (th * (th + u)));
        }
    }
    return r;
}

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "n/a";
        case CheckStatus::flagged: return "flagged";
    }
    return "?";
}

bool TreePropertyReport::any_failure() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.status == CheckStatus::fail; });
}

const PropertyCheck& TreePropertyReport::item(const std::string& id) const {
    for (const auto& c : checks)
        if (c.item == id) return c;
    throw NotFoundError("no property item " + id);
}

bool has_pendant_p2(const Graph& tree) {
    for (Vertex v = 0; v < tree.order(); ++v)
        if (tree.degree(v) == 1 && tree.degree(tree.neighbors(v)[0]) == 2) return true;
    return false;
}

std::optional<std::size_t> starlike_legs(const Graph& tree) {
    std::optional<std::size_t> legs;
    for (Vertex v = 0; v < tree.order(); ++v) {
        if (tree.degree(v) < 3) continue;
        if (legs) return std::nullopt;
        legs = tree.degree(v);
    }
    return legs;
}

namespace {

constexpr double kRadiusTol = 1e-12;
constexpr double kBoundSlack = 1e-9;

CheckStatus verdict(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

}  // namespace

TreePropertyReport check_tree_properties(const RootedTree& t, double s, double eps_zero) {
    const Graph& g = t.graph();
    const std::size_t n = g.order();
    if (n < 2) throw ParameterError("tree properties need at least 2 vertices");

    TreePropertyReport rep;
    rep.s = s;
    rep.lambda_max = tree_lambda_max(t, s, kRadiusTol, eps_zero);
    const double abs_s = std::abs(s);
    const double s2 = s * s;
    const bool unit = std::abs(abs_s - 1.0) <= 1e-12;
    const bool degenerate = s == 0.0;
    const double delta = static_cast<double>(g.max_degree());
    auto exceeds = [&](double c) { return count_relative(t, s, c, eps_zero).greater >= 1; };

    const InertiaCounts at_zero = count_relative(t, s, 0.0, eps_zero);
    rep.checks.push_back({"1", "0 is an eigenvalue iff |s| = 1",
                          verdict((at_zero.equal > 0) == unit),
                          {{"multiplicity_of_0", static_cast<double>(at_zero.equal)}}});
    rep.checks.push_back({"2", "positive definite iff |s| < 1",
                          verdict((at_zero.greater == n) == (abs_s < 1.0)),
                          {{"positive_eigenvalues", static_cast<double>(at_zero.greater)}}});

    auto threshold_check = [&](std::string id, std::string what, bool applicable, double c,
                               CheckStatus on_failure) {
        PropertyCheck pc{std::move(id), std::move(what), CheckStatus::not_applicable,
                         {{"lambda_max", rep.lambda_max}, {"threshold", c}}};
        if (applicable && !degenerate) pc.status = exceeds(c) ? CheckStatus::pass : on_failure;
        rep.checks.push_back(std::move(pc));
    };

    threshold_check("3", "lambda_max > 1", true, 1.0, CheckStatus::fail);
    threshold_check("4", "pendant P2 => lambda_max > 1 + s^2", has_pendant_p2(g), 1.0 + s2,
                    CheckStatus::fail);

    {
        PropertyCheck pc{"5", "deleting a pendant vertex strictly lowers lambda_max",
                         CheckStatus::not_applicable, {}};
        if (!degenerate) {
            bool ok = true;
            double worst_gap = std::numeric_limits<double>::infinity();
            for (Vertex v = 0; v < n; ++v) {
                if (g.degree(v) != 1) continue;
                Graph sub = remove_vertex(g, v);
                const double sub_max =
                    tree_lambda_max(root_and_order(sub, 0), s, kRadiusTol, eps_zero);
                worst_gap = std::min(worst_gap, rep.lambda_max - sub_max);
                if (!exceeds(sub_max + 10.0 * kRadiusTol)) ok = false;
            }
            pc.status = verdict(ok);
            pc.values = {{"lambda_max", rep.lambda_max}, {"smallest_gap", worst_gap}};
        }
        rep.checks.push_back(std::move(pc));
    }

    threshold_check("6a", "max degree >= 4 => lambda_max > 1 + 2|s| + s^2", delta >= 4.0,
                    1.0 + 2.0 * abs_s + s2, CheckStatus::fail);
    threshold_check("6b", "max degree >= 3 => lambda_max > 1 + sqrt(3)|s| + s^2", delta >= 3.0,
                    1.0 + std::sqrt(3.0) * abs_s + s2, CheckStatus::flagged);

    {
        PropertyCheck pc{"7", "starlike with k legs => lambda_max <= 1 + s^2(D-1) + |s|k/sqrt(k-1)",
                         CheckStatus::not_applicable, {}};
        if (auto k = starlike_legs(g)) {
            const double kk = static_cast<double>(*k);
            const double bound = 1.0 + s2 * (delta - 1.0) + abs_s * kk / std::sqrt(kk - 1.0);
            pc.status = verdict(rep.lambda_max <= bound + kBoundSlack);
            pc.values = {{"lambda_max", rep.lambda_max}, {"bound", bound}, {"legs", kk}};
        }
        rep.checks.push_back(std::move(pc));
    }
    return rep;
}

}  // namespace dlap
