#include "dlap/deformed.hpp"

#include <cmath>

#include "dlap/error.hpp"

namespace dlap {

namespace {

void require_finite(double s) {
    if (!std::isfinite(s)) throw ParameterError("s must be finite");
}

}  // namespace

DeformedMatrix build_deformed(const Graph& g, double s) {
    require_finite(s);
    SymMatrix m(g.order());
    const double s2 = s * s;
    for (Vertex v = 0; v < g.order(); ++v)
        m.set(v, v, 1.0 + s2 * (static_cast<double>(g.degree(v)) - 1.0));
    for (const auto& [u, v] : g.edges()) m.set(u, v, -s);
    return {g, s, std::move(m)};
}

SymMatrix deformed_matrix(const Graph& g, double s) { return build_deformed(g, s).matrix; }

double deformed_trace(const Graph& g, double s) {
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.size());
    return n * (1.0 - s * s) + 2.0 * m * s * s;
}

double average_eigenvalue(const Graph& g, double s) {
    if (g.order() == 0) throw ParameterError("average eigenvalue of the empty graph");
    const double dbar = 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
    return 1.0 - s * s + dbar * s * s;
}

bool monotone_regime(double s) { return s <= 0.0 || s >= 1.0; }

double star_lambda_max(std::size_t leaves, double s) {
    const double k = static_cast<double>(leaves);
    const double a = s * s * (k - 1.0);
    return 0.5 * (a + 2.0 + std::abs(s) * std::sqrt(a * (k - 1.0) + 4.0 * k));
}

double star_lambda_min(std::size_t leaves, double s) {
    const double k = static_cast<double>(leaves);
    const double a = s * s * (k - 1.0);
    return 0.5 * (a + 2.0 - std::abs(s) * std::sqrt(a * (k - 1.0) + 4.0 * k));
}

std::optional<double> lower_bound_radius(const Graph& g, double s) {
    require_finite(s);
    if (g.order() < 2) throw ParameterError("lower bound needs at least 2 vertices");
    if (!is_connected(g)) throw StructureError("lower bound needs a connected graph");
    if (!monotone_regime(s)) return std::nullopt;
    return star_lambda_max(g.max_degree(), s);
}

double upper_bound_radius(const Graph& g, double s) {
    require_finite(s);
    const double delta = static_cast<double>(g.max_degree());
    return 1.0 + s * s * (delta - 1.0) + std::abs(s) * adjacency_spectral_radius(g);
}

SClassification classify_s(double s, std::optional<double> lambda) {
    require_finite(s);
    SClassification c;
    const double a = std::abs(s);
    c.sub_laplacian = a < 1.0;
    c.super_laplacian = a > 1.0;
    c.boundary = a == 1.0;
    if (lambda) {
        if (!(*lambda > 1.0)) throw ParameterError("adaptedness needs lambda > 1");
        c.adapted = *lambda > (1.0 + a) * (1.0 + a);
    }
    return c;
}

EdgePerturbation edge_perturbation(double s) {
    require_finite(s);
    return {s, s * s - s, s * s + s};
}

std::optional<SymMatrix> bipartite_conjugation(const Graph& g, double s) {
    require_finite(s);
    auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    std::vector<double> u(g.order(), 1.0);
    for (Vertex v : parts->part2) u[v] = -1.0;
    return SymMatrix::diagonal(u);
}

MonotonicityReport verify_edge_monotonicity(const Graph& g, Edge edge, double s) {
    Graph reduced = remove_edge(g, edge.first, edge.second);
    MonotonicityReport r;
    r.edge = std::minmax(edge.first, edge.second);
    r.s = s;
    r.radius_full = largest_eigenvalue(deformed_matrix(g, s));
    r.radius_reduced = largest_eigenvalue(deformed_matrix(reduced, s));
    r.theorem_applies = monotone_regime(s);
    r.inequality_holds = r.radius_full >= r.radius_reduced - kMonotonicitySlack;
    return r;
}

}  // namespace dlap
