#pragma once

#include <optional>
#include <vector>

#include "dlap/dense_eigen.hpp"
#include "dlap/graph.hpp"

namespace dlap {

/// M_G(s) = I - sA + s^2 (D - I) together with the graph and s it came from.
///
/// Diagonal entry i is 1 + s^2 (deg(i) - 1); off-diagonal (i,j) is -s on
/// edges and 0 elsewhere. s = 1 gives the Laplacian D - A, s = -1 the
/// signless Laplacian D + A and s = 0 the identity.
struct DeformedMatrix {
    Graph graph;
    double s = 0.0;
    SymMatrix matrix;
};

DeformedMatrix build_deformed(const Graph& g, double s);

/// Shorthand for build_deformed(g, s).matrix.
SymMatrix deformed_matrix(const Graph& g, double s);

/// trace(M_G(s)) = n(1 - s^2) + 2 m s^2.
double deformed_trace(const Graph& g, double s);

/// Mean eigenvalue 1 - s^2 + dbar s^2 with dbar = 2m/n.
double average_eigenvalue(const Graph& g, double s);

/// True when s lies in (-inf, 0] U [1, inf), where edge deletion cannot
/// increase the largest eigenvalue and the star lower bound holds.
bool monotone_regime(double s);

/// Star-based lower bound on lambda_max(M_G(s)):
/// (s^2(D-1) + 2 + |s| sqrt(s^2 (D-1)^2 + 4D)) / 2 with D the max degree.
/// Empty outside the monotone regime. Requires a connected graph with n >= 2.
std::optional<double> lower_bound_radius(const Graph& g, double s);

/// 1 + s^2(D - 1) + |s| rho(A). Valid for all s.
double upper_bound_radius(const Graph& g, double s);

/// lambda_max of M_{K_{1,n}}(s) (n leaves).
double star_lambda_max(std::size_t leaves, double s);
/// lambda_min of M_{K_{1,n}}(s) (n leaves).
double star_lambda_min(std::size_t leaves, double s);

struct SClassification {
    bool sub_laplacian = false;    // |s| < 1
    bool super_laplacian = false;  // |s| > 1
    bool boundary = false;         // |s| == 1
    std::optional<bool> adapted;   // lambda > (1 + |s|)^2, when lambda given
};

/// Throws ParameterError when a lambda <= 1 is supplied.
SClassification classify_s(double s, std::optional<double> lambda = std::nullopt);

/// Nonzero eigenvalues of H(s) = M_G(s) - M_{G-e}(s) for any single edge e.
struct EdgePerturbation {
    double s = 0.0;
    double eigenvalue_low = 0.0;   // s^2 - s, eigenvector e_u + e_v
    double eigenvalue_high = 0.0;  // s^2 + s, eigenvector e_u - e_v

    bool positive_semidefinite() const { return eigenvalue_low >= 0.0 && eigenvalue_high >= 0.0; }
};

EdgePerturbation edge_perturbation(double s);

/// The +-1 diagonal U (as a matrix) from bipartition(g) with
/// U M_G(s) U = M_G(-s). Empty if g is not bipartite.
std::optional<SymMatrix> bipartite_conjugation(const Graph& g, double s);

struct MonotonicityReport {
    Edge edge;
    double s = 0.0;
    double radius_full = 0.0;     // lambda_max(M_G(s))
    double radius_reduced = 0.0;  // lambda_max(M_{G-e}(s))
    bool theorem_applies = false;
    bool inequality_holds = false;  // radius_full >= radius_reduced - slack

    /// The inequality was guaranteed but failed. Only this is a defect;
    /// a failure with theorem_applies == false is an expected finding.
    bool violation() const { return theorem_applies && !inequality_holds; }
};

inline constexpr double kMonotonicitySlack = 1e-9;

/// Throws NotFoundError if the edge is absent.
MonotonicityReport verify_edge_monotonicity(const Graph& g, Edge edge, double s);

}  // namespace dlap
