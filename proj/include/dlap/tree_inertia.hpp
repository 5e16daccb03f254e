#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dlap/graph.hpp"

namespace dlap {

inline constexpr double kDefaultEpsZero = 1e-12;
inline constexpr double kDefaultBisectionTol = 1e-10;
inline constexpr int kMaxBisectionSteps = 200;

/// Diagonal congruent to M_T(s) + xI, produced by the tree diagonalization.
struct DiagResult {
    std::vector<double> diagonal;  // indexed by bottom-up position
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    std::size_t n_zero = 0;
    std::vector<Edge> removed_edges;  // (child, parent) links cut by the zero-child branch
};

/// Diagonalizes M_T(s) + xI along the bottom-up order of t.
///
/// A vertex entry d_v counts as zero when
/// |d_v| <= eps_zero * max(1, |1 + s^2 (deg(v) - 1)| + |x|).
/// When a vertex has a zero child, the lowest-positioned such child gets 2,
/// the vertex gets -s^2/2 and the link to its own parent is cut. At s = 0
/// all edge weights vanish and every vertex keeps its initial entry.
DiagResult diagonalize(const RootedTree& t, double s, double x, double eps_zero = kDefaultEpsZero);

struct InertiaCounts {
    std::size_t greater = 0;
    std::size_t equal = 0;
    std::size_t less = 0;

    friend bool operator==(const InertiaCounts&, const InertiaCounts&) = default;
};

/// Numbers of eigenvalues of M_T(s) above, at and below lambda.
InertiaCounts count_relative(const RootedTree& t, double s, double lambda,
                             double eps_zero = kDefaultEpsZero);

/// Number of eigenvalues in the half-open interval (a, b]. Throws
/// ParameterError if a > b.
std::size_t count_in_interval(const RootedTree& t, double s, double a, double b,
                              double eps_zero = kDefaultEpsZero);

/// Upper bracket for the spectrum: 1 + s^2(D-1) + |s| D + 1.
double tree_upper_bracket(const Graph& g, double s);

/// lambda_max(M_T(s)) to within tol by bisection on the inertia counts.
double tree_lambda_max(const RootedTree& t, double s, double tol = kDefaultBisectionTol,
                       double eps_zero = kDefaultEpsZero);

/// k-th smallest eigenvalue (1-based) to within tol.
double kth_eigenvalue(const RootedTree& t, double s, std::size_t k,
                      double tol = kDefaultBisectionTol, double eps_zero = kDefaultEpsZero);

/// Output of the diagonalization along a path for x = -lambda.
///
/// z[0] = 1 - lambda, z[j] = phi(z[j-1]) with phi(t) = 1 + s^2 - lambda - s^2/t
/// for interior vertices, and the last entry 1 - lambda - s^2/z[n-2].
/// theta <= theta_prime are the fixed points of phi when the discriminant
/// (1 + s^2 - lambda)^2 - 4 s^2 is positive.
struct PathRecurrence {
    double s = 0.0;
    double lambda = 0.0;
    std::vector<double> z;
    double discriminant = 0.0;
    std::optional<double> theta;
    std::optional<double> theta_prime;
    /// z[j] - theta via u_j = s^2 u_{j-1} / (theta (theta + u_{j-1})), which
    /// keeps full relative precision after z has converged to theta in
    /// floating point. Covers the entries z[0..n-2]; empty without theta.
    std::vector<double> theta_offset;
    /// Index of a pivot with |z| <= 1e-13; z stops there.
    std::optional<std::size_t> singular_pivot;
};

inline constexpr double kPathPivotTolerance = 1e-13;

PathRecurrence path_recurrence(std::size_t n, double s, double lambda);

enum class CheckStatus { pass, fail, not_applicable, flagged };

std::string to_string(CheckStatus status);

struct PropertyCheck {
    std::string item;  // "1", "2", ..., "6a", "6b", "7"
    std::string description;
    CheckStatus status = CheckStatus::not_applicable;
    std::vector<std::pair<std::string, double>> values;
};

struct TreePropertyReport {
    double s = 0.0;
    double lambda_max = 0.0;
    std::vector<PropertyCheck> checks;

    bool any_failure() const;
    const PropertyCheck& item(const std::string& id) const;
};

/// Structural facts used by the checklist.
bool has_pendant_p2(const Graph& tree);
/// Leg count k when the tree is starlike (single vertex of degree >= 3).
std::optional<std::size_t> starlike_legs(const Graph& tree);

/// Evaluates the checklist of spectral facts for trees:
/// (1) 0 is an eigenvalue iff |s| = 1; (2) positive definite iff |s| < 1;
/// (3) lambda_max > 1; (4) pendant P2 => lambda_max > 1 + s^2;
/// (5) deleting any pendant vertex strictly lowers lambda_max;
/// (6a) D >= 4 => lambda_max > 1 + 2|s| + s^2;
/// (6b) D >= 3 => lambda_max > 1 + sqrt(3)|s| + s^2 (flagged, not failed);
/// (7) starlike with k legs => lambda_max <= 1 + s^2(D-1) + |s| k/sqrt(k-1).
/// Items 3 to 6 are not applicable at s = 0, where M = I.
/// Throws StructureError for non-trees and ParameterError for n < 2.
TreePropertyReport check_tree_properties(const RootedTree& t, double s,
                                         double eps_zero = kDefaultEpsZero);

}  // namespace dlap
