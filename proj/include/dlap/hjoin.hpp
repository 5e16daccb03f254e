#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "dlap/dense_eigen.hpp"
#include "dlap/graph.hpp"

namespace dlap {

/// One regular building block of an H-join: either a graph (named family or
/// explicit edges) or just its adjacency spectrum.
class ComponentSpec {
public:
    static ComponentSpec from_family(const FamilySpec& family);
    static ComponentSpec from_graph(Graph g);
    /// Adjacency spectrum only; the order is its length and the degree its
    /// largest value. Such a component cannot be assembled into a graph.
    static ComponentSpec from_spectrum(std::vector<double> adjacency_spectrum);

    std::size_t order() const noexcept { return n_; }
    /// Degree of vertex 0 for graph components (regularity is checked by
    /// validate_spec), largest eigenvalue rounded for spectrum components.
    std::size_t degree() const noexcept { return d_; }
    const std::optional<Graph>& graph() const noexcept { return graph_; }

    /// Adjacency eigenvalues, ascending. Closed forms for cycles, complete
    /// graphs, K_1, K_2 and edgeless graphs; dense solver otherwise.
    std::vector<double> adjacency_spectrum() const;

    std::string describe() const;

private:
    std::optional<Graph> graph_;
    std::optional<Family> family_;
    std::vector<double> given_spectrum_;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
};

struct HJoinSpec {
    Graph h;  // template graph; vertex i carries components[i]
    std::vector<ComponentSpec> components;
};

struct HJoinValidation {
    std::size_t r = 0;
    std::vector<std::size_t> orders;           // n_i
    std::vector<std::size_t> degrees;          // d_i
    std::vector<std::size_t> neighbor_orders;  // N_i, total order of H-neighbors
};

/// Checks component count, connectivity of H and regularity of every
/// component. Throws ParameterError, StructureError or RegularityError.
HJoinValidation validate_spec(const HJoinSpec& spec);

/// Graph with component blocks laid out in order, plus all links between
/// blocks whose H-vertices are adjacent. Throws PreconditionError if any
/// component is spectrum-only.
Graph assemble_graph(const HJoinSpec& spec);

/// Row sum of the deformed block for component i (0-based):
/// s^2 (d_i + N_i - 1) - s d_i + 1.
double component_lambda1(const HJoinSpec& spec, std::size_t i, double s);

/// {s^2 (d_i + N_i - 1) - s mu + 1 : mu adjacency eigenvalue of G_i}.
Spectrum component_block_spectrum(const HJoinSpec& spec, std::size_t i, double s);

/// r x r matrix with lambda_1 of each block on the diagonal and
/// -s sqrt(n_i n_j) on H-edges.
SymMatrix quotient_matrix(const HJoinSpec& spec, double s);

/// Block spectra with one copy of each lambda_1 removed, plus the quotient
/// spectrum. Size is the total order.
Spectrum hjoin_spectrum(const HJoinSpec& spec, double s);

inline constexpr double kLambda1MatchTolerance = 1e-8;

/// Removes the element closest to `target`; throws ConsistencyError if none
/// lies within kLambda1MatchTolerance.
void remove_closest(std::vector<double>& values, double target);

/// det(lambda I - F) for the symmetric tridiagonal F with the given diagonal
/// and off-diagonal, by the three-term recurrence.
double tridiagonal_charpoly(const std::vector<double>& diag, const std::vector<double>& offdiag,
                            double lambda);

/// H = P3 (edges 0-1, 1-2) with d_1 = d_3. Throws PreconditionError otherwise.
Spectrum closed_form_p3_symmetric(const HJoinSpec& spec, double s);

/// H = P4 (edges 0-1, 1-2, 2-3) with components (G1, G2, G2, G1).
Spectrum closed_form_p4_palindrome(const HJoinSpec& spec, double s);

/// H = C4 (edges 0-1, 1-2, 2-3, 3-0) with components (G1, G2, G2, G1).
Spectrum closed_form_c4_palindrome(const HJoinSpec& spec, double s);

/// H-join JSON: {"h": {"n": r, "edges": [[i,j],...]}, "components": [...]}
/// where each component is {"family": "cycle"|"path"|"complete"|"star", "n": k},
/// {"family": "starlike", "legs": [...]}, {"family": "edges", "n": k,
/// "edges": [...]} or {"spectrum": [...]}.
HJoinSpec read_hjoin_json(std::istream& in);
HJoinSpec read_hjoin_file(const std::string& path);

}  // namespace dlap
