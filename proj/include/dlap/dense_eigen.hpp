#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dlap/graph.hpp"

namespace dlap {

/// Dense real symmetric matrix. Writes through set() mirror across the
/// diagonal, so symmetry holds exactly.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

    double trace() const;
    double max_abs_entry() const;
    double frobenius_norm() const;

    /// Entries with rows and columns permuted: result(i,j) = this(p[i], p[j]).
    SymMatrix permuted(const std::vector<std::size_t>& p) const;

    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Product of three matrices U*M*U for a diagonal U given by its entries.
SymMatrix diagonal_congruence(const std::vector<double>& u, const SymMatrix& m);

inline constexpr double kDefaultGroupTolerance = 1e-7;

/// Multiset of real eigenvalues, kept sorted ascending.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values, double group_tol = kDefaultGroupTolerance);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double group_tolerance() const noexcept { return group_tol_; }
    double min() const { return values_.front(); }
    double max() const { return values_.back(); }
    double sum() const;

    /// Distinct values with multiplicities; consecutive values within the
    /// group tolerance of the group's first member merge. Reporting only.
    std::vector<std::pair<double, std::size_t>> grouped() const;

private:
    std::vector<double> values_;
    double group_tol_ = kDefaultGroupTolerance;
};

/// All eigenvalues by cyclic Jacobi rotations. Throws NumericError on
/// non-finite entries and ParameterError on an empty matrix.
Spectrum symmetric_spectrum(const SymMatrix& m);

double largest_eigenvalue(const SymMatrix& m);

SymMatrix adjacency_matrix(const Graph& g);

/// Largest adjacency eigenvalue; 0 for the empty graph.
double adjacency_spectral_radius(const Graph& g);

/// Same length and sorted elementwise distance at most tol.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

/// Largest elementwise deviation of two sorted spectra of equal length;
/// +infinity on a length mismatch.
double spectrum_deviation(const Spectrum& a, const Spectrum& b);

}  // namespace dlap
