#include "dlap/dense_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dlap/error.hpp"

namespace dlap {

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::max_abs_entry() const {
    double best = 0.0;
    for (double v : a_) best = std::max(best, std::abs(v));
    return best;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

SymMatrix SymMatrix::permuted(const std::vector<std::size_t>& p) const {
    if (p.size() != n_) throw ParameterError("permutation length mismatch");
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) out.set(i, j, (*this)(p[i], p[j]));
    return out;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    if (a.n_ != b.n_) throw ParameterError("dimension mismatch");
    SymMatrix out(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) out.a_[k] = a.a_[k] - b.a_[k];
    return out;
}

SymMatrix diagonal_congruence(const std::vector<double>& u, const SymMatrix& m) {
    if (u.size() != m.dim()) throw ParameterError("dimension mismatch");
    SymMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j) out.set(i, j, u[i] * m(i, j) * u[j]);
    return out;
}

Spectrum::Spectrum(std::vector<double> values, double group_tol)
    : values_(std::move(values)), group_tol_(group_tol) {
    std::sort(values_.begin(), values_.end());
}

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

std::vector<std::pair<double, std::size_t>> Spectrum::grouped() const {
    std::vector<std::pair<double, std::size_t>> out;
    for (double v : values_) {
        if (!out.empty() && v - out.back().first <= group_tol_)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTolerance = 1e-13;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

}  // namespace

Spectrum symmetric_spectrum(const SymMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) throw ParameterError("empty matrix");
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double v = m(i, j);
            if (!std::isfinite(v)) throw NumericError("non-finite matrix entry");
            a[i * n + j] = v;
        }

    const double stop = kOffTolerance * (1.0 + m.frobenius_norm());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) < stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                // Rotation angle chosen so the (p,q) entry vanishes; the
                // smaller root of t^2 + 2 theta t - 1 keeps |angle| <= pi/4.
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    return Spectrum(std::move(eig));
}

double largest_eigenvalue(const SymMatrix& m) { return symmetric_spectrum(m).max(); }

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.order());
    for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
    return a;
}

double adjacency_spectral_radius(const Graph& g) {
    if (g.order() == 0) return 0.0;
    return largest_eigenvalue(adjacency_matrix(g));
}

double spectrum_deviation(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    return worst;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    return spectrum_deviation(a, b) <= tol;
}

}  // namespace dlap
