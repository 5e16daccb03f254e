#include "dlap/hjoin.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "dlap/deformed.hpp"
#include "dlap/error.hpp"

namespace dlap {

ComponentSpec ComponentSpec::from_family(const FamilySpec& family) {
    ComponentSpec c = from_graph(build_family(family));
    if (family.family != Family::edges) c.family_ = family.family;
    return c;
}

ComponentSpec ComponentSpec::from_graph(Graph g) {
    ComponentSpec c;
    c.n_ = g.order();
    c.d_ = g.order() ? g.degree(0) : 0;
    c.graph_ = std::move(g);
    return c;
}

ComponentSpec ComponentSpec::from_spectrum(std::vector<double> adjacency_spectrum) {
    if (adjacency_spectrum.empty()) throw ParameterError("empty component spectrum");
    ComponentSpec c;
    std::sort(adjacency_spectrum.begin(), adjacency_spectrum.end());
    c.n_ = adjacency_spectrum.size();
    c.d_ = static_cast<std::size_t>(std::max(0.0, std::round(adjacency_spectrum.back())));
    c.given_spectrum_ = std::move(adjacency_spectrum);
    return c;
}

std::vector<double> ComponentSpec::adjacency_spectrum() const {
    if (!graph_) return given_spectrum_;
    const Graph& g = *graph_;
    const std::size_t n = g.order();
    std::vector<double> out;
    if (g.size() == 0) {
        out.assign(n, 0.0);
    } else if (g.size() == 1 && n == 2) {
        out = {-1.0, 1.0};
    } else if (family_ == Family::cycle) {
        for (std::size_t k = 0; k < n; ++k)
            out.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                         static_cast<double>(n)));
    } else if (family_ == Family::complete) {
        out.assign(n - 1, -1.0);
        out.push_back(static_cast<double>(n - 1));
    } else {
        out = symmetric_spectrum(adjacency_matrix(g)).values();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ComponentSpec::describe() const {
    std::string what = family_ ? family_name(*family_) : (graph_ ? "edges" : "spectrum");
    return what + "(n=" + std::to_string(n_) + ", d=" + std::to_string(d_) + ")";
}

HJoinValidation validate_spec(const HJoinSpec& spec) {
    const std::size_t r = spec.h.order();
    if (spec.components.size() != r)
        throw ParameterError("template has " + std::to_string(r) + " vertices but " +
                             std::to_string(spec.components.size()) + " components were given");
    if (r == 0) throw StructureError("template graph is empty");
    if (!is_connected(spec.h)) throw StructureError("template graph H must be connected");

    HJoinValidation v;
    v.r = r;
    for (std::size_t i = 0; i < r; ++i) {
        const ComponentSpec& c = spec.components[i];
        if (c.order() == 0) throw RegularityError(i, "component has no vertices");
        if (const auto& g = c.graph()) {
            for (Vertex u = 0; u < g->order(); ++u)
                if (g->degree(u) != c.degree())
                    throw RegularityError(i, c.describe() + " is not regular (vertex " +
                                                 std::to_string(u) + " has degree " +
                                                 std::to_string(g->degree(u)) + ")");
        } else {
            const double top = c.adjacency_spectrum().back();
            if (std::abs(top - static_cast<double>(c.degree())) > 1e-9)
                throw RegularityError(i, "largest adjacency eigenvalue is not an integer degree");
        }
        v.orders.push_back(c.order());
        v.degrees.push_back(c.degree());
    }
    v.neighbor_orders.assign(r, 0);
    for (const auto& [a, b] : spec.h.edges()) {
        v.neighbor_orders[a] += v.orders[b];
        v.neighbor_orders[b] += v.orders[a];
    }
    return v;
}

Graph assemble_graph(const HJoinSpec& spec) {
    HJoinValidation v = validate_spec(spec);
    std::vector<std::size_t> offset(v.r + 1, 0);
    for (std::size_t i = 0; i < v.r; ++i) offset[i + 1] = offset[i] + v.orders[i];

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < v.r; ++i) {
        const auto& g = spec.components[i].graph();
        if (!g) throw PreconditionError("component " + std::to_string(i) +
                                        " is given only by its spectrum and cannot be assembled");
        for (const auto& [a, b] : g->edges()) edges.emplace_back(offset[i] + a, offset[i] + b);
    }
    for (const auto& [i, j] : spec.h.edges())
        for (std::size_t a = offset[i]; a < offset[i + 1]; ++a)
            for (std::size_t b = offset[j]; b < offset[j + 1]; ++b) edges.emplace_back(a, b);
    return Graph(offset[v.r], std::move(edges));
}

namespace {

double lambda1(const HJoinValidation& v, std::size_t i, double s) {
    const double d = static_cast<double>(v.degrees[i]);
    const double big_n = static_cast<double>(v.neighbor_orders[i]);
    return s * s * (d + big_n - 1.0) - s * d + 1.0;
}

std::vector<double> block_values(const HJoinSpec& spec, const HJoinValidation& v,
                                 std::size_t i, double s) {
    const double d = static_cast<double>(v.degrees[i]);
    const double big_n = static_cast<double>(v.neighbor_orders[i]);
    const double shift = s * s * (d + big_n - 1.0) + 1.0;
    std::vector<double> out;
    for (double mu : spec.components[i].adjacency_spectrum()) out.push_back(shift - s * mu);
    return out;
}

void check_index(const HJoinValidation& v, std::size_t i) {
    if (i >= v.r)
        throw ParameterError("component index " + std::to_string(i) + " out of range 0.." +
                             std::to_string(v.r - 1));
}

SymMatrix quotient(const HJoinSpec& spec, const HJoinValidation& v, double s) {
    SymMatrix f(v.r);
    for (std::size_t i = 0; i < v.r; ++i) f.set(i, i, lambda1(v, i, s));
    for (const auto& [i, j] : spec.h.edges())
        f.set(i, j, -s * std::sqrt(static_cast<double>(v.orders[i] * v.orders[j])));
    return f;
}

}  // namespace

double component_lambda1(const HJoinSpec& spec, std::size_t i, double s) {
    HJoinValidation v = validate_spec(spec);
    check_index(v, i);
    return lambda1(v, i, s);
}

Spectrum component_block_spectrum(const HJoinSpec& spec, std::size_t i, double s) {
    HJoinValidation v = validate_spec(spec);
    check_index(v, i);
    return Spectrum(block_values(spec, v, i, s));
}

SymMatrix quotient_matrix(const HJoinSpec& spec, double s) {
    return quotient(spec, validate_spec(spec), s);
}

void remove_closest(std::vector<double>& values, double target) {
    auto best = values.end();
    double gap = kLambda1MatchTolerance;
    for (auto it = values.begin(); it != values.end(); ++it) {
        const double d = std::abs(*it - target);
        if (d <= gap) {
            gap = d;
            best = it;
        }
    }
    if (best == values.end())
        throw ConsistencyError("no eigenvalue within " + std::to_string(kLambda1MatchTolerance) +
                               " of " + std::to_string(target));
    values.erase(best);
}

Spectrum hjoin_spectrum(const HJoinSpec& spec, double s) {
    HJoinValidation v = validate_spec(spec);
    std::vector<double> all;
    for (std::size_t i = 0; i < v.r; ++i) {
        std::vector<double> block = block_values(spec, v, i, s);
        remove_closest(block, lambda1(v, i, s));
        all.insert(all.end(), block.begin(), block.end());
    }
    const Spectrum q_spec = symmetric_spectrum(quotient(spec, v, s));
    const auto& q = q_spec.values();
    all.insert(all.end(), q.begin(), q.end());
    return Spectrum(std::move(all));
}

double tridiagonal_charpoly(const std::vector<double>& diag, const std::vector<double>& offdiag,
                            double lambda) {
    if (diag.empty()) throw ParameterError("empty tridiagonal matrix");
    if (offdiag.size() + 1 != diag.size())
        throw ParameterError("off-diagonal must have one entry fewer than the diagonal");
    double prev = 1.0;
    double cur = lambda - diag[0];
    for (std::size_t k = 1; k < diag.size(); ++k) {
        const double next = (lambda - diag[k]) * cur - offdiag[k - 1] * offdiag[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

bool template_is(const Graph& h, std::size_t r, std::vector<Edge> edges) {
    return h == Graph(r, std::move(edges));
}

bool same_component(const ComponentSpec& a, const ComponentSpec& b) {
    if (a.order() != b.order() || a.degree() != b.degree()) return false;
    return spectra_equal(Spectrum(a.adjacency_spectrum()), Spectrum(b.adjacency_spectrum()), 1e-9);
}

struct Palindrome {
    HJoinValidation v;
    double a, b, n1, n2;
};

Palindrome palindrome_setup(const HJoinSpec& spec, double s, bool cyclic) {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
    if (cyclic) edges.emplace_back(0, 3);
    if (!template_is(spec.h, 4, edges))
        throw PreconditionError(cyclic ? "template must be C4 with edges 0-1,1-2,2-3,3-0"
                                       : "template must be P4 with edges 0-1,1-2,2-3");
    if (spec.components.size() != 4 || !same_component(spec.components[0], spec.components[3]) ||
        !same_component(spec.components[1], spec.components[2]))
        throw PreconditionError("components must read (G1, G2, G2, G1)");
    Palindrome p{validate_spec(spec), 0, 0, 0, 0};
    p.a = lambda1(p.v, 0, s);
    p.b = lambda1(p.v, 1, s);
    p.n1 = static_cast<double>(p.v.orders[0]);
    p.n2 = static_cast<double>(p.v.orders[1]);
    return p;
}

std::vector<double> doubled_blocks(const HJoinSpec& spec, const Palindrome& p, double s) {
    std::vector<double> all;
    for (std::size_t i : {0, 1}) {
        std::vector<double> block = block_values(spec, p.v, i, s);
        const double top = i == 0 ? p.a : p.b;
        remove_closest(block, top);
        for (int copy = 0; copy < 2; ++copy) all.insert(all.end(), block.begin(), block.end());
    }
    return all;
}

void push_quadratic_roots(std::vector<double>& out, double sum, double disc) {
    const double root = std::sqrt(disc);
    out.push_back(0.5 * (sum - root));
    out.push_back(0.5 * (sum + root));
}

}  // namespace

Spectrum closed_form_p3_symmetric(const HJoinSpec& spec, double s) {
    if (!template_is(spec.h, 3, {{0, 1}, {1, 2}}))
        throw PreconditionError("template must be P3 with edges 0-1,1-2");
    HJoinValidation v = validate_spec(spec);
    if (v.degrees[0] != v.degrees[2]) throw PreconditionError("outer components need equal degree");

    const double a = lambda1(v, 0, s);
    const double b = lambda1(v, 1, s);
    const double n1 = static_cast<double>(v.orders[0]);
    const double n2 = static_cast<double>(v.orders[1]);
    const double n3 = static_cast<double>(v.orders[2]);

    std::vector<double> all;
    for (std::size_t i = 0; i < 3; ++i) {
        auto block = block_values(spec, v, i, s);
        all.insert(all.end(), block.begin(), block.end());
    }
    remove_closest(all, a);
    remove_closest(all, b);
    push_quadratic_roots(all, a + b, (a - b) * (a - b) + 4.0 * s * s * n2 * (n1 + n3));
    return Spectrum(std::move(all));
}

Spectrum closed_form_p4_palindrome(const HJoinSpec& spec, double s) {
    Palindrome p = palindrome_setup(spec, s, false);
    std::vector<double> all = doubled_blocks(spec, p, s);
    const double cross = 4.0 * s * s * p.n1 * p.n2;
    const double t = s * p.n2;
    push_quadratic_roots(all, p.a + p.b + t, (p.a - p.b - t) * (p.a - p.b - t) + cross);
    push_quadratic_roots(all, p.a + p.b - t, (p.a - p.b + t) * (p.a - p.b + t) + cross);
    return Spectrum(std::move(all));
}

Spectrum closed_form_c4_palindrome(const HJoinSpec& spec, double s) {
    Palindrome p = palindrome_setup(spec, s, true);
    std::vector<double> all = doubled_blocks(spec, p, s);
    const double cross = 4.0 * s * s * p.n1 * p.n2;
    const double sum_n = s * (p.n1 + p.n2);
    const double diff_n = s * (p.n1 - p.n2);
    push_quadratic_roots(all, p.a + p.b + sum_n, (p.a - p.b + diff_n) * (p.a - p.b + diff_n) + cross);
    push_quadratic_roots(all, p.a + p.b - sum_n, (p.a - p.b - diff_n) * (p.a - p.b - diff_n) + cross);
    return Spectrum(std::move(all));
}

namespace {

using nlohmann::json;

std::vector<Edge> edges_from_json(const json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge must be a pair [u, v]");
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return edges;
}

ComponentSpec component_from_json(const json& j, std::size_t index) {
    auto where = "component " + std::to_string(index) + ": ";
    if (j.contains("spectrum")) return ComponentSpec::from_spectrum(j.at("spectrum").get<std::vector<double>>());
    const auto name = j.at("family").get<std::string>();
    const auto family = parse_family(name);
    if (!family) throw ParseError(0, where + "unknown family '" + name + "'");
    switch (*family) {
        case Family::starlike:
            return ComponentSpec::from_family(
                FamilySpec::starlike(j.at("legs").get<std::vector<std::size_t>>()));
        case Family::edges: {
            const auto n = j.at("n").get<std::size_t>();
            return ComponentSpec::from_graph(Graph(n, edges_from_json(j.value("edges", json::array()))));
        }
        default:
            return ComponentSpec::from_family({*family, {j.at("n").get<std::size_t>()}, {}});
    }
}

}  // namespace

HJoinSpec read_hjoin_json(std::istream& in) {
    try {
        json doc = json::parse(in);
        HJoinSpec spec;
        const json& h = doc.at("h");
        spec.h = Graph(h.at("n").get<std::size_t>(), edges_from_json(h.value("edges", json::array())));
        std::size_t i = 0;
        for (const auto& c : doc.at("components")) spec.components.push_back(component_from_json(c, i++));
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("invalid H-join JSON: ") + e.what());
    } catch (const ParameterError& e) {
        throw ParseError(0, std::string("invalid H-join JSON: ") + e.what());
    }
}

HJoinSpec read_hjoin_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_hjoin_json(in);
}

}  // namespace dlap
