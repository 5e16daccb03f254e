#include "dlap/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "dlap/error.hpp"

namespace dlap {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
    for (auto& e : edges) {
        if (e.first == e.second)
            throw ParameterError("self-loop at vertex " + std::to_string(e.first));
        if (e.first >= n || e.second >= n)
            throw ParameterError("edge {" + std::to_string(e.first) + "," +
                                 std::to_string(e.second) + "} out of range for n=" +
                                 std::to_string(n));
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw ParameterError("duplicate edge {" + std::to_string(dup->first) + "," +
                             std::to_string(dup->second) + "}");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adj_) best = std::max(best, list.size());
    return best;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = adj_[v].size();
    return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::starlike: return "starlike";
        case Family::edges: return "edges";
    }
    return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::star, Family::complete,
                     Family::starlike, Family::edges})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

namespace {

std::size_t single_size(const FamilySpec& spec) {
    if (spec.params.size() != 1)
        throw ParameterError(family_name(spec.family) + " takes exactly one size parameter");
    if (spec.params[0] < 1) throw ParameterError(family_name(spec.family) + " size must be >= 1");
    return spec.params[0];
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::path: {
            std::size_t n = single_size(spec);
            for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return Graph(n, std::move(edges));
        }
        case Family::cycle: {
            std::size_t n = single_size(spec);
            if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
            for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            return Graph(n, std::move(edges));
        }
        case Family::star: {
            std::size_t leaves = single_size(spec);
            for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
            return Graph(leaves + 1, std::move(edges));
        }
        case Family::complete: {
            std::size_t n = single_size(spec);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, std::move(edges));
        }
        case Family::starlike: {
            if (spec.params.size() < 3) throw ParameterError("starlike needs at least 3 legs");
            Vertex next = 1;
            for (std::size_t len : spec.params) {
                if (len < 1) throw ParameterError("starlike leg lengths must be >= 1");
                Vertex prev = 0;
                for (std::size_t i = 0; i < len; ++i) {
                    edges.emplace_back(prev, next);
                    prev = next++;
                }
            }
            return Graph(next, std::move(edges));
        }
        case Family::edges:
            if (!spec.graph) throw ParameterError("edge-list family carries no graph");
            return *spec.graph;
    }
    throw ParameterError("unknown family");
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v))
        throw NotFoundError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} not in graph");
    Edge key = std::minmax(u, v);
    std::vector<Edge> edges;
    edges.reserve(g.size() - 1);
    for (const auto& e : g.edges())
        if (e != key) edges.push_back(e);
    return Graph(g.order(), std::move(edges));
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges));
}

Graph remove_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) throw NotFoundError("vertex " + std::to_string(v) + " not in graph");
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(g.order() - 1, std::move(edges));
}

namespace {

std::vector<Vertex> bfs_order(const Graph& g, Vertex start, std::vector<bool>& seen) {
    std::vector<Vertex> out{start};
    seen[start] = true;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (Vertex w : g.neighbors(out[head]))
            if (!seen[w]) {
                seen[w] = true;
                out.push_back(w);
            }
    return out;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> seen(g.order(), false);
    return bfs_order(g, 0, seen).size() == g.order();
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<Vertex> q;
        q.push(start);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < g.order(); ++v) (color[v] == 0 ? out.part1 : out.part2).push_back(v);
    return out;
}

RootedTree root_and_order(const Graph& g, Vertex root) {
    if (!is_tree(g)) throw StructureError("graph is not a tree");
    if (root >= g.order()) throw ParameterError("root " + std::to_string(root) + " out of range");

    RootedTree t;
    t.graph_ = g;
    t.root_ = root;
    const std::size_t n = g.order();

    std::vector<bool> seen(n, false);
    std::vector<Vertex> bfs = bfs_order(g, root, seen);
    // In a tree every non-root vertex has exactly one neighbor earlier in BFS order.
    std::vector<std::size_t> bfs_pos(n);
    for (std::size_t i = 0; i < n; ++i) bfs_pos[bfs[i]] = i;
    t.parent_.assign(n, std::nullopt);
    for (Vertex v : bfs)
        for (Vertex w : g.neighbors(v))
            if (bfs_pos[w] < bfs_pos[v]) t.parent_[v] = w;

    t.order_.assign(bfs.rbegin(), bfs.rend());
    t.position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) t.position_[t.order_[i]] = i;

    t.children_.assign(n, {});
    for (Vertex v : t.order_)
        if (t.parent_[v]) t.children_[*t.parent_[v]].push_back(v);
    return t;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(0, "empty edge list");
    long long n = -1, m = -1;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0)
            throw ParseError(line_no, "expected header 'n m' with non-negative integers");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                              std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0)
            throw ParseError(line_no, "expected 'u v' with non-negative integers");
        if (u >= n || v >= n) throw ParseError(line_no, "endpoint out of range");
        if (u == v) throw ParseError(line_no, "self-loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line()) throw ParseError(line_no, "trailing content after " + std::to_string(m) + " edges");
    try {
        return Graph(static_cast<std::size_t>(n), std::move(edges));
    } catch (const ParameterError& e) {
        throw ParseError(0, e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::vector<Vertex> label(n);
    for (Vertex v = 0; v < n; ++v) label[v] = v;
    std::shuffle(label.begin(), label.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        edges.emplace_back(label[pick(rng)], label[i]);
    }
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(std::size_t n, double extra_edge_prob, std::mt19937_64& rng) {
    Graph tree = random_tree(n, rng);
    std::vector<Edge> edges = tree.edges();
    std::bernoulli_distribution coin(extra_edge_prob);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!tree.has_edge(u, v) && coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_bipartite_graph(std::size_t n1, std::size_t n2, double edge_prob,
                             std::mt19937_64& rng) {
    const std::size_t n = n1 + n2;
    std::vector<Vertex> label(n);
    for (Vertex v = 0; v < n; ++v) label[v] = v;
    std::shuffle(label.begin(), label.end(), rng);
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = n1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(label[i], label[j]);
    return Graph(n, std::move(edges));
}

}  // namespace dlap
