#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dlap {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically (first < second) and sorted, so two graphs
/// with the same edge set compare equal regardless of insertion order.
/// Disconnected graphs are allowed; operations that need a tree or a
/// connected graph validate that themselves.
class Graph {
public:
    Graph() = default;

    /// Throws ParameterError on self-loops, out-of-range endpoints or
    /// duplicate edges ({u,v} and {v,u} count as duplicates).
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::size_t max_degree() const noexcept;
    std::vector<std::size_t> degrees() const;

    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

enum class Family { path, cycle, star, complete, starlike, edges };

/// Parameters of a named graph family.
///
/// path/cycle/complete take the vertex count; star(n) is K_{1,n} with n+1
/// vertices and center 0; starlike takes the leg lengths q_1..q_k (k >= 3),
/// center 0 and legs laid out one after another. `edges` wraps an explicit
/// graph.
struct FamilySpec {
    Family family = Family::path;
    std::vector<std::size_t> params;
    std::optional<Graph> graph;

    static FamilySpec path(std::size_t n) { return {Family::path, {n}, {}}; }
    static FamilySpec cycle(std::size_t n) { return {Family::cycle, {n}, {}}; }
    static FamilySpec star(std::size_t n) { return {Family::star, {n}, {}}; }
    static FamilySpec complete(std::size_t n) { return {Family::complete, {n}, {}}; }
    static FamilySpec starlike(std::vector<std::size_t> legs) {
        return {Family::starlike, std::move(legs), {}};
    }
    static FamilySpec custom(Graph g) { return {Family::edges, {}, std::move(g)}; }
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

Graph build_family(const FamilySpec& spec);

inline Graph path_graph(std::size_t n) { return build_family(FamilySpec::path(n)); }
inline Graph cycle_graph(std::size_t n) { return build_family(FamilySpec::cycle(n)); }
inline Graph star_graph(std::size_t n) { return build_family(FamilySpec::star(n)); }
inline Graph complete_graph(std::size_t n) { return build_family(FamilySpec::complete(n)); }
inline Graph starlike_graph(std::vector<std::size_t> legs) {
    return build_family(FamilySpec::starlike(std::move(legs)));
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);

/// Deletes vertex v; vertices above v shift down by one.
Graph remove_vertex(const Graph& g, Vertex v);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

struct Bipartition {
    std::vector<Vertex> part1;
    std::vector<Vertex> part2;
};

/// BFS 2-coloring from the lowest-index vertex of each component; that
/// vertex lands in part1. Parts are returned sorted.
std::optional<Bipartition> bipartition(const Graph& g);

/// A tree with a root and a bottom-up vertex order (children before parents,
/// root last).
class RootedTree {
public:
    const Graph& graph() const noexcept { return graph_; }
    Vertex root() const noexcept { return root_; }
    std::size_t order() const noexcept { return graph_.order(); }

    /// Vertices in bottom-up order.
    const std::vector<Vertex>& sequence() const noexcept { return order_; }
    std::size_t position(Vertex v) const { return position_.at(v); }
    std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
    const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }

    friend RootedTree root_and_order(const Graph& g, Vertex root);

private:
    Graph graph_;
    Vertex root_ = 0;
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
    std::vector<std::optional<Vertex>> parent_;
    std::vector<std::vector<Vertex>> children_;
};

/// Roots g at `root` and orders vertices by reverse BFS. Children lists
/// follow bottom-up position. Throws StructureError if g is not a tree.
RootedTree root_and_order(const Graph& g, Vertex root);

// Edge-list text format: "n m" then m lines "u v", 0-indexed.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Random generators for property tests and the verify command.
Graph random_tree(std::size_t n, std::mt19937_64& rng);
Graph random_connected_graph(std::size_t n, double extra_edge_prob, std::mt19937_64& rng);
Graph random_bipartite_graph(std::size_t n1, std::size_t n2, double edge_prob, std::mt19937_64& rng);

}  // namespace dlap
