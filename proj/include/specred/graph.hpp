#ifndef SPECRED_GRAPH_HPP
#define SPECRED_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "specred/intpoly.hpp"
#include "specred/types.hpp"

namespace specred {

// Vertex subset of a graph on up to 62 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest_vertex(VertexSet s) { return __builtin_ctzll(s); }

// Labeled simple undirected graph, adjacency stored as per-vertex bit rows.
class Graph {
public:
    explicit Graph(int n);

    static constexpr int kMaxVertices = 62;

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int u) const { return popcount(adj_[static_cast<std::size_t>(u)]); }
    VertexSet neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    VertexSet all_vertices() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    // graph6 text, n <= 62 (single-byte size header). An optional
    // ">>graph6<<" prefix is accepted and stripped. Malformed input raises
    // parse_error naming the offending byte offset.
    static Graph parse_graph6(std::string_view text);
    std::string to_graph6() const;

    Graph induced(VertexSet subset) const;
    bool is_connected() const;

    // Every nonempty vertex subset inducing a connected subgraph, each
    // exactly once, by connected-growth expansion from the subset's
    // minimum vertex. Never visits a disconnected candidate.
    void for_each_connected_subset(const std::function<void(VertexSet)>& fn, int max_n = 16) const;
    std::vector<VertexSet> connected_induced_subsets(int max_n = 16) const;

    // Canonical byte string: equal iff graphs are isomorphic. Equitable
    // partition refinement with individualization backtracking; branches on
    // pairwise-twin vertices are skipped since swapping twins is an
    // automorphism. Guarded by max_n.
    std::vector<std::uint8_t> canonical_form(int max_n = 10) const;

    // Exact det(xI - A) by the Faddeev-LeVerrier recurrence over the
    // integers; monic of degree n. charpoly of the 0-vertex graph is 1.
    IntPoly charpoly(int max_n = 16) const;

    Graph permuted(const std::vector<int>& perm) const;

    // Graph on g.n + h.n - 1 vertices identifying vertex u of g with
    // vertex v of h.
    static Graph coalescence(const Graph& g, int u, const Graph& h, int v);

private:
    void check_vertex(int u) const;
    int n_;
    std::vector<VertexSet> adj_;
};

// The pair (alpha, beta) identifying the pineapple graph P(alpha, beta):
// a clique on alpha vertices with beta pendant vertices attached to one
// clique vertex.
struct PineappleParams {
    int alpha;
    int beta;

    PineappleParams(int a, int b) : alpha(a), beta(b) {
        if (a < 2) throw std::invalid_argument("pineapple clique size must be >= 2");
        if (b < 0) throw std::invalid_argument("pineapple pendant count must be >= 0");
    }

    int vertex_count() const { return alpha + beta; }
    bool operator==(const PineappleParams& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator!=(const PineappleParams& o) const { return !(*this == o); }
    bool operator<(const PineappleParams& o) const {
        return alpha != o.alpha ? alpha < o.alpha : beta < o.beta;
    }
    std::string to_string() const {
        return "P(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    }
};

// Vertices 0..alpha-1 form the clique; vertices alpha..alpha+beta-1 are
// pendants attached to vertex 0. All attachment choices are isomorphic,
// so the fixed convention is safe.
Graph build_pineapple(const PineappleParams& p);

}  // namespace specred

#endif
