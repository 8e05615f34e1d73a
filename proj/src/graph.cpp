#include "specred/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace specred {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph must have 1..62 vertices");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex index out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (VertexSet row : adj_) total += popcount(row);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= VertexSet(1) << v;
    adj_[static_cast<std::size_t>(v)] |= VertexSet(1) << u;
}

VertexSet Graph::all_vertices() const {
    return n_ == 64 ? ~VertexSet(0) : ((VertexSet(1) << n_) - 1);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph build_pineapple(const PineappleParams& p) {
    Graph g(p.vertex_count());
    for (int u = 0; u < p.alpha; ++u)
        for (int v = u + 1; v < p.alpha; ++v) g.add_edge(u, v);
    for (int i = 0; i < p.beta; ++i) g.add_edge(0, p.alpha + i);
    return g;
}

Graph Graph::parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("graph6: empty input at byte 0");

    auto bad = [&](std::size_t offset, const std::string& why) {
        throw parse_error("graph6: " + why + " at byte " + std::to_string(base + offset));
    };

    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) bad(0, "multi-byte vertex counts unsupported (n <= 62)");
    if (first < 63 || first > 125) bad(0, "size byte out of range");
    int n = first - 63;
    if (n < 1) bad(0, "empty graph not representable");

    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t body = (pairs + 5) / 6;
    if (text.size() < 1 + body) bad(text.size(), "truncated bit vector");
    if (text.size() > 1 + body) bad(1 + body, "trailing bytes");

    Graph g(n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            std::size_t byte_idx = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(text[byte_idx]);
            if (c < 63 || c > 126) bad(byte_idx, "data byte out of range");
            int value = c - 63;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits must be zero.
    for (std::size_t b = pairs; b < body * 6; ++b) {
        std::size_t byte_idx = 1 + b / 6;
        int value = static_cast<unsigned char>(text[byte_idx]) - 63;
        if ((value >> (5 - b % 6)) & 1) bad(byte_idx, "nonzero padding bit");
    }
    return g;
}

std::string Graph::to_graph6() const {
    std::string out;
    out.push_back(static_cast<char>(n_ + 63));
    std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    std::size_t body = (pairs + 5) / 6;
    std::vector<int> groups(body, 0);
    std::size_t bit = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (has_edge(u, v)) groups[bit / 6] |= 1 << (5 - bit % 6);
    for (int gval : groups) out.push_back(static_cast<char>(gval + 63));
    return out;
}

Graph Graph::induced(VertexSet subset) const {
    subset &= all_vertices();
    int k = popcount(subset);
    if (k == 0) throw std::invalid_argument("induced subgraph of empty vertex set");
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(k));
    for (int v = 0; v < n_; ++v)
        if ((subset >> v) & 1) verts.push_back(v);
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                g.add_edge(i, j);
    return g;
}

bool Graph::is_connected() const {
    VertexSet seen = 1;
    VertexSet frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int v = lowest_vertex(frontier);
            frontier &= frontier - 1;
            next |= adj_[static_cast<std::size_t>(v)] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == all_vertices();
}

namespace {

// ESU-style connected-growth expansion: extend S only with exclusive
// neighbors greater than the anchor, so every connected subset with a given
// minimum vertex is produced exactly once.
void extend_subsets(const Graph& g, VertexSet s, VertexSet neighborhood, VertexSet extension,
                    int anchor, const std::function<void(VertexSet)>& fn) {
    fn(s);
    VertexSet rest = extension;
    while (rest) {
        int u = lowest_vertex(rest);
        rest &= rest - 1;
        VertexSet above_anchor = ~((VertexSet(1) << (anchor + 1)) - 1);
        VertexSet exclusive = g.neighbors(u) & above_anchor & ~neighborhood & ~s;
        VertexSet next_ext = rest | exclusive;
        extend_subsets(g, s | (VertexSet(1) << u), neighborhood | g.neighbors(u) | (VertexSet(1) << u),
                       next_ext, anchor, fn);
    }
}

}  // namespace

void Graph::for_each_connected_subset(const std::function<void(VertexSet)>& fn, int max_n) const {
    if (n_ > max_n)
        throw guard_error("connected subset enumeration limited to " + std::to_string(max_n) +
                          " vertices (got " + std::to_string(n_) + ")");
    for (int anchor = 0; anchor < n_; ++anchor) {
        VertexSet s = VertexSet(1) << anchor;
        VertexSet above_anchor = ~((VertexSet(1) << (anchor + 1)) - 1);
        extend_subsets(*this, s, s | neighbors(anchor), neighbors(anchor) & above_anchor, anchor, fn);
    }
}

std::vector<VertexSet> Graph::connected_induced_subsets(int max_n) const {
    std::vector<VertexSet> out;
    for_each_connected_subset([&](VertexSet s) { out.push_back(s); }, max_n);
    return out;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Coarsest equitable refinement: split cells by neighbor counts into other
// cells until stable. Splits depend only on the partition structure, so the
// refined ordered partition is isomorphism-invariant.
void refine_partition(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
            VertexSet splitter = 0;
            for (int v : cells[si]) splitter |= VertexSet(1) << v;
            for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::map<int, std::vector<int>> buckets;
                for (int v : cells[ci]) buckets[popcount(g.neighbors(v) & splitter)].push_back(v);
                if (buckets.size() <= 1) continue;
                Partition next;
                next.reserve(cells.size() + buckets.size() - 1);
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (i == ci) {
                        for (auto& [count, verts] : buckets) next.push_back(std::move(verts));
                    } else {
                        next.push_back(std::move(cells[i]));
                    }
                }
                cells = std::move(next);
                changed = true;
            }
        }
    }
}

std::vector<std::uint8_t> encode_labeled(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<std::uint8_t> bytes;
    bytes.reserve(1 + static_cast<std::size_t>(n) * (n - 1) / 16 + 1);
    bytes.push_back(static_cast<std::uint8_t>(n));
    int bit = 0;
    std::uint8_t cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = static_cast<std::uint8_t>(cur << 1);
            if (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
                cur |= 1;
            if (++bit == 8) {
                bytes.push_back(cur);
                cur = 0;
                bit = 0;
            }
        }
    }
    if (bit > 0) bytes.push_back(static_cast<std::uint8_t>(cur << (8 - bit)));
    return bytes;
}

// Swapping u and w is an automorphism iff their neighborhoods agree away
// from the pair itself.
bool are_twins(const Graph& g, int u, int w) {
    VertexSet mask = ~((VertexSet(1) << u) | (VertexSet(1) << w));
    return (g.neighbors(u) & mask) == (g.neighbors(w) & mask);
}

void canonical_search(const Graph& g, Partition cells, std::optional<std::vector<std::uint8_t>>& best) {
    refine_partition(g, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() > 1) {
            target = i;
            break;
        }
    }
    if (target == cells.size()) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(g.vertex_count()));
        for (const auto& cell : cells) order.push_back(cell[0]);
        auto bytes = encode_labeled(g, order);
        if (!best || bytes < *best) best = std::move(bytes);
        return;
    }
    const std::vector<int>& cell = cells[target];
    for (std::size_t vi = 0; vi < cell.size(); ++vi) {
        // A twin earlier in the cell spans an identical subtree.
        bool skip = false;
        for (std::size_t wi = 0; wi < vi && !skip; ++wi) skip = are_twins(g, cell[wi], cell[vi]);
        if (skip) continue;
        Partition next;
        next.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != target) {
                next.push_back(cells[i]);
                continue;
            }
            next.push_back({cell[vi]});
            std::vector<int> others;
            others.reserve(cell.size() - 1);
            for (int v : cell)
                if (v != cell[vi]) others.push_back(v);
            next.push_back(std::move(others));
        }
        canonical_search(g, std::move(next), best);
    }
}

}  // namespace

std::vector<std::uint8_t> Graph::canonical_form(int max_n) const {
    if (n_ > max_n)
        throw guard_error("canonical form limited to " + std::to_string(max_n) + " vertices (got " +
                          std::to_string(n_) + ")");
    // Initial ordered partition: cells grouped by degree, ascending.
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < n_; ++v) by_degree[degree(v)].push_back(v);
    Partition cells;
    for (auto& [d, verts] : by_degree) cells.push_back(std::move(verts));
    std::optional<std::vector<std::uint8_t>> best;
    canonical_search(*this, std::move(cells), best);
    return *best;
}

IntPoly Graph::charpoly(int max_n) const {
    if (n_ > max_n)
        throw guard_error("charpoly limited to " + std::to_string(max_n) + " vertices (got " +
                          std::to_string(n_) + ")");
    int n = n_;
    using Matrix = std::vector<std::vector<Int>>;
    Matrix a(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && has_edge(u, v)) a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;

    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k; every division is
    // exact over the integers by Newton's identities.
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    coeffs[static_cast<std::size_t>(n)] = 1;
    Matrix m = a;
    for (int k = 1; k <= n; ++k) {
        Int trace(0);
        for (int i = 0; i < n; ++i) trace += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        if (trace % k != 0) throw std::logic_error("Faddeev-LeVerrier trace division not exact");
        Int c = -trace / k;
        coeffs[static_cast<std::size_t>(n - k)] = c;
        if (k == n) break;
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += c;
        Matrix next(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        m[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            }
        m = std::move(next);
    }
    return IntPoly(std::move(coeffs));
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return g;
}

Graph Graph::coalescence(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.vertex_count()) throw std::out_of_range("coalescence vertex u out of range");
    if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("coalescence vertex v out of range");
    int n = g.vertex_count() + h.vertex_count() - 1;
    Graph out(n);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b)
            if (g.has_edge(a, b)) out.add_edge(a, b);
    // Vertices of h map to g.n + shifted index, with v landing on u.
    auto map_h = [&](int w) {
        if (w == v) return u;
        return g.vertex_count() + (w < v ? w : w - 1);
    };
    for (int a = 0; a < h.vertex_count(); ++a)
        for (int b = a + 1; b < h.vertex_count(); ++b)
            if (h.has_edge(a, b)) out.add_edge(map_h(a), map_h(b));
    return out;
}

}  // namespace specred
