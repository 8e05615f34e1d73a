#include "specred/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace specred {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SpectrumReport complementarity_spectrum(const Graph& g, const SpectrumOptions& options) {
    if (!g.is_connected()) throw std::invalid_argument("complementarity spectrum requires a connected graph");
    if (g.vertex_count() > options.max_n)
        throw guard_error("complementarity spectrum limited to " + std::to_string(options.max_n) +
                          " vertices (got " + std::to_string(g.vertex_count()) + ")");

    std::map<std::vector<std::uint8_t>, VertexSet> buckets;
    g.for_each_connected_subset(
        [&](VertexSet s) {
            auto canon = g.induced(s).canonical_form(options.max_n);
            buckets.emplace(std::move(canon), s);
        },
        std::max(options.max_n, 16));

    SpectrumReport report;
    for (auto& [canon, rep] : buckets) {
        Graph sub = g.induced(rep);
        AlgebraicNumber radius = sub.vertex_count() == 1
                                     ? AlgebraicNumber::from_rational(Rat(0))
                                     : AlgebraicNumber::largest_real_root(sub.charpoly(options.max_n));
        report.classes.push_back({canon, rep, sub.vertex_count(), std::move(radius)});
    }
    std::sort(report.classes.begin(), report.classes.end(), [](const SpectrumClass& a, const SpectrumClass& b) {
        if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
        return a.canonical < b.canonical;
    });

    report.b = static_cast<std::int64_t>(report.classes.size());

    // Group classes with exactly equal radii. Pre-refined intervals prune
    // almost every pair before an exact comparison is needed.
    std::size_t m = report.classes.size();
    std::vector<AlgebraicNumber> refined;
    refined.reserve(m);
    Rat width = make_rat(1, Int(1) << 24);
    for (const auto& cls : report.classes) refined.push_back(cls.radius.refined(width));
    UnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (refined[i].hi() < refined[j].lo() || refined[j].hi() < refined[i].lo()) continue;
            if (AlgebraicNumber::compare(report.classes[i].radius, report.classes[j].radius) == Order::EQ)
                uf.unite(i, j);
        }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);
    report.c = static_cast<std::int64_t>(groups.size());
    for (auto& [root, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        report.collisions.push_back(members);
    }
    std::sort(report.collisions.begin(), report.collisions.end());

    report.redundancy = make_rat(Int(report.b), Int(report.c));
    return report;
}

bool verify_bounds(const Graph& g, const SpectrumOptions& options) {
    SpectrumReport report = complementarity_spectrum(g, options);
    int n = g.vertex_count();
    Int upper = (Int(1) << n) - 1;
    return report.c <= report.b && Int(n) <= Int(report.b) && Int(report.b) <= upper;
}

}  // namespace specred
