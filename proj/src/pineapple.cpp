#include "specred/pineapple.hpp"

#include <algorithm>
#include <numeric>

namespace specred {

IntPoly pineapple_cubic(const PineappleParams& p) {
    long a = p.alpha;
    long b = p.beta;
    return IntPoly{b * (a - 2), -(a + b - 1), -(a - 2), 1};
}

AlgebraicNumber pineapple_radius(const PineappleParams& p) {
    if (p.alpha == 2 && p.beta == 0) return AlgebraicNumber::from_rational(Rat(1));  // K2
    return AlgebraicNumber::largest_real_root(pineapple_cubic(p));
}

std::int64_t pineapple_b_count(const PineappleParams& p) {
    return static_cast<std::int64_t>(p.alpha - 1) * (p.beta + 1) + 1;
}

SubgraphFamily pineapple_subgraph_family(const PineappleParams& p) {
    SubgraphFamily family;
    family.pineapples.reserve(static_cast<std::size_t>(p.alpha - 1) * (p.beta + 1));
    for (int i = 2; i <= p.alpha; ++i)
        for (int j = 0; j <= p.beta; ++j) family.pineapples.emplace_back(i, j);
    return family;
}

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

std::vector<std::vector<std::size_t>> collision_index_groups(const std::vector<PineappleParams>& members) {
    std::size_t m = members.size();
    std::vector<AlgebraicNumber> radii;
    radii.reserve(m);
    Rat width = make_rat(1, Int(1) << 20);
    for (const auto& q : members) radii.push_back(pineapple_radius(q).refined(width));

    UnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            long da = members[j].alpha - members[i].alpha;
            long db = members[j].beta - members[i].beta;
            if (da * db >= 0) continue;  // equal radii force opposite parameter movement
            if (radii[i].hi() < radii[j].lo() || radii[j].hi() < radii[i].lo()) continue;
            if (AlgebraicNumber::compare(radii[i], radii[j]) == Order::EQ) uf.unite(i, j);
        }

    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::vector<std::size_t>> by_root(m);
    for (std::size_t i = 0; i < m; ++i) by_root[uf.find(i)].push_back(i);
    for (auto& g : by_root)
        if (g.size() >= 2) groups.push_back(std::move(g));
    std::sort(groups.begin(), groups.end());
    return groups;
}

}  // namespace

std::vector<std::vector<PineappleParams>> pineapple_collision_groups(const PineappleParams& p) {
    SubgraphFamily family = pineapple_subgraph_family(p);
    auto groups = collision_index_groups(family.pineapples);
    std::vector<std::vector<PineappleParams>> out;
    out.reserve(groups.size());
    for (const auto& g : groups) {
        std::vector<PineappleParams> members;
        members.reserve(g.size());
        for (std::size_t i : g) members.push_back(family.pineapples[i]);
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::int64_t pineapple_c_count(const PineappleParams& p) {
    auto groups = pineapple_collision_groups(p);
    std::int64_t excess = 0;
    for (const auto& g : groups) excess += static_cast<std::int64_t>(g.size()) - 1;
    // The single-vertex radius 0 never collides: every other member is
    // connected with an edge, so its radius is at least 1.
    return pineapple_b_count(p) - excess;
}

Rat pineapple_redundancy(const PineappleParams& p) {
    return make_rat(Int(pineapple_b_count(p)), Int(pineapple_c_count(p)));
}

AlgebraicNumber pineapple_critical_point(const PineappleParams& p) {
    return AlgebraicNumber::largest_real_root(pineapple_cubic(p).derivative());
}

RadiusCertificate pineapple_radius_certificate(const PineappleParams& p, const AlgebraicNumber& rho) {
    IntPoly cubic = pineapple_cubic(p);
    if (rho.sign_of(cubic) != 0)
        throw std::invalid_argument("radius certificate: value is not a root of the cubic of " + p.to_string());

    RadiusCertificate cert{};
    cert.is_largest = AlgebraicNumber::compare(rho, AlgebraicNumber::largest_real_root(cubic)) == Order::EQ;
    cert.shifted_quadratic_positive = rho.sign_of(cubic.derivative()) > 0;
    cert.above_critical_point =
        AlgebraicNumber::compare(rho, pineapple_critical_point(p)) == Order::GT;
    cert.cross_check_disagreement = (cert.is_largest != cert.shifted_quadratic_positive) ||
                                    (cert.is_largest != cert.above_critical_point);
    return cert;
}

bool is_pineapple_spectral_radius(const PineappleParams& p, const AlgebraicNumber& rho) {
    return pineapple_radius_certificate(p, rho).is_largest;
}

PineappleSpectrum pineapple_spectrum(const PineappleParams& p) {
    return PineappleSpectrum{p, pineapple_cubic(p), pineapple_radius(p), p.beta - 1, p.alpha - 2};
}

}  // namespace specred
