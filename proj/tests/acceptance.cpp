// Acceptance suite: eleven end-to-end checks, one pass/fail line each.
// Exits nonzero when any check fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "specred/coincidence.hpp"
#include "specred/pineapple.hpp"
#include "specred/spectrum.hpp"

using namespace specred;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& title, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        passed = false;
        detail = e.what();
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (passed ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << number << " ("
         << std::fixed << std::setprecision(2) << elapsed << "s) " << title;
    if (!detail.empty()) line << ": " << detail;
    std::cout << line.str() << std::endl;
    if (!passed) ++failures;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

// |value - target/scale| <= tolerance as an exact rational statement
void require_close(const AlgebraicNumber& value, long target_num, long target_den, long tol_num,
                   long tol_den, const std::string& what) {
    Rat target = make_rat(target_num, target_den);
    Rat tol = make_rat(tol_num, tol_den);
    require(value.compare_to_rational(target - tol) != Order::LT, what + " below tolerance window");
    require(value.compare_to_rational(target + tol) != Order::GT, what + " above tolerance window");
}

using ParamPair = std::pair<PineappleParams, PineappleParams>;

ParamPair key(int a1, int b1, int a2, int b2) {
    PineappleParams p(a1, b1), q(a2, b2);
    return p < q ? ParamPair{p, q} : ParamPair{q, p};
}

const CoincidencePair* find_pair(const std::vector<CoincidencePair>& pairs, const ParamPair& k) {
    for (const auto& pair : pairs)
        if (pair.sorted_params() == k) return &pair;
    return nullptr;
}

Graph graph_from_edge_mask(int n, VertexSet edges) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((edges >> bit) & 1) g.add_edge(u, v);
    return g;
}

// Every connected graph on exactly n vertices, one per isomorphism class.
std::vector<Graph> connected_classes(int n) {
    std::vector<Graph> out;
    std::set<std::vector<std::uint8_t>> seen;
    int pairs = n * (n - 1) / 2;
    for (VertexSet edges = 0; edges < (VertexSet(1) << pairs); ++edges) {
        Graph g = graph_from_edge_mask(n, edges);
        if (!g.is_connected()) continue;
        if (seen.insert(g.canonical_form()).second) out.push_back(std::move(g));
    }
    return out;
}

IntPoly charpoly_without_vertex(const Graph& g, int v) {
    if (g.vertex_count() == 1) return IntPoly{1};
    return g.induced(g.all_vertices() & ~(VertexSet(1) << v)).charpoly();
}

std::string criterion_subgraph_fixture() {
    SpectrumReport report = complementarity_spectrum(build_pineapple(PineappleParams(4, 3)));
    require(report.b == 13, "b(P(4,3)) != 13");
    std::set<std::vector<std::uint8_t>> actual;
    for (const auto& cls : report.classes) actual.insert(cls.canonical);
    std::set<std::vector<std::uint8_t>> expected{Graph(1).canonical_form()};
    for (int i = 2; i <= 4; ++i)
        for (int j = 0; j <= 3; ++j)
            expected.insert(build_pineapple(PineappleParams(i, j)).canonical_form());
    require(expected.size() == 13, "family fixture has the wrong size");
    require(actual == expected, "classes differ from the pineapple family grid");
    return "b = 13 and all 12 non-trivial classes match the P(i,j) grid";
}

std::string criterion_c_of_p3() {
    for (int beta = 8; beta <= 40; ++beta)
        require(pineapple_c_count(PineappleParams(3, beta)) == 2 * beta + 1,
                "fast path c(P(3," + std::to_string(beta) + ")) != 2b+1");
    SpectrumOptions options;
    options.max_n = 15;
    for (int beta = 0; beta <= 12; ++beta) {
        PineappleParams p(3, beta);
        std::int64_t fast = pineapple_c_count(p);
        std::int64_t expected = beta <= 2 ? 2 * beta + 3 : (beta <= 7 ? 2 * beta + 2 : 2 * beta + 1);
        require(fast == expected, "derived c value mismatch at beta=" + std::to_string(beta));
        SpectrumReport oracle = complementarity_spectrum(build_pineapple(p), options);
        require(oracle.c == fast, "oracle c mismatch at beta=" + std::to_string(beta));
        require(oracle.b == pineapple_b_count(p), "oracle b mismatch at beta=" + std::to_string(beta));
    }
    return "c(P(3,beta)) follows 2b+3 / 2b+2 / 2b+1 and the oracle agrees on beta <= 12";
}

std::string criterion_two_common_example() {
    auto pairs = enumerate_two_common(22);
    const auto* pair = find_pair(pairs, key(16, 44, 8, 220));
    require(pair != nullptr, "(P(16,44), P(8,220)) missing from the catalog");
    require(pair->shared_poly == IntPoly{88, -21, 1}, "shared polynomial differs from x^2 - 21x + 88");
    require(pair->shared.size() == 2, "two shared values expected");
    require_close(pair->shared[0].value, 5783, 1000, 5, 10000, "smaller shared eigenvalue");
    require_close(pair->shared[1].value, 15217, 1000, 5, 10000, "larger shared eigenvalue");
    return "catalog pair with shared polynomial x^2 - 21x + 88 and decimals 5.783 / 15.217";
}

std::string criterion_one_common_example() {
    auto scan = one_common_candidates(11, SlopeParams(11, 2));
    require(scan.skipped_reason.empty(), "scan unexpectedly skipped");
    const auto* radius_pair = find_pair(scan.pairs, key(7, 110, 9, 99));
    require(radius_pair != nullptr, "(P(7,110), P(9,99)) missing");
    require(radius_pair->kind == CoincidenceKind::OneCommonRadius, "expected a radius-kind pair");
    require(radius_pair->shared.size() == 1 && radius_pair->shared[0].value.equals_rational(Rat(11)),
            "shared value must be exactly 11");
    const auto* other = find_pair(scan.pairs, key(17, 165, 19, 154));
    require(other != nullptr, "(P(17,165), P(19,154)) missing");
    require(other->kind == CoincidenceKind::OneCommonNonRadius, "expected a non-radius pair");
    require_close(pineapple_critical_point(PineappleParams(7, 110)), 810, 100, 1, 100,
                  "critical point of P(7,110)");
    require_close(pineapple_critical_point(PineappleParams(9, 99)), 874, 100, 1, 100,
                  "critical point of P(9,99)");
    return "both pairs with correct kinds, shared value 11, critical points 8.10 / 8.74";
}

std::string criterion_integer_radii() {
    for (long rho = 3; rho <= 20; ++rho) {
        CoincidencePair pair = integer_radius_family(rho);
        AlgebraicNumber value = AlgebraicNumber::from_rational(Rat(rho));
        require(is_pineapple_spectral_radius(pair.p1, value), "first member radius not certified");
        require(is_pineapple_spectral_radius(pair.p2, value), "second member radius not certified");
        require(AlgebraicNumber::compare(pineapple_radius(pair.p1), value) == Order::EQ &&
                    AlgebraicNumber::compare(pineapple_radius(pair.p2), value) == Order::EQ,
                "radius mismatch at rho=" + std::to_string(rho));
    }
    return "P(rho+1,0) and P(rho, rho(rho+1)/2) certified for every rho in [3, 20]";
}

std::string criterion_theorem_proof_pairs() {
    auto two = enumerate_two_common(60);
    std::vector<ParamPair> with_23;
    for (const auto& pair : two) {
        auto [lo, hi] = pair.sorted_params();
        if (std::min(lo.alpha, hi.alpha) == 2 && std::max(lo.alpha, hi.alpha) == 3)
            with_23.push_back(pair.sorted_params());
    }
    require(with_23.size() == 1 && with_23.front() == key(2, 3, 3, 0),
            "two-common pairs with clique sizes {2,3} differ from {(P(2,3), P(3,0))}");

    std::vector<ParamPair> radius_23;
    for (const auto& pair : search_one_common(30)) {
        if (pair.kind != CoincidenceKind::OneCommonRadius) continue;
        auto [lo, hi] = pair.sorted_params();
        if (std::min(lo.alpha, hi.alpha) == 2 && std::max(lo.alpha, hi.alpha) == 3)
            radius_23.push_back(pair.sorted_params());
    }
    require(radius_23.size() == 1 && radius_23.front() == key(2, 8, 3, 6),
            "one-common radius pairs with clique sizes {2,3} differ from {(P(2,8), P(3,6))}");

    // rho = 2 with slope 3 is where a {2,3}-clique radius pair would have
    // to live; the only candidate factorization (-1,-2) dies from A = 0.
    auto rho2 = one_common_candidates(2, SlopeParams(3, 1));
    for (const auto& pair : rho2.pairs) {
        auto [lo, hi] = pair.sorted_params();
        require(!(lo.alpha == 2 && hi.alpha == 3), "rho = 2 produced a {2,3}-clique pair");
        require(pair.kind != CoincidenceKind::OneCommonRadius, "rho = 2 produced a radius pair");
    }
    return "unique proof pairs recovered; the rho = 2 branch holds no {2,3} or radius pair";
}

std::string criterion_coalescence_identity() {
    std::mt19937 rng(161803);
    std::uniform_int_distribution<int> size_dist(1, 6);
    std::bernoulli_distribution coin(0.5);
    auto random_graph = [&](int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        return g;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(size_dist(rng));
        Graph h = random_graph(size_dist(rng));
        int u = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, h.vertex_count() - 1)(rng);
        IntPoly left = Graph::coalescence(g, u, h, v).charpoly();
        IntPoly right = g.charpoly() * charpoly_without_vertex(h, v) +
                        charpoly_without_vertex(g, u) * h.charpoly() -
                        IntPoly::identity() * charpoly_without_vertex(g, u) * charpoly_without_vertex(h, v);
        if (left != right)
            throw std::runtime_error("identity failed on trial " + std::to_string(trial));
    }
    return "exact polynomial identity on 200 random coalescences";
}

std::string criterion_monotonicity_corpus() {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 7; ++n) {
        auto classes = connected_classes(n);
        corpus.insert(corpus.end(), classes.begin(), classes.end());
    }
    for (const Graph& g : corpus) {
        SpectrumReport report = complementarity_spectrum(g);
        int n = g.vertex_count();
        require(report.c <= report.b, "c > b");
        require(report.b >= n, "b < n");
        require(Int(report.b) <= (Int(1) << n) - 1, "b > 2^n - 1");
        const SpectrumClass* whole = nullptr;
        for (const auto& cls : report.classes)
            if (cls.vertex_count == n) whole = &cls;
        require(whole != nullptr, "missing whole-graph class");
        for (const auto& cls : report.classes) {
            if (&cls == whole) continue;
            require(AlgebraicNumber::compare(cls.radius, whole->radius) == Order::LT,
                    "a proper connected induced subgraph does not have a strictly smaller radius");
        }
    }
    return "strict monotonicity and counting bounds over all " + std::to_string(corpus.size()) +
           " connected graphs with n <= 7";
}

std::string criterion_limit_behavior() {
    // alpha = 3: r = (2 beta + 3) / (2 beta + 1), strictly decreasing
    Rat previous;
    for (int beta = 8; beta <= 40; ++beta) {
        Rat r = pineapple_redundancy(PineappleParams(3, beta));
        require(r == make_rat(2 * beta + 3, 2 * beta + 1), "redundancy formula mismatch");
        require(r - 1 == make_rat(2, 2 * beta + 1), "|r - 1| formula mismatch");
        if (beta > 8) require(r < previous, "redundancy is not strictly decreasing");
        previous = r;
    }
    // alpha = 4: b - c reaches a plateau discovered by the scan
    std::vector<std::int64_t> gap;
    for (int beta = 0; beta <= 60; ++beta) {
        PineappleParams p(4, beta);
        gap.push_back(pineapple_b_count(p) - pineapple_c_count(p));
    }
    int threshold = 0;
    for (std::size_t i = 1; i < gap.size(); ++i)
        if (gap[i] != gap[i - 1]) threshold = static_cast<int>(i);
    require(threshold == 24, "b - c last changes at beta=" + std::to_string(threshold) +
                                 ", expected 24 (the P(2,24)/P(4,20) coincidence)");
    for (std::size_t i = static_cast<std::size_t>(threshold); i < gap.size(); ++i)
        require(gap[i] == 5, "b - c tail is not the constant 5");
    return "r(P(3,beta)) = (2b+3)/(2b+1) decreasing; b - c for alpha=4 constant at 5 from beta = 24";
}

std::string criterion_oracle_equivalence() {
    SpectrumOptions options;
    options.max_n = 11;
    for (int alpha = 2; alpha <= 5; ++alpha)
        for (int beta = 0; beta <= 6; ++beta) {
            PineappleParams p(alpha, beta);
            SpectrumReport oracle = complementarity_spectrum(build_pineapple(p), options);
            require(oracle.b == pineapple_b_count(p), "b mismatch at " + p.to_string());
            require(oracle.c == pineapple_c_count(p), "c mismatch at " + p.to_string());
            require(oracle.redundancy == pineapple_redundancy(p), "r mismatch at " + p.to_string());
        }
    return "fast path equals the brute-force oracle on the whole 2..5 x 0..6 grid";
}

std::string criterion_sign_condition() {
    auto check_pair = [](const CoincidencePair& pair) {
        long da = pair.p2.alpha - pair.p1.alpha;
        long db = pair.p2.beta - pair.p1.beta;
        require(da * db < 0, "sign condition violated by " + pair.p1.to_string() + ", " + pair.p2.to_string());
    };
    auto two = enumerate_two_common(60);
    for (const auto& pair : two) {
        check_pair(pair);
        const auto& w = std::get<TwoCommonWitness>(pair.witness);
        require(pair.p1.alpha + pair.p2.alpha == w.k + 2, "alpha1 + alpha2 != k + 2");
        require(pair.a_scaled == 0, "A != 0 on a two-common pair");
    }
    auto one = search_one_common(30);
    for (const auto& pair : one) check_pair(pair);
    return std::to_string(two.size()) + " two-common and " + std::to_string(one.size()) +
           " one-common pairs all satisfy the sign condition";
}

}  // namespace

int main() {
    run_criterion(1, "subgraph count fixture for P(4,3)", criterion_subgraph_fixture);
    run_criterion(2, "c(P(3,beta)) closed form and oracle agreement", criterion_c_of_p3);
    run_criterion(3, "two-common catalog reproduces (P(16,44), P(8,220))", criterion_two_common_example);
    run_criterion(4, "one-common scan at rho=11 reproduces both catalog pairs", criterion_one_common_example);
    run_criterion(5, "integer spectral radii for rho in [3, 20]", criterion_integer_radii);
    run_criterion(6, "proof pairs with clique sizes {2,3}", criterion_theorem_proof_pairs);
    run_criterion(7, "coalescence characteristic polynomial identity", criterion_coalescence_identity);
    run_criterion(8, "radius monotonicity and bounds over the n <= 7 corpus", criterion_monotonicity_corpus);
    run_criterion(9, "redundancy limit behavior along beta", criterion_limit_behavior);
    run_criterion(10, "fast path vs oracle on the parameter grid", criterion_oracle_equivalence);
    run_criterion(11, "sign condition and A = 0 across full sweeps", criterion_sign_condition);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 11 criteria passed" << std::endl;
    return 0;
}
