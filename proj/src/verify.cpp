#include "specred/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "specred/coincidence.hpp"
#include "specred/pineapple.hpp"
#include "specred/report.hpp"
#include "specred/spectrum.hpp"

namespace specred {

namespace {

IntPoly charpoly_without_vertex(const Graph& g, int v) {
    if (g.vertex_count() == 1) return IntPoly{1};  // empty graph
    VertexSet rest = g.all_vertices() & ~(VertexSet(1) << v);
    return g.induced(rest).charpoly();
}

Graph random_graph(std::mt19937& rng, int n) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(std::mt19937& rng, int n) {
    for (;;) {
        Graph g = random_graph(rng, n);
        if (g.is_connected()) return g;
    }
}

// All connected graphs on exactly n labeled vertices, one per isomorphism
// class.
std::vector<Graph> connected_classes(int n) {
    std::vector<Graph> out;
    std::set<std::vector<std::uint8_t>> seen;
    int pairs = n * (n - 1) / 2;
    for (VertexSet edges = 0; edges < (VertexSet(1) << pairs); ++edges) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((edges >> bit) & 1) g.add_edge(u, v);
        if (!g.is_connected()) continue;
        if (seen.insert(g.canonical_form()).second) out.push_back(std::move(g));
    }
    return out;
}

bool check_coalescence_identity(const Graph& g, int u, const Graph& h, int v) {
    Graph gh = Graph::coalescence(g, u, h, v);
    IntPoly left = gh.charpoly();
    IntPoly pg = g.charpoly();
    IntPoly ph = h.charpoly();
    IntPoly pgu = charpoly_without_vertex(g, u);
    IntPoly phv = charpoly_without_vertex(h, v);
    IntPoly right = pg * phv + pgu * ph - IntPoly::identity() * pgu * phv;
    return left == right;
}

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        return {name, true, detail};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

const CoincidencePair* find_pair(const std::vector<CoincidencePair>& pairs, PineappleParams a,
                                 PineappleParams b) {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    for (const auto& pair : pairs)
        if (pair.sorted_params() == key) return &pair;
    return nullptr;
}

std::vector<CheckResult> suite_examples() {
    std::vector<CheckResult> results;

    results.push_back(run_check("two-common catalog contains (P(16,44), P(8,220))", [] {
        auto pairs = enumerate_two_common(22);
        const auto* pair = find_pair(pairs, PineappleParams(16, 44), PineappleParams(8, 220));
        require(pair != nullptr, "pair not found");
        require(pair->shared_poly == IntPoly{88, -21, 1}, "shared polynomial is not x^2 - 21x + 88");
        require(pair->shared.size() == 2, "expected two shared values");
        require(pair->shared[0].value.decimal(3) == "5.783", "smaller shared value decimal");
        require(pair->shared[1].value.decimal(3) == "15.217", "larger shared value decimal");
        return "shared minimal polynomial " + pair->shared_poly.to_string();
    }));

    results.push_back(run_check("one-common scan at rho=11, r=11, s=2 yields both catalog pairs", [] {
        auto scan = one_common_candidates(11, SlopeParams(11, 2));
        require(scan.skipped_reason.empty(), "scan skipped: " + scan.skipped_reason);
        const auto* radius_pair = find_pair(scan.pairs, PineappleParams(7, 110), PineappleParams(9, 99));
        require(radius_pair != nullptr, "(P(7,110), P(9,99)) not found");
        require(radius_pair->kind == CoincidenceKind::OneCommonRadius, "wrong kind for the radius pair");
        require(radius_pair->shared.size() == 1 &&
                    radius_pair->shared[0].value.equals_rational(Rat(11)),
                "shared value must be exactly 11");
        const auto* other_pair = find_pair(scan.pairs, PineappleParams(17, 165), PineappleParams(19, 154));
        require(other_pair != nullptr, "(P(17,165), P(19,154)) not found");
        require(other_pair->kind == CoincidenceKind::OneCommonNonRadius, "wrong kind for the non-radius pair");
        return "found " + std::to_string(scan.pairs.size()) + " pairs at rho=11, k=11/2";
    }));

    results.push_back(run_check("cubic critical points of P(7,110) and P(9,99) near 8.10 and 8.74", [] {
        auto within = [](const AlgebraicNumber& value, long cents) {
            Rat tol = make_rat(1, 100);
            Rat target = make_rat(cents, 100);
            return value.compare_to_rational(target - tol) != Order::LT &&
                   value.compare_to_rational(target + tol) != Order::GT;
        };
        AlgebraicNumber c1 = pineapple_critical_point(PineappleParams(7, 110));
        AlgebraicNumber c2 = pineapple_critical_point(PineappleParams(9, 99));
        require(within(c1, 810), "critical point of P(7,110): " + c1.decimal(4));
        require(within(c2, 874), "critical point of P(9,99): " + c2.decimal(4));
        return "critical points " + c1.decimal(4) + " and " + c2.decimal(4);
    }));

    return results;
}

std::vector<CheckResult> suite_lemmas() {
    std::vector<CheckResult> results;

    results.push_back(run_check("coalescence characteristic polynomial identity (200 random pairs)", [] {
        std::mt19937 rng(20240915);
        std::uniform_int_distribution<int> size_dist(1, 6);
        for (int trial = 0; trial < 200; ++trial) {
            Graph g = random_graph(rng, size_dist(rng));
            Graph h = random_graph(rng, size_dist(rng));
            std::uniform_int_distribution<int> gu(0, g.vertex_count() - 1);
            std::uniform_int_distribution<int> hv(0, h.vertex_count() - 1);
            int u = gu(rng);
            int v = hv(rng);
            require(check_coalescence_identity(g, u, h, v),
                    "identity failed on trial " + std::to_string(trial));
        }
        return std::string("exact polynomial equality on all trials");
    }));

    results.push_back(run_check("radius monotonicity and counting bounds over a small corpus", [] {
        std::vector<Graph> corpus;
        for (int n = 1; n <= 5; ++n) {
            auto classes = connected_classes(n);
            corpus.insert(corpus.end(), classes.begin(), classes.end());
        }
        std::mt19937 rng(777);
        for (int i = 0; i < 20; ++i) corpus.push_back(random_connected_graph(rng, 6));
        for (int i = 0; i < 10; ++i) corpus.push_back(random_connected_graph(rng, 7));

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
                        "proper induced subgraph radius not strictly smaller");
            }
        }
        return "corpus size " + std::to_string(corpus.size());
    }));

    results.push_back(run_check("factored characteristic polynomial of P(alpha,beta) on a grid", [] {
        for (int alpha = 2; alpha <= 7; ++alpha) {
            for (int beta = 0; beta <= 6; ++beta) {
                PineappleParams p(alpha, beta);
                IntPoly actual = build_pineapple(p).charpoly();
                IntPoly expected;
                if (beta == 0) {
                    expected = IntPoly{-(alpha - 1), 1};
                    IntPoly xp1{1, 1};
                    for (int i = 0; i < alpha - 1; ++i) expected = expected * xp1;
                } else {
                    expected = pineapple_cubic(p).shifted_up(static_cast<std::size_t>(beta - 1));
                    IntPoly xp1{1, 1};
                    for (int i = 0; i < alpha - 2; ++i) expected = expected * xp1;
                }
                require(actual == expected, "factorization mismatch for " + p.to_string());
            }
        }
        return std::string("exact equality for 2<=alpha<=7, 0<=beta<=6");
    }));

    return results;
}

std::vector<CheckResult> suite_oracle() {
    std::vector<CheckResult> results;
    results.push_back(run_check("fast path matches the brute-force oracle on 2<=alpha<=5, 0<=beta<=6", [] {
        SpectrumOptions options;
        options.max_n = 12;
        for (int alpha = 2; alpha <= 5; ++alpha) {
            for (int beta = 0; beta <= 6; ++beta) {
                PineappleParams p(alpha, beta);
                SpectrumReport oracle = complementarity_spectrum(build_pineapple(p), options);
                require(oracle.b == pineapple_b_count(p), "b mismatch for " + p.to_string());
                require(oracle.c == pineapple_c_count(p), "c mismatch for " + p.to_string());
                require(oracle.redundancy == pineapple_redundancy(p), "r mismatch for " + p.to_string());
            }
        }
        return std::string("b, c, r agree on the whole grid");
    }));
    return results;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
    if (suite == "examples") return suite_examples();
    if (suite == "lemmas") return suite_lemmas();
    if (suite == "oracle") return suite_oracle();
    throw std::invalid_argument("unknown verify suite: " + suite +
                                " (expected examples, lemmas, or oracle)");
}

bool report_checks(const std::vector<CheckResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "ok   " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
        all = all && r.passed;
    }
    return all;
}

}  // namespace specred
