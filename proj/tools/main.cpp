#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "specred/report.hpp"
#include "specred/verify.hpp"

namespace {

using namespace specred;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::string read_graph6_input(const std::string& file) {
    std::string text;
    if (file.empty()) {
        std::getline(std::cin, text);
    } else {
        std::ifstream in(file);
        if (!in) throw parse_error("cannot open file: " + file);
        std::getline(in, text);
    }
    return text;
}

int cmd_spectrum(const std::string& file, int alpha, int beta, bool oracle, int digits, int max_n) {
    Json out;
    if (alpha > 0) {
        PineappleParams params(alpha, beta);
        out = pineapple_report_json(params, digits);
        if (oracle) {
            SpectrumOptions options;
            options.max_n = std::max(max_n, params.vertex_count());
            SpectrumReport report = complementarity_spectrum(build_pineapple(params), options);
            bool agrees = report.b == pineapple_b_count(params) && report.c == pineapple_c_count(params);
            out["oracle"] = {{"b", report.b}, {"c", report.c}, {"agrees", agrees}};
            if (!agrees) {
                std::cout << out.dump(2) << "\n";
                std::cerr << "specred: fast path disagrees with the oracle\n";
                return kExitVerifyFailed;
            }
        }
    } else {
        Graph g = Graph::parse_graph6(read_graph6_input(file));
        SpectrumOptions options;
        options.max_n = max_n;
        SpectrumReport report = complementarity_spectrum(g, options);
        out = spectrum_report_json(g, report, digits);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_search_two_common(long max_k, int digits, int jobs) {
    for (const auto& pair : enumerate_two_common(max_k, jobs))
        std::cout << coincidence_pair_json(pair, digits).dump() << "\n";
    return kExitOk;
}

int cmd_search_one_common(long max_rho, int digits, int jobs) {
    for (const auto& pair : search_one_common(max_rho, jobs))
        std::cout << coincidence_pair_json(pair, digits).dump() << "\n";
    return kExitOk;
}

// One CSV row per parameter value plus a leading comment naming the point
// past which b - c stays constant.
int cmd_limits(int alpha, int beta, int from, int to, bool sweep_beta, int digits) {
    if (from > to) throw parse_error("range start exceeds range end");
    struct Row {
        int value;
        std::int64_t b, c;
        Rat r;
    };
    std::vector<Row> rows;
    for (int v = from; v <= to; ++v) {
        PineappleParams p = sweep_beta ? PineappleParams(alpha, v) : PineappleParams(v, beta);
        std::int64_t b = pineapple_b_count(p);
        std::int64_t c = pineapple_c_count(p);
        rows.push_back({v, b, c, make_rat(Int(b), Int(c))});
    }
    int stable_from = rows.empty() ? from : rows.back().value;
    for (std::size_t i = rows.size(); i-- > 1;) {
        if (rows[i].b - rows[i].c != rows[i - 1].b - rows[i - 1].c) break;
        stable_from = rows[i - 1].value;
    }
    std::cout << "# b_minus_c_constant_from=" << stable_from << "\n";
    std::cout << (sweep_beta ? "beta" : "alpha") << ",b,c,b_minus_c,r_exact,r_decimal\n";
    for (const Row& row : rows)
        std::cout << row.value << "," << row.b << "," << row.c << "," << (row.b - row.c) << ","
                  << rational_string(row.r) << "," << decimal_string(row.r, digits) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    auto results = run_verify_suite(suite);
    bool passed = report_checks(results, std::cout);
    return passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact complementarity spectra and spectral redundancy of graphs"};
    app.require_subcommand(1);
    int digits = 6;
    int jobs = 1;
    app.add_option("--digits", digits, "decimal display precision (presentation only)")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for parameter sweeps")->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "complementarity spectrum of a graph");
    std::string file;
    int alpha = 0, beta = 0, max_n = 10;
    bool oracle = false;
    spectrum->add_option("--file", file, "read graph6 from this file instead of stdin");
    spectrum->add_option("--alpha", alpha, "pineapple clique size (enables the fast path)");
    spectrum->add_option("--beta", beta, "pineapple pendant count");
    spectrum->add_flag("--oracle", oracle, "cross-check the fast path against brute force");
    spectrum->add_option("--max-n", max_n, "vertex guard for the brute-force path")->capture_default_str();

    auto* search = app.add_subcommand("search", "coincidence-pair catalogs");
    auto* two_common = search->add_subcommand("two-common", "pairs sharing their two largest eigenvalues");
    long max_k = 0;
    two_common->add_option("--max-k", max_k, "largest k = alpha1 + alpha2 - 2 to scan")->required();
    auto* one_common = search->add_subcommand("one-common", "pairs sharing exactly one eigenvalue");
    long max_rho = 0;
    one_common->add_option("--max-rho", max_rho, "largest integer eigenvalue to scan")->required();
    search->require_subcommand(1);

    auto* limits = app.add_subcommand("limits", "redundancy curves along one parameter");
    int l_alpha = 0, l_beta = -1, beta_from = -1, beta_to = -1, alpha_from = -1, alpha_to = -1;
    limits->add_option("--alpha", l_alpha, "fixed clique size (sweep beta)");
    limits->add_option("--beta", l_beta, "fixed pendant count (sweep alpha)");
    limits->add_option("--beta-from", beta_from);
    limits->add_option("--beta-to", beta_to);
    limits->add_option("--alpha-from", alpha_from);
    limits->add_option("--alpha-to", alpha_to);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("--suite", suite, "examples, lemmas, or oracle")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(file, alpha, beta, oracle, digits, max_n);
        if (two_common->parsed()) return cmd_search_two_common(max_k, digits, jobs);
        if (one_common->parsed()) return cmd_search_one_common(max_rho, digits, jobs);
        if (limits->parsed()) {
            bool sweep_beta = l_alpha > 0;
            if (sweep_beta) {
                if (beta_from < 0 || beta_to < 0) throw parse_error("--beta-from/--beta-to required");
                return cmd_limits(l_alpha, 0, beta_from, beta_to, true, digits);
            }
            if (l_beta < 0 || alpha_from < 0 || alpha_to < 0)
                throw parse_error("either --alpha with a beta range or --beta with an alpha range");
            return cmd_limits(0, l_beta, alpha_from, alpha_to, false, digits);
        }
        if (verify->parsed()) return cmd_verify(suite);
    } catch (const guard_error& e) {
        std::cerr << "specred: " << e.what() << "\n";
        return kExitGuard;
    } catch (const parse_error& e) {
        std::cerr << "specred: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "specred: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "specred: internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
