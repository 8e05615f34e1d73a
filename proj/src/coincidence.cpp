#include "specred/coincidence.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

namespace specred {

std::string to_string(CoincidenceKind kind) {
    switch (kind) {
        case CoincidenceKind::TwoCommonLargest: return "two-common-largest";
        case CoincidenceKind::OneCommonRadius: return "one-common-radius";
        case CoincidenceKind::OneCommonNonRadius: return "one-common-non-radius";
    }
    return "?";
}

namespace {

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int multiplicity_in_poly(const AlgebraicNumber& v, const IntPoly& p) {
    int mult = 0;
    IntPoly d = p;
    while (!d.is_zero() && v.sign_of(d) == 0) {
        ++mult;
        d = d.derivative();
    }
    return mult;
}

// Multiplicity of v in the full adjacency spectrum of P(alpha, beta):
// beta-1 zeros and alpha-2 eigenvalues -1 on top of the cubic's roots, with
// the beta = 0 case collapsing to the complete-graph spectrum.
int multiplicity_in_full_spectrum(const AlgebraicNumber& v, const PineappleParams& p) {
    bool is_zero = v.equals_rational(Rat(0));
    bool is_minus_one = v.equals_rational(Rat(-1));
    if (p.beta == 0) {
        int mult = 0;
        if (v.equals_rational(Rat(p.alpha - 1))) mult += 1;
        if (is_minus_one) mult += p.alpha - 1;
        return mult;
    }
    int mult = multiplicity_in_poly(v, pineapple_cubic(p));
    if (is_zero) mult += p.beta - 1;
    if (is_minus_one) mult += p.alpha - 2;
    return mult;
}

SharedValue make_shared_value(AlgebraicNumber v, const PineappleParams& p1, const PineappleParams& p2) {
    SharedValue sv{std::move(v), 0, 0, false, false};
    sv.multiplicity_in_p1 = multiplicity_in_full_spectrum(sv.value, p1);
    sv.multiplicity_in_p2 = multiplicity_in_full_spectrum(sv.value, p2);
    sv.is_radius_of_p1 = AlgebraicNumber::compare(sv.value, pineapple_radius(p1)) == Order::EQ;
    sv.is_radius_of_p2 = AlgebraicNumber::compare(sv.value, pineapple_radius(p2)) == Order::EQ;
    return sv;
}

IntPoly linear_root(long rho) { return IntPoly{-rho, 1}; }

template <typename F>
std::vector<CoincidencePair> run_sweep(long lo, long hi, int jobs, F&& per_value) {
    std::vector<CoincidencePair> all;
    if (jobs <= 1 || hi - lo < 2) {
        for (long v = lo; v <= hi; ++v) {
            auto part = per_value(v);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    long span = hi - lo + 1;
    long chunks = std::min<long>(jobs, span);
    std::vector<std::future<std::vector<CoincidencePair>>> futures;
    for (long c = 0; c < chunks; ++c) {
        long a = lo + span * c / chunks;
        long b = lo + span * (c + 1) / chunks - 1;
        futures.push_back(std::async(std::launch::async, [a, b, &per_value] {
            std::vector<CoincidencePair> part;
            for (long v = a; v <= b; ++v) {
                auto piece = per_value(v);
                part.insert(part.end(), piece.begin(), piece.end());
            }
            return part;
        }));
    }
    for (auto& f : futures) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace

std::optional<TwoCommonWitness> check_mod4(long a, long k) {
    if (k < 3) throw std::invalid_argument("check_mod4: k must be >= 3");
    if (a == 0) throw std::invalid_argument("check_mod4: a must be nonzero");
    // Mixed parity can never yield integer clique sizes (k+a+2)/2.
    if (((a % 2) + 2) % 2 != ((k % 2) + 2) % 2) return std::nullopt;

    Int numerator = Int(k) * Int(k - a) * Int(k - a - 2);
    Int modulus = Int(4) * Int(k - 1);
    bool divisible = numerator % modulus == 0;

    static const long offsets[4] = {1, 2, -1, 0};  // k mod 4 = 0, 1, 2, 3
    int mod4_case = static_cast<int>(((k % 4) + 4) % 4);
    long offset = offsets[mod4_case];

    long t = a * a - 1;
    std::optional<TwoCommonWitness> witness;
    if (t % (k - 1) == 0) {
        long q = t / (k - 1);
        long delta = q - offset;
        if (((delta % 4) + 4) % 4 == 0) witness = TwoCommonWitness{a, k, mod4_case, delta / 4};
    }
    if (witness.has_value() != divisible)
        throw std::logic_error("check_mod4: residue case disagrees with the divisibility test");
    return witness;
}

std::optional<CoincidencePair> pair_from_ak(const TwoCommonWitness& witness) {
    long a = witness.a;
    long k = witness.k;
    long alpha1 = (k + a + 2) / 2;
    long alpha2 = (k - a + 2) / 2;
    if (alpha1 < 2 || alpha2 < 2) return std::nullopt;

    auto beta_for = [&](long alpha_other) -> Int {
        Int num = Int(k) * Int(alpha_other - 1) * Int(alpha_other - 2);
        if (num % (k - 1) != 0) throw std::logic_error("two-common beta is not an integer");
        return Int(num / (k - 1));
    };
    Int beta1 = beta_for(alpha2);
    Int beta2 = beta_for(alpha1);
    if (!beta1.fits_slong_p() || !beta2.fits_slong_p()) throw std::overflow_error("two-common beta too large");

    PineappleParams p1(static_cast<int>(alpha1), static_cast<int>(beta1.get_si()));
    PineappleParams p2(static_cast<int>(alpha2), static_cast<int>(beta2.get_si()));

    // rho^2 - (k-1) rho - (beta1 - k(alpha2 - 2)) = 0
    Int c0 = -(beta1 - Int(k) * Int(alpha2 - 2));
    IntPoly quadratic(std::vector<Int>{c0, Int(-(k - 1)), Int(1)});

    IntPoly g = IntPoly::gcd(pineapple_cubic(p1), pineapple_cubic(p2));
    if (g.degree() != 2 || g != quadratic.normalized())
        throw std::logic_error("two-common pair failed the exact gcd verification");

    auto roots = AlgebraicNumber::isolate_real_roots(quadratic);
    if (roots.size() != 2) throw std::logic_error("two-common quadratic must have two real roots");

    CoincidencePair pair{p1,
                         p2,
                         CoincidenceKind::TwoCommonLargest,
                         {},
                         g,
                         Int(0),
                         witness,
                         false};
    for (auto& root : roots) pair.shared.push_back(make_shared_value(std::move(root), p1, p2));

    // The two shared roots must be the top two roots of each member's cubic.
    for (const auto& member : {p1, p2}) {
        auto cubic_roots = AlgebraicNumber::isolate_real_roots(pineapple_cubic(member));
        if (cubic_roots.size() < 2) throw std::logic_error("two-common member cubic has too few real roots");
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& expected = cubic_roots[cubic_roots.size() - 2 + i];
            if (AlgebraicNumber::compare(pair.shared[i].value, expected) != Order::EQ)
                pair.sign_prediction_mismatch = true;
        }
    }
    return pair;
}

std::vector<CoincidencePair> enumerate_two_common(long max_k, int jobs) {
    if (max_k < 3) throw std::invalid_argument("enumerate_two_common: max_k must be >= 3");
    auto per_k = [](long k) {
        std::vector<CoincidencePair> found;
        for (long a = (k % 2 == 0) ? 2 : 1; a <= k - 2; a += 2) {
            auto witness = check_mod4(a, k);
            if (!witness) continue;
            auto pair = pair_from_ak(*witness);
            if (pair) found.push_back(std::move(*pair));
        }
        return found;
    };
    auto pairs = run_sweep(3, max_k, jobs, per_k);
    std::sort(pairs.begin(), pairs.end(), [](const CoincidencePair& x, const CoincidencePair& y) {
        const auto& wx = std::get<TwoCommonWitness>(x.witness);
        const auto& wy = std::get<TwoCommonWitness>(y.witness);
        if (wx.k != wy.k) return wx.k < wy.k;
        return wx.a < wy.a;
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const CoincidencePair& x, const CoincidencePair& y) {
                                return x.sorted_params() == y.sorted_params();
                            }),
                pairs.end());
    return pairs;
}

namespace {

// Assemble and verify one candidate pair from its factor assignment. The
// exact gcd check is the gate: an arithmetic slip upstream cannot reach the
// catalog.
std::optional<CoincidencePair> build_one_common_pair(long rho, const SlopeParams& slope, long m, long n,
                                                     long alpha1, long beta1, long alpha2, long beta2) {
    if (alpha1 == alpha2 && beta1 == beta2) return std::nullopt;
    long r = slope.r;
    long s = slope.s;
    Int a_scaled = Int(r) * (Int(s) * Int(alpha1 + alpha2) - Int(r) - Int(2) * Int(s));
    if (a_scaled == 0) return std::nullopt;  // two common roots; the two-common sweep owns it

    PineappleParams p1(static_cast<int>(alpha1), static_cast<int>(beta1));
    PineappleParams p2(static_cast<int>(alpha2), static_cast<int>(beta2));
    if (p2 < p1) std::swap(p1, p2);

    if (Int(s) * Int(p2.beta - p1.beta) != Int(r) * Int(p1.alpha - p2.alpha))
        throw std::logic_error("one-common slope consistency failed");

    IntPoly g = IntPoly::gcd(pineapple_cubic(p1), pineapple_cubic(p2));
    if (g != IntPoly{-rho, 1})
        throw std::logic_error("one-common pair failed the exact gcd verification for " +
                               p1.to_string() + ", " + p2.to_string());

    AlgebraicNumber rho_value = AlgebraicNumber::from_rational(Rat(rho));
    bool largest1 = is_pineapple_spectral_radius(p1, rho_value);
    bool largest2 = is_pineapple_spectral_radius(p2, rho_value);
    CoincidenceKind kind =
        (largest1 && largest2) ? CoincidenceKind::OneCommonRadius : CoincidenceKind::OneCommonNonRadius;
    bool predicted_radius = m < 0 && n < 0;
    bool mismatch =
        (kind == CoincidenceKind::OneCommonRadius) != predicted_radius || largest1 != largest2;

    return CoincidencePair{p1,
                           p2,
                           kind,
                           {make_shared_value(rho_value, p1, p2)},
                           g,
                           a_scaled,
                           OneCommonWitness{rho, slope, m, n},
                           mismatch};
}

void sort_and_dedup(std::vector<CoincidencePair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const CoincidencePair& x, const CoincidencePair& y) {
        auto kx = std::make_tuple(x.p1.alpha, x.p1.beta, x.p2.alpha, x.p2.beta);
        auto ky = std::make_tuple(y.p1.alpha, y.p1.beta, y.p2.alpha, y.p2.beta);
        return kx < ky;
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const CoincidencePair& x, const CoincidencePair& y) {
                                return x.sorted_params() == y.sorted_params();
                            }),
                pairs.end());
}

}  // namespace

OneCommonScan one_common_candidates(long rho, const SlopeParams& slope) {
    if (rho < 1) throw std::invalid_argument("one_common_candidates: rho must be >= 1");
    if (rho > 100000) throw guard_error("one_common_candidates: rho guard exceeded");
    OneCommonScan scan;
    long r = slope.r;
    long s = slope.s;
    if ((rho * (rho + 1)) % r != 0) {
        scan.skipped_reason = "r does not divide rho(rho+1)";
        return scan;
    }

    long product = s * rho * (rho + 1) / r;
    for (long d = 1; d * d <= product; ++d) {
        if (product % d != 0) continue;
        for (int sign : {-1, +1}) {
            long m = sign * d;
            long n = sign * (product / d);
            // Both betas are integers exactly when s divides both factors.
            if (m % s != 0 || n % s != 0) continue;
            long alpha1 = rho + 2 + m;
            long alpha2 = rho + 2 + n;
            if (alpha1 < 2 || alpha2 < 2) continue;
            long beta1 = rho * (rho + 1) + r * n / s;
            long beta2 = rho * (rho + 1) + r * m / s;
            if (beta1 < 0 || beta2 < 0) continue;
            auto pair = build_one_common_pair(rho, slope, m, n, alpha1, beta1, alpha2, beta2);
            if (pair) scan.pairs.push_back(std::move(*pair));
        }
    }
    sort_and_dedup(scan.pairs);
    return scan;
}

std::vector<CoincidencePair> search_one_common(long max_rho, int jobs) {
    if (max_rho < 1) throw std::invalid_argument("search_one_common: max_rho must be >= 1");
    // Member-wise sweep: alpha = rho + 2 + m and beta = rho(rho+1) + rho(rho+1)/m
    // give a pineapple with eigenvalue rho for every divisor m of rho(rho+1)
    // with m >= -rho. Any same-sign pair of members is a candidate; its slope
    // r/s is the reduced form of rho(rho+1)/(m n).
    auto per_rho = [](long rho) {
        std::vector<CoincidencePair> found;
        long product = rho * (rho + 1);
        struct Member {
            long m;
            long alpha;
            long beta;
        };
        std::vector<Member> members;
        for (long d : divisors(product))
            for (long sign : {-1L, 1L}) {
                long m = sign * d;
                if (m < -rho) continue;  // alpha >= 2
                members.push_back({m, rho + 2 + m, product + product / m});
            }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const Member& a = members[i];
                const Member& b = members[j];
                if ((a.m < 0) != (b.m < 0)) continue;  // opposite signs give k < 0
                long g = std::gcd(product, a.m * b.m);
                SlopeParams slope(product / g, std::abs(a.m * b.m) / g);
                auto pair =
                    build_one_common_pair(rho, slope, a.m, b.m, a.alpha, a.beta, b.alpha, b.beta);
                if (pair) found.push_back(std::move(*pair));
            }
        sort_and_dedup(found);
        return found;
    };
    auto pairs = run_sweep(1, max_rho, jobs, per_rho);

    std::map<std::pair<PineappleParams, PineappleParams>, CoincidencePair> unique;
    for (auto& pair : pairs) unique.emplace(pair.sorted_params(), std::move(pair));
    std::vector<CoincidencePair> out;
    out.reserve(unique.size());
    for (auto& [key, pair] : unique) out.push_back(std::move(pair));
    std::sort(out.begin(), out.end(), [](const CoincidencePair& x, const CoincidencePair& y) {
        auto kx = std::make_tuple(x.p1.alpha, x.p1.beta, x.p2.alpha, x.p2.beta);
        auto ky = std::make_tuple(y.p1.alpha, y.p1.beta, y.p2.alpha, y.p2.beta);
        return kx < ky;
    });
    return out;
}

CoincidencePair integer_radius_family(long rho) {
    if (rho < 3) throw std::invalid_argument("integer_radius_family: rho must be >= 3");
    long r = rho * (rho + 1) / 2;
    PineappleParams p1(static_cast<int>(rho + 1), 0);
    PineappleParams p2(static_cast<int>(rho), static_cast<int>(r));

    IntPoly g = IntPoly::gcd(pineapple_cubic(p1), pineapple_cubic(p2));
    if (g != linear_root(rho)) throw std::logic_error("integer radius pair failed the gcd verification");

    AlgebraicNumber rho_value = AlgebraicNumber::from_rational(Rat(rho));
    if (!is_pineapple_spectral_radius(p1, rho_value) || !is_pineapple_spectral_radius(p2, rho_value))
        throw std::logic_error("integer radius pair failed the Sturm certification");

    Int a_scaled = Int(r) * (Int(p1.alpha + p2.alpha) - Int(r) - Int(2));
    return CoincidencePair{p1,
                           p2,
                           CoincidenceKind::OneCommonRadius,
                           {make_shared_value(rho_value, p1, p2)},
                           g,
                           a_scaled,
                           OneCommonWitness{rho, SlopeParams(r, 1), -1, -2},
                           false};
}

}  // namespace specred
