#ifndef SPECRED_COINCIDENCE_HPP
#define SPECRED_COINCIDENCE_HPP

#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specred/algebraic.hpp"
#include "specred/graph.hpp"
#include "specred/pineapple.hpp"

namespace specred {

enum class CoincidenceKind { TwoCommonLargest, OneCommonRadius, OneCommonNonRadius };

std::string to_string(CoincidenceKind kind);

// Integer certificate that the cubics of two pineapple graphs share a
// quadratic factor: a = alpha1 - alpha2, k = alpha1 + alpha2 - 2 (same
// parity), and the matched residue case of k mod 4 with its witness r from
// a^2 - 1 = (4r + offset)(k - 1).
struct TwoCommonWitness {
    long a;
    long k;
    int mod4_case;  // 0..3 for k = 0..3 (mod 4)
    long r;
};

// Candidate slope k = r/s of a one-common-root pair, r and s coprime
// positive integers.
struct SlopeParams {
    long r;
    long s;
    SlopeParams(long r_, long s_) : r(r_), s(s_) {
        if (r < 1 || s < 1) throw std::invalid_argument("slope parameters must be positive");
        if (std::gcd(r, s) != 1) throw std::invalid_argument("slope parameters must be coprime");
    }
};

struct OneCommonWitness {
    long rho;
    SlopeParams slope;
    long m;
    long n;
};

// Multiplicity bookkeeping for a shared value inside the full adjacency
// spectra of the two members (the cubic-level claim is authoritative; the
// full-spectrum view is reported alongside it).
struct SharedValue {
    AlgebraicNumber value;
    int multiplicity_in_p1;
    int multiplicity_in_p2;
    bool is_radius_of_p1;
    bool is_radius_of_p2;
};

struct CoincidencePair {
    PineappleParams p1;
    PineappleParams p2;
    CoincidenceKind kind;
    std::vector<SharedValue> shared;   // ascending
    IntPoly shared_poly;               // gcd of the two cubics, degree == shared.size()
    Int a_scaled;                      // s^2 * (k(alpha1+alpha2) - k(k+2)); zero iff two common roots
    std::variant<TwoCommonWitness, OneCommonWitness> witness;
    // Set when the factor-sign prediction of the kind disagrees with the
    // Sturm certification; logged for investigation, never silently fixed.
    bool sign_prediction_mismatch = false;

    std::pair<PineappleParams, PineappleParams> sorted_params() const {
        return p1 < p2 ? std::make_pair(p1, p2) : std::make_pair(p2, p1);
    }
};

// Residue-case test behind the two-common family: for a and k of the same
// parity the witness exists iff k(k-a)(k-a-2)/(4(k-1)) is an integer,
// cross-validated by the direct divisibility test. Mixed parity is
// rejected (no witness).
std::optional<TwoCommonWitness> check_mod4(long a, long k);

// Builds the pair alpha1 = (k+a+2)/2, alpha2 = (k-a+2)/2 with
// beta_i = k(alpha_j - 1)(alpha_j - 2)/(k-1); nullopt when alpha2 < 2.
// The shared quadratic is re-verified by exact polynomial gcd.
std::optional<CoincidencePair> pair_from_ak(const TwoCommonWitness& witness);

// All two-common pairs with 3 <= k <= max_k, deduplicated, sorted by (k, a).
std::vector<CoincidencePair> enumerate_two_common(long max_k, int jobs = 1);

struct OneCommonScan {
    std::vector<CoincidencePair> pairs;
    std::string skipped_reason;  // set when a precondition ruled the scan out
};

// Pairs sharing exactly the integer eigenvalue rho with slope r/s: every
// factorization s*rho*(rho+1)/r = m*n over both sign patterns, filtered by
// integrality and graph validity, each re-verified by exact gcd.
OneCommonScan one_common_candidates(long rho, const SlopeParams& slope);

// Union of one_common_candidates over rho <= max_rho, s | rho+1,
// r | rho(rho+1), gcd(r, s) = 1; deduplicated as unordered pairs.
std::vector<CoincidencePair> search_one_common(long max_rho, int jobs = 1);

// The constructive pair (P(rho+1, 0), P(rho, rho(rho+1)/2)) certifying that
// every integer rho >= 3 is a pineapple spectral radius.
CoincidencePair integer_radius_family(long rho);

}  // namespace specred

#endif
