#ifndef SPECRED_PINEAPPLE_HPP
#define SPECRED_PINEAPPLE_HPP

#include <cstdint>
#include <vector>

#include "specred/algebraic.hpp"
#include "specred/graph.hpp"

namespace specred {

// Closed-form spectral data of P(alpha, beta). The characteristic
// polynomial factors as x^(beta-1) * (x+1)^(alpha-2) * cubic; for beta = 0
// the x-exponent is -1 and the factor cancels against the cubic's root at 0.
struct PineappleSpectrum {
    PineappleParams params;
    IntPoly cubic;
    AlgebraicNumber radius;
    int x_power;       // beta - 1, may be -1
    int x_plus1_power;  // alpha - 2
};

// x^3 - (alpha-2) x^2 - (alpha+beta-1) x + beta (alpha-2)
IntPoly pineapple_cubic(const PineappleParams& p);

// Largest real root of the cubic; the degenerate P(2,0) = K2 keeps the
// explicit radius 1 (the cubic x^3 - x reports the same value).
AlgebraicNumber pineapple_radius(const PineappleParams& p);

// (alpha-1)(beta+1) + 1, counting the single-vertex subgraph.
std::int64_t pineapple_b_count(const PineappleParams& p);

// The pineapple members { P(i,j) : 2 <= i <= alpha, 0 <= j <= beta } of the
// hereditary subgraph family; the single-vertex class is counted separately.
struct SubgraphFamily {
    std::vector<PineappleParams> pineapples;
    std::size_t size_with_k1() const { return pineapples.size() + 1; }
};

SubgraphFamily pineapple_subgraph_family(const PineappleParams& p);

// Groups of family members (size >= 2) sharing one spectral radius, found
// by pairwise exact comparison. Pairs are pruned by the sign condition: a
// coincidence requires (alpha2-alpha1)(beta2-beta1) < 0.
std::vector<std::vector<PineappleParams>> pineapple_collision_groups(const PineappleParams& p);

std::int64_t pineapple_c_count(const PineappleParams& p);

Rat pineapple_redundancy(const PineappleParams& p);

// Largest root of the cubic's derivative: past it the cubic is increasing,
// so a root above it is the largest one.
AlgebraicNumber pineapple_critical_point(const PineappleParams& p);

// Diagnostics accompanying a spectral-radius certificate. The Sturm
// ordering is authoritative; the shifted-cubic sign test and the
// critical-point comparison are recomputed as cross-checks and any
// disagreement between them and the certificate is flagged rather than
// assumed impossible.
struct RadiusCertificate {
    bool is_largest;                // Sturm-certified
    bool shifted_quadratic_positive;  // 3r^2 - 2r(alpha-2) - (alpha+beta-1) > 0
    bool above_critical_point;
    bool cross_check_disagreement;
};

// rho must be a root of the cubic of p; contract violation otherwise.
RadiusCertificate pineapple_radius_certificate(const PineappleParams& p, const AlgebraicNumber& rho);
bool is_pineapple_spectral_radius(const PineappleParams& p, const AlgebraicNumber& rho);

PineappleSpectrum pineapple_spectrum(const PineappleParams& p);

}  // namespace specred

#endif
