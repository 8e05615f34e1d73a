#ifndef SPECRED_SPECTRUM_HPP
#define SPECRED_SPECTRUM_HPP

#include <cstdint>
#include <vector>

#include "specred/algebraic.hpp"
#include "specred/graph.hpp"

namespace specred {

struct SpectrumOptions {
    // Isomorphism guard: inputs with more vertices are rejected. Raising it
    // is safe but enumeration cost grows with 2^n.
    int max_n = 10;
};

struct SpectrumClass {
    std::vector<std::uint8_t> canonical;
    VertexSet representative;
    int vertex_count;
    AlgebraicNumber radius;
};

// Brute-force complementarity spectrum of a connected graph: one class per
// isomorphism type of connected induced subgraph, deduplicated radii, and
// the collision groups of distinct classes sharing one radius.
struct SpectrumReport {
    std::int64_t b = 0;
    std::int64_t c = 0;
    Rat redundancy;
    std::vector<SpectrumClass> classes;             // sorted by (n, canonical form)
    std::vector<std::vector<std::size_t>> collisions;  // index groups, size >= 2
};

SpectrumReport complementarity_spectrum(const Graph& g, const SpectrumOptions& options = {});

// Eq-style sanity bounds: c <= b and n <= b <= 2^n - 1.
bool verify_bounds(const Graph& g, const SpectrumOptions& options = {});

}  // namespace specred

#endif
