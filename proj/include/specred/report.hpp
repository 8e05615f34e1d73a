#ifndef SPECRED_REPORT_HPP
#define SPECRED_REPORT_HPP

#include <json.hpp>

#include <string>

#include "specred/coincidence.hpp"
#include "specred/pineapple.hpp"
#include "specred/spectrum.hpp"

namespace specred {

// All reports use insertion-ordered JSON with big integers and rationals
// rendered as decimal strings, so identical inputs produce byte-identical
// output.
using Json = nlohmann::ordered_json;

inline constexpr int kCanonicalFormatVersion = 1;

Json tool_info();

Json to_json(const AlgebraicNumber& value, int digits = 6);
Json to_json(const IntPoly& poly);
Json to_json(const PineappleParams& params);

Json spectrum_report_json(const Graph& g, const SpectrumReport& report, int digits = 6);

// Fast-path report for P(alpha, beta): factored characteristic polynomial,
// counts, and the family collision groups (labeled by parameters).
Json pineapple_report_json(const PineappleParams& params, int digits = 6);

Json coincidence_pair_json(const CoincidencePair& pair, int digits = 6);

std::string hex_bytes(const std::vector<std::uint8_t>& bytes);

}  // namespace specred

#endif
