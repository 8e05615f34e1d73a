#include "specred/report.hpp"

namespace specred {

Json tool_info() {
    Json j;
    j["name"] = "specred";
    j["version"] = version();
    j["canonical_format"] = kCanonicalFormatVersion;
    return j;
}

Json to_json(const IntPoly& poly) {
    Json coeffs = Json::array();
    for (const Int& c : poly.coeffs()) coeffs.push_back(c.get_str());
    Json j;
    j["coefficients"] = coeffs;  // low to high
    j["text"] = poly.to_string();
    return j;
}

Json to_json(const AlgebraicNumber& value, int digits) {
    Json j;
    Json coeffs = Json::array();
    for (const Int& c : value.minpoly().coeffs()) coeffs.push_back(c.get_str());
    j["minpoly"] = coeffs;
    AlgebraicNumber narrow = value;
    if (!narrow.is_rational()) {
        Int den(10);
        mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(digits + 2));
        narrow.refine_to(make_rat(1, den));
    }
    j["interval"] = {{"lo", exact_decimal_string(narrow.lo())}, {"hi", exact_decimal_string(narrow.hi())}};
    j["decimal"] = value.decimal(digits);
    if (value.is_rational()) j["exact"] = rational_string(value.rational_value());
    return j;
}

Json to_json(const PineappleParams& params) {
    Json j;
    j["alpha"] = params.alpha;
    j["beta"] = params.beta;
    return j;
}

std::string hex_bytes(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

namespace {

Json vertex_list(VertexSet s) {
    Json out = Json::array();
    for (int v = 0; v < 64; ++v)
        if ((s >> v) & 1) out.push_back(v);
    return out;
}

Json redundancy_json(std::int64_t b, std::int64_t c) {
    Rat r = make_rat(Int(b), Int(c));
    Json j;
    j["exact"] = rational_string(r);
    j["decimal"] = decimal_string(r, 6);
    return j;
}

}  // namespace

Json spectrum_report_json(const Graph& g, const SpectrumReport& report, int digits) {
    Json j;
    j["tool"] = tool_info();
    j["input"] = {{"kind", "graph6"}, {"graph6", g.to_graph6()}, {"n", g.vertex_count()}};
    j["b"] = report.b;
    j["c"] = report.c;
    j["redundancy"] = redundancy_json(report.b, report.c);
    Json classes = Json::array();
    for (const auto& cls : report.classes) {
        Json cj;
        cj["n"] = cls.vertex_count;
        cj["canonical"] = hex_bytes(cls.canonical);
        cj["representative"] = vertex_list(cls.representative);
        cj["graph6"] = g.induced(cls.representative).to_graph6();
        cj["radius"] = to_json(cls.radius, digits);
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    Json collisions = Json::array();
    for (const auto& group : report.collisions) {
        Json gj;
        gj["radius"] = to_json(report.classes[group.front()].radius, digits);
        gj["classes"] = group;
        collisions.push_back(std::move(gj));
    }
    j["collisions"] = std::move(collisions);
    return j;
}

Json pineapple_report_json(const PineappleParams& params, int digits) {
    PineappleSpectrum spec = pineapple_spectrum(params);
    Json j;
    j["tool"] = tool_info();
    j["input"] = {{"kind", "pineapple"}, {"alpha", params.alpha}, {"beta", params.beta},
                  {"n", params.vertex_count()}};
    j["cubic"] = to_json(spec.cubic);
    j["charpoly_factored"] = {{"x_power", spec.x_power},
                              {"x_plus_1_power", spec.x_plus1_power},
                              {"cubic", spec.cubic.to_string()}};
    j["radius"] = to_json(spec.radius, digits);
    std::int64_t b = pineapple_b_count(params);
    auto groups = pineapple_collision_groups(params);
    std::int64_t excess = 0;
    for (const auto& group : groups) excess += static_cast<std::int64_t>(group.size()) - 1;
    std::int64_t c = b - excess;
    j["b"] = b;
    j["c"] = c;
    j["redundancy"] = redundancy_json(b, c);
    Json collisions = Json::array();
    for (const auto& group : groups) {
        Json gj;
        gj["radius"] = to_json(pineapple_radius(group.front()), digits);
        Json members = Json::array();
        for (const auto& member : group) members.push_back(to_json(member));
        gj["members"] = std::move(members);
        collisions.push_back(std::move(gj));
    }
    j["collisions"] = std::move(collisions);
    return j;
}

Json coincidence_pair_json(const CoincidencePair& pair, int digits) {
    Json j;
    j["p1"] = to_json(pair.p1);
    j["p2"] = to_json(pair.p2);
    j["kind"] = to_string(pair.kind);
    Json shared = Json::array();
    for (const auto& sv : pair.shared) {
        Json sj;
        sj["value"] = to_json(sv.value, digits);
        sj["multiplicity_in_p1"] = sv.multiplicity_in_p1;
        sj["multiplicity_in_p2"] = sv.multiplicity_in_p2;
        sj["is_radius_of_p1"] = sv.is_radius_of_p1;
        sj["is_radius_of_p2"] = sv.is_radius_of_p2;
        shared.push_back(std::move(sj));
    }
    j["shared"] = std::move(shared);
    j["shared_poly"] = to_json(pair.shared_poly);
    j["a_scaled"] = pair.a_scaled.get_str();
    if (const auto* w = std::get_if<TwoCommonWitness>(&pair.witness)) {
        j["witness"] = {{"type", "two-common"},
                        {"a", w->a},
                        {"k", w->k},
                        {"mod4_case", w->mod4_case},
                        {"r", w->r}};
    } else {
        const auto& ow = std::get<OneCommonWitness>(pair.witness);
        j["witness"] = {{"type", "one-common"}, {"rho", ow.rho}, {"r", ow.slope.r},
                        {"s", ow.slope.s},      {"m", ow.m},     {"n", ow.n}};
    }
    if (pair.sign_prediction_mismatch) j["sign_prediction_mismatch"] = true;
    return j;
}

}  // namespace specred
