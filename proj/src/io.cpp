#include "icnof/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "icnof/errors.hpp"

namespace icnof {

namespace {

constexpr const char* kParamKeys[] = {"snr1", "snr2", "inr12", "inr21", "snr_fb1", "snr_fb2"};

double number_field(const json& j, const std::string& key) {
    if (!j.is_number()) throw InputError("field \"" + key + "\" must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError("field \"" + key + "\" must be finite");
    return v;
}

json bound(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json point(RatePair p) { return {{"r1", p.r1}, {"r2", p.r2}}; }

}  // namespace

ChannelParams params_from_json(const json& j) {
    if (!j.is_object()) throw InputError("channel parameters must be a JSON object");
    bool any_linear = false;
    bool any_db = false;
    for (const char* key : kParamKeys) {
        any_linear = any_linear || j.contains(key);
        any_db = any_db || j.contains(std::string(key) + "_db");
    }
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : kParamKeys) known = known || item.key() == key || item.key() == std::string(key) + "_db";
        if (!known) throw InputError("unknown field \"" + item.key() + "\"");
    }
    if (any_linear && any_db) {
        for (const char* key : kParamKeys) {
            const std::string db_key = std::string(key) + "_db";
            if (j.contains(db_key)) throw InputError("field \"" + db_key + "\" mixes dB with linear fields");
        }
    }
    double v[6];
    for (int k = 0; k < 6; ++k) {
        const std::string key = any_db ? std::string(kParamKeys[k]) + "_db" : kParamKeys[k];
        if (!j.contains(key)) throw InputError("missing field \"" + key + "\"");
        const double x = number_field(j.at(key), key);
        v[k] = any_db ? db_to_linear(x) : x;
    }
    return ChannelParams(v[0], v[1], v[2], v[3], v[4], v[5]);
}

ChannelParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open parameter file \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("parameter file \"" + path + "\" is not valid JSON: " + e.what());
    }
    return params_from_json(j);
}

json to_json(const ChannelParams& p) {
    return {{"snr1", p.snr1()},       {"snr2", p.snr2()},       {"inr12", p.inr12()},
            {"inr21", p.inr21()},     {"snr_fb1", p.snr_fb1()}, {"snr_fb2", p.snr_fb2()}};
}

json to_json(const BoundSet& b) {
    return {{"c_r1", bound(b.c_r1)},
            {"c_r2", bound(b.c_r2)},
            {"c_sum", bound(b.c_sum)},
            {"c_2r1_r2", bound(b.c_2r1_r2)},
            {"c_r1_2r2", bound(b.c_r1_2r2)}};
}

json to_json(const Region& r) {
    json arr = json::array();
    for (const BoundSet& b : r.bound_sets()) arr.push_back(to_json(b));
    return arr;
}

json to_json(const CodingScheme& s) { return {{"rho", s.rho}, {"mu1", s.mu1}, {"mu2", s.mu2}}; }

json to_json(const GapResult& g) { return {{"xi_bits", g.xi}, {"witness", point(g.witness)}}; }

json to_json(const GapLedger& g) {
    return {{"case", g.case_id.label()},
            {"scheme", to_json(g.scheme)},
            {"d_r1", g.d_r1},
            {"d_r2", g.d_r2},
            {"d_2r", g.d_2r},
            {"d_3r1", g.d_3r1},
            {"d_3r2", g.d_3r2},
            {"delta", g.delta},
            {"delta_literal", g.delta_literal},
            {"converse_families", to_json(g.converse_families)},
            {"achievable_families", to_json(g.achievable_families)}};
}

json to_json(const Theorem3Report& r) {
    json checks = json::array();
    for (const ChannelCheck& c : r.checks) {
        checks.push_back({{"params", to_json(c.params)},
                          {"case", c.case_id.label()},
                          {"xi_bits", c.xi},
                          {"delta", c.delta},
                          {"achievable_samples", c.achievable_samples},
                          {"containment_violations", c.containment_violations}});
    }
    json violations = json::array();
    for (const Violation& v : r.violations) {
        violations.push_back({{"index", v.index}, {"kind", v.kind}, {"value", v.value},
                              {"params", to_json(r.checks[v.index].params)}});
    }
    return {{"generator", r.generator},
            {"seed", r.seed},
            {"samples", r.checks.size()},
            {"bound", r.bound},
            {"slack", r.slack},
            {"max_xi", r.max_xi()},
            {"max_delta", r.max_delta()},
            {"containment_violations", r.containment_violations()},
            {"passed", r.passed()},
            {"violations", violations},
            {"checks", checks}};
}

json to_json(const EquivalenceReport& r) {
    json violations = json::array();
    for (const EquivalenceViolation& v : r.violations)
        violations.push_back({{"point", point(v.point)}, {"kind", v.kind}, {"slack", v.slack}});
    return {{"checked", r.checked}, {"feasible", r.feasible}, {"margin", r.margin}, {"violations", violations}};
}

json to_json(const FmCheckSummary& s) {
    json violations = json::array();
    for (const auto& [k, v] : s.violations)
        violations.push_back({{"vector", k}, {"point", point(v.point)}, {"kind", v.kind}, {"slack", v.slack}});
    return {{"generator", "mt19937_64"},
            {"seed", s.seed},
            {"vectors", s.vectors},
            {"adversarial", s.adversarial},
            {"checked", s.points},
            {"passed", s.passed()},
            {"violations", violations}};
}

std::string format_sig9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_frontier_csv(std::ostream& os, std::span<const RatePair> points) {
    os << "r1,r2\n";
    for (const RatePair& p : points) os << format_sig9(p.r1) << ',' << format_sig9(p.r2) << '\n';
}

void write_surface_csv(std::ostream& os, std::span<const SurfaceCell> cells) {
    os << "alpha,beta,xi_bits\n";
    for (const SurfaceCell& c : cells) {
        os << format_sig9(c.alpha) << ',' << format_sig9(c.beta) << ',';
        if (c.xi) os << format_sig9(*c.xi);
        os << '\n';
    }
}

}  // namespace icnof
