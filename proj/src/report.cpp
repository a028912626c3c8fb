#include "fwcodes/report.hpp"

#include <sstream>

namespace fwc::report {

void RunConfig::validate() const {
    if (caps.n_cap_full <= 0 || caps.n_cap_slice <= 0) fail(Err::ConstraintViolation, "caps must be positive");
    if (parallelism < 0) fail(Err::ConstraintViolation, "parallelism must be >= 1 (or 0 for auto)");
    if (output_format != "text" && output_format != "json" && output_format != "csv")
        fail(Err::ConstraintViolation, "output format must be text, json or csv");
}

Json to_json(const codes::CodeReport& rep) {
    Json j;
    j["family"] = rep.family;
    Json params = Json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    j["params"] = params;
    j["kind"] = codes::code_kind_name(rep.kind);
    j["source"] = rep.source;
    j["length"] = rep.length;
    j["dimension"] = rep.dimension;
    j["two_to_one"] = rep.two_to_one;
    j["t_weights"] = rep.t_weights;
    Json ws = Json::array();
    for (auto [w, mult] : rep.wd.entries) ws.push_back(Json{{"w", w}, {"mult", mult}});
    j["weights"] = ws;
    if (rep.spectrum) j["spectrum"] = spectrum_to_json(*rep.spectrum);
    Json dual;
    dual["dim"] = rep.dual.dual_dim;
    if (!rep.dual.has_dual_words) dual["dmin"] = nullptr;
    else if (rep.dual.dmin) dual["dmin"] = *rep.dual.dmin;
    else dual["dmin"] = Json::array({rep.dual.dmin_lo, rep.dual.dmin_hi});
    dual["sphere_packing"] = rep.dual.sphere_packing_equality;
    if (rep.dual.oracle_dmin) dual["oracle_dmin"] = *rep.dual.oracle_dmin;
    j["dual"] = dual;
    Json checks = Json::array();
    for (const auto& [name, pass] : rep.checks) checks.push_back(Json{{"name", name}, {"pass", pass}});
    j["checks"] = checks;
    return j;
}

Json to_json(const catalog::ExperimentReport& rep) {
    Json j;
    j["conjecture"] = rep.id == catalog::ConjectureId::CONJ1 ? "CONJ1" : "CONJ2";
    j["params"] = rep.params.to_string();
    j["status"] = "OBSERVATION";
    Json obs = Json::array();
    for (const auto& o : rep.observations)
        obs.push_back(Json{{"name", o.name}, {"observed", o.observed}, {"consistent", o.consistent}});
    j["observations"] = obs;
    return j;
}

std::string to_csv(const codes::CodeReport& rep) {
    std::ostringstream os;
    os << "# family=" << rep.family << " params=" << [&] {
        std::string s;
        for (const auto& [k, v] : rep.params) s += k + "=" + std::to_string(v) + " ";
        return s;
    }();
    os << "\n# kind=" << codes::code_kind_name(rep.kind) << " length=" << rep.length
       << " dimension=" << rep.dimension << "\n";
    os << "weight,multiplicity\n";
    for (auto [w, mult] : rep.wd.entries) os << w << "," << mult << "\n";
    return os.str();
}

std::string to_text(const codes::CodeReport& rep) {
    std::ostringstream os;
    os << (rep.kind == codes::CodeKind::Cf ? "C_f" : "C_D(f)") << " of " << rep.source << "\n";
    os << "  [" << rep.length << ", " << rep.dimension << "] binary linear code, " << rep.t_weights
       << " nonzero weight(s)\n";
    os << "  enumerator: " << rep.wd.enumerator() << "\n";
    if (rep.spectrum) {
        os << "  spectrum:";
        for (auto [v, c] : rep.spectrum->counts) os << " " << v << "x" << c;
        os << "\n";
    }
    os << "  dual: [" << rep.length << ", " << rep.dual.dual_dim << "], dmin ";
    if (!rep.dual.has_dual_words) os << "n/a (zero dual)";
    else if (rep.dual.dmin) os << *rep.dual.dmin;
    else os << "in [" << rep.dual.dmin_lo << ", " << rep.dual.dmin_hi << "]";
    if (rep.dual.sphere_packing_equality) os << ", meets the sphere-packing bound";
    os << "\n";
    for (const auto& [name, pass] : rep.checks) os << "  check " << name << ": " << (pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

Json spectrum_to_json(const walsh::WalshSpectrum& s) {
    Json j;
    j["kind"] = s.kind == walsh::SpectrumKind::FullGrid ? "full" : "slice";
    j["n"] = s.n;
    Json counts = Json::array();
    for (auto [v, c] : s.counts) counts.push_back(Json::array({v, c}));
    j["counts"] = counts;
    return j;
}

walsh::WalshSpectrum spectrum_from_json(const Json& j) {
    walsh::WalshSpectrum s;
    s.kind = j.at("kind") == "full" ? walsh::SpectrumKind::FullGrid : walsh::SpectrumKind::BSlice;
    s.n = j.at("n").get<int>();
    for (const auto& e : j.at("counts"))
        s.counts[e.at(0).get<std::int64_t>()] = e.at(1).get<std::uint64_t>();
    return s;
}

}  // namespace fwc::report
