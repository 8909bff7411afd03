#include "susypt/serialize.hpp"

#include <cstdio>

#include "json.hpp"

namespace susypt {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json params_json(const SuperpotentialSpec& spec) {
    return json{{"A", spec.A}, {"B", spec.B},         {"C", spec.C},
                {"alpha", spec.alpha}, {"beta", spec.beta}};
}

std::string branch_token(Branch b) { return b == Branch::Plus ? "+" : "-"; }

}  // namespace

std::string class_token(const SpectrumClass& cls) {
    if (cls.near_critical) return "near-critical";
    return to_string(cls.kind);
}

std::string family_cli_name(Family f) {
    switch (f) {
        case Family::AhmedScarf: return "ahmed";
        case Family::TanhRosenMorse: return "rosen-morse";
        case Family::CothEckart: return "eckart";
        case Family::TanTrig: return "tan";
        case Family::CotTrig: return "cot";
        case Family::PoschlTellerC1: return "pt1";
        case Family::PoschlTellerC2: return "pt2";
        case Family::CoulombC: return "coulomb";
    }
    return "?";
}

Family family_from_cli_name(const std::string& name) {
    if (name == "ahmed" || name == "scarf") return Family::AhmedScarf;
    if (name == "rosen-morse" || name == "rosenmorse") return Family::TanhRosenMorse;
    if (name == "eckart") return Family::CothEckart;
    if (name == "tan") return Family::TanTrig;
    if (name == "cot") return Family::CotTrig;
    if (name == "pt1") return Family::PoschlTellerC1;
    if (name == "pt2") return Family::PoschlTellerC2;
    if (name == "coulomb") return Family::CoulombC;
    throw DomainError("unknown family name: " + name);
}

std::string spectrum_to_json(const SuperpotentialSpec& spec,
                             const AlgebraicSpectrum& spectrum) {
    json levels = json::array();
    for (const auto& [n, E] : spectrum.entries) {
        levels.push_back(json{{"n", n}, {"re", E.real()}, {"im", E.imag()}});
    }
    const json out{{"family", family_cli_name(spec.family)},
                   {"params", params_json(spec)},
                   {"branch", branch_token(spec.branch)},
                   {"convention", "E0=0"},
                   {"offset", json{{"re", spectrum.offset.real()},
                                   {"im", spectrum.offset.imag()}}},
                   {"levels", levels},
                   {"truncated", spectrum.truncated}};
    return out.dump(2) + "\n";
}

std::string spectrum_to_csv(const SuperpotentialSpec& spec,
                            const AlgebraicSpectrum& spectrum) {
    std::string out = "family,branch,A,B,C,alpha,beta,n,re,im\n";
    for (const auto& [n, E] : spectrum.entries) {
        out += family_cli_name(spec.family) + "," + branch_token(spec.branch) + "," +
               fmt_double(spec.A) + "," + fmt_double(spec.B) + "," + fmt_double(spec.C) +
               "," + fmt_double(spec.alpha) + "," + fmt_double(spec.beta) + "," +
               std::to_string(n) + "," + fmt_double(E.real()) + "," + fmt_double(E.imag()) +
               "\n";
    }
    return out;
}

std::string wavefunction_to_json(const SuperpotentialSpec& spec,
                                 const WaveFunctionSample& psi) {
    json samples = json::array();
    for (Eigen::Index i = 0; i < psi.grid.size(); ++i) {
        samples.push_back(json{{"x", psi.grid[i]},
                               {"re", psi.values[i].real()},
                               {"im", psi.values[i].imag()}});
    }
    const json out{{"family", family_cli_name(spec.family)},
                   {"params", params_json(spec)},
                   {"branch", branch_token(spec.branch)},
                   {"n", psi.level},
                   {"samples", samples}};
    return out.dump(2) + "\n";
}

std::string wavefunction_to_csv(const WaveFunctionSample& psi) {
    std::string out = "x,re,im\n";
    for (Eigen::Index i = 0; i < psi.grid.size(); ++i) {
        out += fmt_double(psi.grid[i]) + "," + fmt_double(psi.values[i].real()) + "," +
               fmt_double(psi.values[i].imag()) + "\n";
    }
    return out;
}

std::string scan_to_json(const std::vector<ScanRecord>& records) {
    json arr = json::array();
    for (const ScanRecord& r : records) {
        json item{{"V1", r.V1},
                  {"V2", r.V2},
                  {"class", r.failed ? "failed" : class_token(r.cls)},
                  {"pairs", r.cls.pair_count},
                  {"max_im", r.max_im},
                  {"localized", r.localized_count}};
        if (r.failed) item["error"] = r.error;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::string out = "V1,V2,class,pairs,max_im,localized\n";
    for (const ScanRecord& r : records) {
        out += fmt_double(r.V1) + "," + fmt_double(r.V2) + "," +
               (r.failed ? std::string("failed") : class_token(r.cls)) + "," +
               std::to_string(r.cls.pair_count) + "," + fmt_double(r.max_im) + "," +
               std::to_string(r.localized_count) + "\n";
    }
    return out;
}

}  // namespace susypt
