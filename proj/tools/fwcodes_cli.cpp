#include <chrono>
#include <iostream>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "fwcodes/cache.hpp"
#include "fwcodes/report.hpp"
#include "fwcodes/verify.hpp"

using namespace fwc;
using report::Json;

namespace {

struct CommonOpts {
    report::RunConfig cfg;
    bool no_cache = false;
    bool with_spectrum = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.cfg.output_format, "output format: text|json|csv")->default_val("text");
    cmd->add_option("--cap-full", c.cfg.caps.n_cap_full, "degree cap for full-grid spectra")->default_val(16);
    cmd->add_option("--cap-slice", c.cfg.caps.n_cap_slice, "degree cap for b-slice work")->default_val(22);
    cmd->add_option("--jobs", c.cfg.parallelism, "worker threads (0 = auto)")->default_val(0);
    cmd->add_option("--cache-dir", c.cfg.cache_dir, "spectrum cache directory")->default_val(".fwcodes-cache");
    cmd->add_flag("--no-cache", c.no_cache, "disable the spectrum cache");
    cmd->add_flag("--spectrum", c.with_spectrum, "attach the Walsh value counts to the report");
}

walsh::WalshSpectrum full_spectrum_cached(const fexpr::FuncExpr& f, const std::string& key_hint,
                                          const cache::Cache& cc, const walsh::Caps& caps, int jobs) {
    const std::string key = "spectrum/full/" + key_hint + "/n=" + std::to_string(f.field()->n()) +
                            "/poly=" + std::to_string(f.field()->reduction_poly()) + "/f=" + f.to_string();
    if (auto hit = cc.get(key)) {
        std::cerr << "cache hit: full spectrum for " << key_hint << "\n";
        return report::spectrum_from_json(*hit);
    }
    auto t0 = std::chrono::steady_clock::now();
    auto s = walsh::spectrum_full(f, caps, jobs);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cc.enabled()) {
        cc.put(key, report::spectrum_to_json(s));
        std::cerr << "cache store: full spectrum for " << key_hint << " (" << secs << " s)\n";
    }
    return s;
}

codes::CodeReport build_report(const fexpr::FuncExpr& f, codes::CodeKind kind, const CommonOpts& c,
                               const cache::Cache& cc, const std::string& family,
                               const std::map<std::string, std::int64_t>& params) {
    codes::CodeReport rep;
    const int n = f.field()->n();
    rep.kind = kind;
    rep.family = family;
    rep.source = f.to_string();
    rep.params = params;
    rep.params["n"] = n;

    if (kind == codes::CodeKind::CDf) {
        if (f.eval(0) != 0) fail(Err::NotTwoToOne, "defining-set construction needs f(0) = 0");
        auto verdict = fexpr::is_two_to_one(f, c.cfg.caps.n_cap_slice);
        if (!verdict)
            fail(Err::NotTwoToOne, "not two-to-one: fiber of value " + std::to_string(verdict.witness) +
                                       " has size " + std::to_string(verdict.fiber_size));
        rep.two_to_one = true;
        auto slice = walsh::spectrum_b_slice(f, c.cfg.caps);
        rep.wd = codes::wd_cdf(slice);
        rep.dimension = n - slice.k_dimension();
        if (c.with_spectrum) rep.spectrum = std::move(slice);
    } else {
        if (f.eval(0) != 0) fail(Err::NotTwoToOne, "code construction needs f(0) = 0");
        rep.two_to_one = bool(fexpr::is_two_to_one(f, c.cfg.caps.n_cap_slice));
        auto full = full_spectrum_cached(f, family + "/" + codes::code_kind_name(kind), cc, c.cfg.caps,
                                         c.cfg.parallelism);
        rep.wd = codes::wd_cf(full);
        rep.dimension = 2 * n - full.k_dimension();
        if (c.with_spectrum) rep.spectrum = std::move(full);
    }
    rep.length = rep.wd.length;
    rep.t_weights = rep.wd.nonzero_weight_count();
    rep.checks.emplace_back("codeword_count_is_2^dim", rep.wd.total == (1ull << rep.dimension));
    rep.dual = codes::dual_analysis_given_dim(f, kind, rep.dimension, c.cfg.caps, rep.length <= (1u << 10));
    return rep;
}

void print_report(const codes::CodeReport& rep, const std::string& format, std::ostream& os) {
    if (format == "json") os << report::to_json(rep).dump(1) << "\n";
    else if (format == "csv") os << report::to_csv(rep);
    else os << report::to_text(rep);
}

int run_reports(const std::vector<codes::CodeReport>& reps, const std::string& format, std::ostream& os) {
    if (format == "json" && reps.size() > 1) {
        Json arr = Json::array();
        for (const auto& r : reps) arr.push_back(report::to_json(r));
        os << arr.dump(1) << "\n";
    } else {
        for (const auto& r : reps) print_report(r, format, os);
    }
    for (const auto& r : reps)
        if (!r.pass()) return 1;
    return 0;
}

std::optional<codes::CodeKind> kind_of(const std::string& s, bool& both) {
    both = s == "both";
    if (s == "cf") return codes::CodeKind::Cf;
    if (s == "cdf") return codes::CodeKind::CDf;
    if (both) return std::nullopt;
    fail(Err::ParseError, "--code must be cf, cdf or both");
}

// expected-table pairing for the built-in families
std::vector<std::pair<catalog::TableId, codes::CodeKind>> tables_for(catalog::FamilyId id, const catalog::Params& p) {
    using catalog::FamilyId;
    using catalog::TableId;
    using codes::CodeKind;
    switch (id) {
        case FamilyId::L31: return {{TableId::T1, CodeKind::Cf}, {TableId::T2, CodeKind::CDf}};
        case FamilyId::L32_1: return {{TableId::T3, CodeKind::Cf}, {TableId::T4, CodeKind::CDf}};
        case FamilyId::L32_4: return {{TableId::T4, CodeKind::CDf}};
        case FamilyId::L32_2:
        case FamilyId::L32_3: return {{TableId::T5, CodeKind::Cf}};
        case FamilyId::L33_1:
            if (p.m && *p.m % 3 == 0) return {{TableId::T6, CodeKind::Cf}};
            return {};
        case FamilyId::T41: return {{TableId::T7, CodeKind::Cf}, {TableId::T8, CodeKind::CDf}};
        case FamilyId::T42:
            if (p.m && *p.m >= 3) return {{TableId::T44D, CodeKind::CDf}};
            return {};
        case FamilyId::AB_GOLD:
        case FamilyId::AB_KASAMI:
        case FamilyId::AB_WELCH:
        case FamilyId::AB_NIHO1:
        case FamilyId::AB_NIHO2:
        case FamilyId::T53_GOLD: return {{TableId::T52, CodeKind::CDf}};
        default: return {};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary linear codes with few weights from two-to-one maps over GF(2^n)"};
    app.require_subcommand(1);

    // ---- analyze ----
    std::string expr_text;
    int analyze_n = 0;
    std::string code_sel = "both";
    CommonOpts copt;
    auto* analyze = app.add_subcommand("analyze", "analyze a function given in the expression syntax");
    analyze->add_option("expr", expr_text, "function expression, e.g. \"x^13 + x^8 + w*x\"")->required();
    analyze->add_option("--n", analyze_n, "extension degree")->required();
    analyze->add_option("--code", code_sel, "which construction: cf|cdf|both")->default_val("both");
    add_common(analyze, copt);

    // ---- family ----
    std::string family_name;
    catalog::Params fparams;
    int fm = -1, fk = -1, ft = -1, fi = -1, fn = -1;
    std::int64_t fe = -1;
    std::string fcode_sel = "both";
    CommonOpts fopt;
    auto* family = app.add_subcommand("family", "build and verify one of the built-in families");
    family->add_option("id", family_name, "family id (L31, L32_1..L32_4, L33_1, L33_2, T41, T42, T53_GOLD, AB_*)")
        ->required();
    family->add_option("--m", fm, "parameter m");
    family->add_option("--k", fk, "parameter k (T41)");
    family->add_option("--t", ft, "parameter t (power-composite families)");
    family->add_option("--i", fi, "parameter i (Gold/Kasami exponent)");
    family->add_option("--n", fn, "extension degree (power-composite families)");
    family->add_option("--e", fe,
                       "explicit exponent for the power-composite families; overrides the derived one and "
                       "skips table comparisons when it differs");
    family->add_option("--code", fcode_sel, "which construction: cf|cdf|both")->default_val("both");
    add_common(family, fopt);

    // ---- verify ----
    std::string only;
    bool as_json = false;
    CommonOpts vopt;
    auto* verify_cmd = app.add_subcommand("verify", "run the built-in verification suite");
    verify_cmd->add_option("--only", only,
                           "restrict to one group: examples|tables|oracles|two-to-one|quadratic-law|duals|"
                           "factorization|prop51|containment|conjectures");
    verify_cmd->add_flag("--json", as_json, "emit a machine-readable summary");
    add_common(verify_cmd, vopt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) {
            copt.cfg.validate();
            cache::Cache cc(copt.cfg.cache_dir, copt.cfg.cache_enabled && !copt.no_cache);
            auto F = gf2n::field_new(analyze_n);
            auto f = fexpr::parse(expr_text, F);
            bool both = false;
            auto kind = kind_of(code_sel, both);
            std::vector<codes::CodeReport> reps;
            if (both || kind == codes::CodeKind::Cf)
                reps.push_back(build_report(f, codes::CodeKind::Cf, copt, cc, "expr", {}));
            if (both || kind == codes::CodeKind::CDf)
                reps.push_back(build_report(f, codes::CodeKind::CDf, copt, cc, "expr", {}));
            return run_reports(reps, copt.cfg.output_format, std::cout);
        }

        if (*family) {
            fopt.cfg.validate();
            cache::Cache cc(fopt.cfg.cache_dir, fopt.cfg.cache_enabled && !fopt.no_cache);
            auto fid = catalog::family_from_string(family_name);
            if (!fid) fail(Err::ParseError, "unknown family id " + family_name);
            if (fm >= 0) fparams.m = fm;
            if (fk >= 0) fparams.k = fk;
            if (ft >= 0) fparams.t = ft;
            if (fi >= 0) fparams.i = fi;
            if (fn >= 0) fparams.n = fn;
            bool composite = *fid == catalog::FamilyId::T53_GOLD || *fid == catalog::FamilyId::AB_GOLD ||
                             *fid == catalog::FamilyId::AB_KASAMI || *fid == catalog::FamilyId::AB_WELCH ||
                             *fid == catalog::FamilyId::AB_NIHO1 || *fid == catalog::FamilyId::AB_NIHO2;
            if (fe >= 0 && !composite) fail(Err::ParseError, "--e applies only to the (x^(2^t)+x)^e families");
            bool custom_e = false;
            fexpr::FuncExpr f = [&] {
                if (fe < 0) return catalog::build(*fid, fparams);
                // explicit exponent: same composite shape, user-chosen e
                if (fn < 0) fail(Err::ParseError, "--e needs --n");
                custom_e = true;
                auto F = gf2n::field_new(fn);
                int t = ft >= 0 ? ft : 1;
                if (std::gcd<std::int64_t>(t, fn) != 1) fail(Err::ConstraintViolation, "needs gcd(t, n) = 1");
                if (boost::multiprecision::gcd(BigInt(fe) % F->group_order(), BigInt(F->group_order())) != 1)
                    fail(Err::ConstraintViolation, "needs gcd(e, 2^n - 1) = 1");
                auto psi = fexpr::FuncExpr::sum(
                    {fexpr::FuncExpr::monomial(F, 1, BigInt(1) << t), fexpr::FuncExpr::x(F)});
                return fexpr::FuncExpr::power(psi, fe);
            }();
            if (custom_e) {
                try {
                    custom_e = BigInt(fe) != catalog::ab_exponent(*fid, fparams);
                } catch (const Error&) {
                    custom_e = true;  // row exponent underivable from the given params
                }
            }
            std::map<std::string, std::int64_t> pm;
            if (fparams.m) pm["m"] = *fparams.m;
            if (fparams.k) pm["k"] = *fparams.k;
            if (fparams.t) pm["t"] = *fparams.t;
            if (fparams.i) pm["i"] = *fparams.i;
            if (fe >= 0) pm["e"] = fe;

            bool both = false;
            auto kind = kind_of(fcode_sel, both);
            std::vector<codes::CodeReport> reps;
            for (codes::CodeKind k : {codes::CodeKind::Cf, codes::CodeKind::CDf}) {
                if (!both && kind != k) continue;
                auto rep = build_report(f, k, fopt, cc, family_name, pm);
                for (auto [table, tk] : tables_for(*fid, fparams)) {
                    if (tk != k || custom_e) continue;
                    auto want = catalog::expected_wd(table, fparams);
                    rep.checks.emplace_back(std::string("matches_") + catalog::table_name(table),
                                            rep.wd == want && rep.wd.total == want.total);
                }
                if ((*fid == catalog::FamilyId::L32_2 || *fid == catalog::FamilyId::L32_3) &&
                    k == codes::CodeKind::CDf) {
                    auto want = catalog::expected_constant_weight_cdf(f.field()->n());
                    rep.checks.emplace_back("matches_constant_weight", rep.wd == want);
                }
                reps.push_back(std::move(rep));
            }
            return run_reports(reps, fopt.cfg.output_format, std::cout);
        }

        if (*verify_cmd) {
            vopt.cfg.validate();
            verify::Options vo;
            vo.caps = vopt.cfg.caps;
            vo.jobs = vopt.cfg.parallelism;
            vo.only = only;
            auto results = verify::run_suite(vo, as_json ? nullptr : &std::cout);
            auto summary = verify::summarize(results);
            if (as_json) {
                Json j;
                Json sm = Json::array();
                for (const auto& cs : summary)
                    sm.push_back(Json{{"criterion", cs.id},
                                      {"title", cs.title},
                                      {"checks", cs.checks},
                                      {"failed", cs.failed},
                                      {"observation_only", cs.observation_only}});
                j["summary"] = sm;
                Json ck = Json::array();
                for (const auto& r : results)
                    ck.push_back(Json{{"id", r.id},
                                      {"group", r.group},
                                      {"status", r.status == verify::Status::Pass        ? "PASS"
                                                 : r.status == verify::Status::Fail      ? "FAIL"
                                                                                         : "OBSERVATION"},
                                      {"detail", r.detail}});
                j["checks"] = ck;
                std::cout << j.dump(1) << "\n";
            } else {
                std::cout << "\n";
                for (const auto& cs : summary)
                    std::cout << cs.id << " " << (cs.observation_only ? "OBSERVATION" : cs.failed ? "FAIL" : "PASS")
                              << " (" << cs.checks << " checks, " << cs.failed << " failed) " << cs.title << "\n";
            }
            return verify::any_failed(results) ? 1 : 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Err::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
