#include "monocert/run.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monocert/certify.hpp"
#include "monocert/curve_rep.hpp"
#include "monocert/errors.hpp"
#include "monocert/invariants.hpp"
#include "monocert/pham.hpp"

namespace mono::run {

namespace fs = std::filesystem;
using jsonio::json;

namespace {

json pham_payload(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.r < 2) throw BadParameters("pham needs --n >= 1 and --r >= 2");
    pham::PhamLattice lattice = pham::character_support(cfg.n, cfg.r);
    json tuples = json::array();
    for (const pham::CharTuple& mu : lattice.support) {
        pham::PLDatum d = pham::pl_coefficient(mu);
        tuples.push_back(json{{"mu", mu.entries},
                              {"c", jsonio::cyclo_to_json(d.c)},
                              {"self_pairing", jsonio::cyclo_to_json(d.self_pairing)},
                              {"eigenvalue", jsonio::cyclo_to_json(d.eigenvalue)},
                              {"intersection_number",
                               jsonio::cyclo_to_json(pham::intersection_number(mu))}});
    }
    return json{{"n", cfg.n},
                {"r", cfg.r},
                {"support_count", lattice.support.size()},
                {"tuples", tuples}};
}

json meridian_payload(const curverep::MeridianReflection& mr) {
    return json{{"index", mr.index},
                {"matrix", jsonio::matrix_to_json(mr.matrix)},
                {"cycle", jsonio::vec_to_json(mr.cycle)},
                {"datum", jsonio::pl_datum_to_json(mr.datum)}};
}

json curve_rep_payload(const RunConfig& cfg) {
    curverep::MonodromyRep rep = curverep::build_curve_rep(cfg.m, cfg.r, cfg.i);
    json gens = json::array();
    for (const Matrix& g : rep.generators) gens.push_back(jsonio::matrix_to_json(g));
    json meridians = json::array();
    for (long j = 1; j <= cfg.m - 1; ++j)
        meridians.push_back(meridian_payload(curverep::meridian_matrix(rep, j)));
    json payload{{"m", cfg.m},
                 {"r", cfg.r},
                 {"i", cfg.i},
                 {"dim", rep.dim},
                 {"burau_parameter", rep.burau_parameter},
                 {"generators", gens},
                 {"gram", jsonio::matrix_to_json(rep.form.gram())},
                 {"meridians", meridians}};
    if (cfg.wedge >= 2) {
        curverep::MonodromyRep w = curverep::wedge_rep(rep, cfg.wedge);
        json wgens = json::array();
        for (const Matrix& g : w.generators) wgens.push_back(jsonio::matrix_to_json(g));
        payload["wedge"] = json{{"n", cfg.wedge},
                                {"dim", w.dim},
                                {"generators", wgens},
                                {"gram", jsonio::matrix_to_json(w.form.gram())}};
    } else {
        payload["wedge"] = nullptr;
    }
    return payload;
}

json invariants_payload(const invariants::Params& p) {
    invariants::GroupLabel label = invariants::expected_group(p);
    json payload{{"params", jsonio::params_to_json(p)},
                 {"expected_group", label.label},
                 {"hypothesis_ok", label.hypothesis_ok},
                 {"reason", label.reason}};
    try {
        auto [sp, sq] = invariants::signature_formula(p);
        payload["p"] = sp;
        payload["q"] = sq;
        payload["dim"] = sp + sq;
    } catch (const BadParameters&) {
        payload["p"] = nullptr;
        payload["q"] = nullptr;
        payload["dim"] = nullptr;
    }
    if (p.n == 1) {
        auto [h10, h01] = invariants::curve_hodge_numbers(p.m, p.r, p.i);
        payload["h10"] = h10;
        payload["h01"] = h01;
    } else {
        payload["h10"] = nullptr;
        payload["h01"] = nullptr;
    }
    return payload;
}

int certify_exit_code(const std::string& status) {
    if (status == "VERIFIED" || status == "CONDITIONAL") return 0;
    if (status == "NOT_VERIFIED") return 1;
    if (status == "HYPOTHESIS_NOT_MET") return 2;
    throw InternalInvariantViolation("unknown certificate status: " + status);
}

json config_echo(const RunConfig& cfg) {
    json j{{"subcommand", cfg.subcommand},
           {"budget", cfg.budget},
           {"precision", cfg.precision}};
    if (cfg.subcommand == "pham") {
        j["n"] = cfg.n;
        j["r"] = cfg.r;
    } else if (cfg.subcommand == "curve-rep") {
        j["m"] = cfg.m;
        j["r"] = cfg.r;
        j["i"] = cfg.i;
        j["wedge"] = cfg.wedge;
    } else if (cfg.subcommand == "sweep") {
        j["n"] = cfg.n;
        j["m_max"] = cfg.m_max;
    } else {
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        j["r"] = cfg.r;
        j["i"] = cfg.i;
    }
    return j;
}

json make_report(const RunConfig& cfg, json payload) {
    return json{{"tool_version", kToolVersion},
                {"subcommand", cfg.subcommand},
                {"config", config_echo(cfg)},
                {"payload", std::move(payload)},
                {"convention_flags", convention_flags()},
                {"timing", nullptr}};
}

// One certify report for a tuple inside a sweep, shaped exactly like the
// standalone certify subcommand's report.
std::pair<json, int> certify_report(const RunConfig& cfg) {
    invariants::Params p{cfg.n, cfg.m, cfg.r, cfg.i};
    certify::Budgets budgets{cfg.budget, cfg.precision};
    certify::DensityCertificate cert = certify::certify(p, budgets);
    return {make_report(cfg, jsonio::certificate_to_json(cert)),
            certify_exit_code(cert.status)};
}

std::vector<invariants::Params> sweep_tuples(long n, long m_max) {
    std::vector<invariants::Params> out;
    for (long m = n + 3; m <= m_max; ++m)
        for (long r = 2; r <= m; ++r) {
            if (m % r != 0) continue;
            for (long i = 1; i <= r - 1; ++i) out.push_back({n, m, r, i});
        }
    return out;
}

std::string cache_key(const RunConfig& cfg) {
    std::ostringstream os;
    os << cfg.subcommand;
    const json echo = config_echo(cfg);
    for (auto it = echo.begin(); it != echo.end(); ++it) {
        if (it.key() == "subcommand") continue;
        os << "_" << it.key() << it.value().dump();
    }
    os << "_v" << kToolVersion;
    std::string key = os.str();
    for (char& c : key) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
            c = '-';
    }
    return key + ".json";
}

void atomic_write(const fs::path& target, const std::string& text) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw BadParameters("cannot write cache file: " + tmp.string());
        out << text;
    }
    fs::rename(tmp, target);
}

// Re-verify a cached report: certify payloads replay their witnesses; other
// subcommands recompute and compare bytes.
bool verify_cached_report(const RunConfig& cfg, const json& report,
                          const std::string& fresh_text_or_empty) {
    if (report.at("tool_version").get<std::string>() != kToolVersion) return false;
    if (cfg.subcommand == "certify") {
        certify::DensityCertificate cert =
            jsonio::certificate_from_json(report.at("payload"));
        return certify::verify_certificate(cert);
    }
    if (cfg.subcommand == "sweep") {
        for (const json& entry : report.at("payload")) {
            certify::DensityCertificate cert =
                jsonio::certificate_from_json(entry.at("payload"));
            if (!certify::verify_certificate(cert)) return false;
        }
        return true;
    }
    return jsonio::dump_canonical(report) == fresh_text_or_empty;
}

std::pair<json, int> compute(const RunConfig& cfg) {
    if (cfg.budget < 1) throw BadParameters("--budget must be positive");
    if (cfg.precision < 8) throw BadParameters("--precision must be at least 8");
    if (cfg.subcommand == "pham") return {make_report(cfg, pham_payload(cfg)), 0};
    if (cfg.subcommand == "curve-rep") return {make_report(cfg, curve_rep_payload(cfg)), 0};
    if (cfg.subcommand == "invariants") {
        invariants::Params p{cfg.n, cfg.m, cfg.r, cfg.i};
        return {make_report(cfg, invariants_payload(p)), 0};
    }
    if (cfg.subcommand == "certify") return certify_report(cfg);
    if (cfg.subcommand == "sweep") {
        if (cfg.m_max < cfg.n + 3)
            throw BadParameters("--m-max must be at least n + 3");
        json entries = json::array();
        int exit_code = 0;
        for (const invariants::Params& p : sweep_tuples(cfg.n, cfg.m_max)) {
            RunConfig sub = cfg;
            sub.subcommand = "certify";
            sub.n = p.n;
            sub.m = p.m;
            sub.r = p.r;
            sub.i = p.i;
            auto [report, code] = certify_report(sub);
            if (code == 1) exit_code = 1;  // a NOT_VERIFIED tuple fails the sweep
            entries.push_back(std::move(report));
        }
        return {make_report(cfg, std::move(entries)), exit_code};
    }
    throw BadParameters("unknown subcommand: " + cfg.subcommand);
}

int cached_exit_code(const RunConfig& cfg, const json& report) {
    if (cfg.subcommand == "certify")
        return certify_exit_code(report.at("payload").at("status").get<std::string>());
    if (cfg.subcommand == "sweep") {
        for (const json& entry : report.at("payload"))
            if (entry.at("payload").at("status").get<std::string>() == "NOT_VERIFIED") return 1;
        return 0;
    }
    return 0;
}

}  // namespace

json convention_flags() {
    return json{
        {"pairing", "H(x, y) = y^dagger G x, conjugate-linear in the second argument"},
        {"picard_lefschetz", "homological reflection constants"},
        {"burau_parameter", "zeta_r^i preferred, zeta_r^-i fallback, recorded per build"}};
}

RunResult execute(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RunResult result;

    fs::path cache_file;
    if (!cfg.cache_dir.empty()) {
        fs::create_directories(cfg.cache_dir);
        cache_file = fs::path(cfg.cache_dir) / cache_key(cfg);
    }

    if (!cache_file.empty() && fs::exists(cache_file)) {
        std::ifstream in(cache_file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        result.text = buf.str();
        result.cache_hit = true;
        json report = json::parse(result.text);
        if (cfg.verify_cache) {
            std::string fresh;
            if (cfg.subcommand != "certify" && cfg.subcommand != "sweep")
                fresh = jsonio::dump_canonical(compute(cfg).first);
            if (!verify_cached_report(cfg, report, fresh))
                throw InternalInvariantViolation("cache entry failed re-verification: " +
                                                 cache_file.string());
        }
        result.exit_code = cached_exit_code(cfg, report);
    } else {
        auto [report, code] = compute(cfg);
        result.text = jsonio::dump_canonical(report);
        result.exit_code = code;
        if (!cache_file.empty()) atomic_write(cache_file, result.text);
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cerr << "timing: " << cfg.subcommand << (result.cache_hit ? " (cache hit)" : "")
              << " " << elapsed << " ms" << std::endl;
    return result;
}

}  // namespace mono::run
