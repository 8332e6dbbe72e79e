#pragma once

#include <string>

#include "monocert/json_io.hpp"

namespace mono::run {

inline constexpr const char* kToolVersion = "monocert 0.1.0";

struct RunConfig {
    std::string subcommand;  // pham | curve-rep | invariants | certify | sweep
    long n = 1;
    long m = 0;
    long r = 0;
    long i = 0;
    long wedge = 0;   // curve-rep: also emit this exterior power (0 = none)
    long budget = 10000;
    unsigned precision = 128;
    long m_max = 0;   // sweep upper bound on m
    std::string cache_dir;  // empty disables the cache
    bool verify_cache = false;
};

struct RunResult {
    std::string text;  // canonical JSON rendering, ready to write
    int exit_code = 0;
    bool cache_hit = false;
};

// Global convention choices stamped into every report.
jsonio::json convention_flags();

// Builds the report for the configured subcommand. Deterministic: equal
// configs yield byte-identical text. Wall time goes to stderr, never into
// the report. With a cache directory set, a hit returns the stored bytes
// verbatim (re-verified when verify_cache is set) and a miss computes,
// stores atomically, then returns.
RunResult execute(const RunConfig& cfg);

}  // namespace mono::run
