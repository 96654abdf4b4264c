#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wq/json_io.hpp"
#include "wq/wgen.hpp"

namespace wq {

inline constexpr const char* kSchema = "wq/1";
inline constexpr const char* kVersion = "0.1.0";

struct SuiteConfig {
    int n_max = 6;
    int order = 0;  // series/Yangian truncation; 0 means 2n+2 per instance
    std::uint64_t seed = 1;
    int trials = 20;
    std::vector<std::string> suites = {"all"};
    std::string cache_dir;  // empty: no disk cache

    bool wants(const std::string& name) const;
};

struct CheckRecord {
    std::string suite;
    std::string identity;
    int n = 0;
    std::string parameters;
    bool holds = false;
    std::string witness;
    std::map<std::string, std::string> derived;
    double elapsed_ms = 0.0;
};

struct Report {
    SuiteConfig config;
    std::vector<CheckRecord> records;
    bool pass() const;
};

Report run_suites(const SuiteConfig& config);

Json report_json(const Report& report);
std::string report_text(const Report& report);

/// Deterministic generator for property-style checks; identical draws for
/// identical seeds on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi);  // inclusive
    Rational rational(long num_range, long den_range);
    GaussianRational gauss(bool allow_imag = true);
    GaussianRational nonzero_gauss(bool allow_imag = true);
    std::vector<GaussianRational> scalars(int n, bool allow_imag = true);
    /// Roots with all s_i = r_i^2 nonzero and pairwise s_i + s_j != 0.
    std::vector<GaussianRational> typical_regular_roots(int n);
    MultiPoly poly(int arity, int max_degree, int terms);
    UhElement uh(int arity, int max_degree, int terms);

private:
    std::mt19937_64 eng_;
};

/// Generators for n, memoized in-process and optionally persisted as JSON
/// under cache_dir (one file per n, atomic write, format-tagged).
const WGenSet& cached_wgens(int n, const std::string& cache_dir = {});

/// --cache-dir flag beats WQ_CACHE_DIR beats ~/.cache/wq.
std::string resolve_cache_dir(const std::string& flag_value);

}  // namespace wq
