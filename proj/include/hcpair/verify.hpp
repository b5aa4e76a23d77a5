#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcpair/serialize.hpp"

namespace hcpair {

/// Settings of a verification run. Read from "key = value" lines; see
/// parse_run_config for the keys.
struct RunConfig {
    std::string type = "A1";
    int bound = 2;
    /// "compact", "trivial", or comma-separated reduced words of 1-based simple
    /// reflection indices joined by '.', e.g. "1.2, 2".
    std::string w0 = "compact";
    std::vector<std::string> suites = {"all"};
    std::uint64_t seed = 1;
    std::uint64_t cap_weyl = kDefaultWeylCap;
    std::size_t cap_dim = kDefaultModuleDimCap;
    std::string out;
    int fuzz_pairs = 1000;
    int dims_lo = 1;
    int dims_hi = 6;
    int sl2_lo = -3;
    int sl2_hi = 3;
    int closed_data = 50;
};

/// Keys: type, bound, w0, suites (comma list), seed, cap_weyl, cap_dim, out,
/// fuzz_pairs, dims (lo..hi), sl2_range (lo..hi), closed_data. '#' starts a
/// comment. Throws std::invalid_argument on unknown keys or bad values.
RunConfig parse_run_config(const std::string& text);
/// "lo..hi" or a single integer.
std::pair<int, int> parse_range(const std::string& text);
/// Caps positive, ranges ordered, suites known.
void validate(const RunConfig& cfg);

struct VerificationCase {
    std::string name;
    Json inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
};

class VerificationReport {
public:
    VerificationReport(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

    /// pass = (expected == actual).
    void add(std::string name, Json inputs, std::string expected, std::string actual);
    void add(std::string name, Json inputs, std::string expected, std::string actual, bool pass);
    void skip(std::string reason);

    const std::string& suite() const { return suite_; }
    const std::vector<VerificationCase>& cases() const { return cases_; }
    std::size_t total() const { return cases_.size(); }
    std::size_t passed() const { return passed_; }
    std::size_t failed() const { return cases_.size() - passed_; }
    bool skipped() const { return !skip_reason_.empty(); }
    const std::string& status() const { return skip_reason_; }
    std::uint64_t seed() const { return seed_; }
    double timing_ms() const { return timing_ms_; }
    void set_timing_ms(double ms) { timing_ms_ = ms; }

private:
    std::string suite_;
    std::uint64_t seed_;
    std::vector<VerificationCase> cases_;
    std::size_t passed_ = 0;
    std::string skip_reason_;
    double timing_ms_ = 0;
};

/// Timing is left out unless asked for, so reports are byte-identical across
/// runs.
Json to_json(const VerificationReport& r, bool with_timing = false);
/// Aligned text summary, one line per suite.
std::string to_table(const std::vector<VerificationReport>& reports);

/// W0 for cfg.w0 on rs.
WeylSubgroup parse_w0(const std::string& spec, const RootSystem& rs, std::uint64_t cap);

const std::vector<std::string>& suite_names();

/// Runs one named suite. Cap overruns mark the report skipped instead of
/// failing or passing it.
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);
/// Expands "all" and runs the suites in order.
std::vector<VerificationReport> run_suites(const RunConfig& cfg);

/// Individual suites, usable without a RunConfig.
VerificationReport suite_schur(const RootSystem& rs, int bound, const RunConfig& cfg);
VerificationReport suite_kazhdan(const RootSystem& rs, int bound, const RunConfig& cfg);
VerificationReport suite_osborne(const RootSystem& rs, int bound, const RunConfig& cfg);
VerificationReport suite_weyldenom(const RootSystem& rs, const RunConfig& cfg);
VerificationReport suite_antisym(const RootSystem& rs, int bound, const RunConfig& cfg);
VerificationReport suite_lavan(const RunConfig& cfg);
VerificationReport suite_standard(const RunConfig& cfg);
VerificationReport suite_unequal(const RunConfig& cfg);
VerificationReport suite_oracles(const RootSystem& rs, int bound, const RunConfig& cfg);

}  // namespace hcpair
