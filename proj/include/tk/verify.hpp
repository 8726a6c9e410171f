#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tk {

inline constexpr const char* kVersion = "1.0.0";

struct Violation {
    std::string tournament;  // "t <n> <bits>"
    std::string pattern;
    std::string detail;
    auto operator<=>(const Violation&) const = default;
};

struct VerificationReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
    std::vector<std::string> found_not_listed;
    std::vector<std::string> listed_not_found;
    std::vector<std::string> notes;
    nlohmann::json summary = nlohmann::json::object();
    double wall_time_ms = -1;  // serialized only when >= 0

    bool pass() const { return violations.empty(); }
    // Sorts every list; call once before serializing.
    void finalize();
    nlohmann::json to_json() const;
    std::string dump() const;  // canonical JSON text with trailing newline
};

struct VerifyOptions {
    int max_order = 7;
    int jobs = 1;
    std::uint64_t seed = 0;
    int samples = 100;
};

VerificationReport verify_exception_catalog(const VerifyOptions& opt = {});
VerificationReport verify_theorem_2_1(const VerifyOptions& opt = {});
// which: "2.10", "2.11", "2.12", "2.13" or "all".
VerificationReport verify_building_lemmas(const std::string& which, const VerifyOptions& opt = {});
VerificationReport verify_small_lemmas(const VerifyOptions& opt = {});
VerificationReport verify_reversal_counts(const VerifyOptions& opt = {});
VerificationReport verify_main_corollary(const VerifyOptions& opt = {});

// Check ids accepted by run_check: catalog, thm2.1, building:<lemma>,
// small-lemmas, reversal, corollary.
VerificationReport run_check(const std::string& check, const VerifyOptions& opt);

namespace detail {
// Runs f(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f);
}  // namespace detail

}  // namespace tk
