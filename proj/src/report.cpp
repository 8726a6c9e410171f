#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tk/verify.hpp"

namespace tk {

void VerificationReport::finalize() {
    std::sort(violations.begin(), violations.end());
    violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
    for (auto* v : {&found_not_listed, &listed_not_found}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["instances"] = instances;
    auto vs = nlohmann::json::array();
    for (const auto& v : violations)
        vs.push_back({{"tournament", v.tournament}, {"pattern", v.pattern}, {"detail", v.detail}});
    j["violations"] = vs;
    j["diffs"] = {{"found_not_listed", found_not_listed}, {"listed_not_found", listed_not_found}};
    j["notes"] = notes;
    j["summary"] = summary;
    j["status"] = pass() ? "pass" : "fail";
    j["version"] = kVersion;
    if (wall_time_ms >= 0) j["wall_time_ms"] = wall_time_ms;
    return j;
}

std::string VerificationReport::dump() const { return to_json().dump(2) + "\n"; }

VerificationReport run_check(const std::string& check, const VerifyOptions& opt) {
    if (check == "catalog") return verify_exception_catalog(opt);
    if (check == "thm2.1") return verify_theorem_2_1(opt);
    if (check == "small-lemmas") return verify_small_lemmas(opt);
    if (check == "reversal") return verify_reversal_counts(opt);
    if (check == "corollary") return verify_main_corollary(opt);
    if (check == "building") return verify_building_lemmas("all", opt);
    if (check.rfind("building:", 0) == 0) return verify_building_lemmas(check.substr(9), opt);
    throw std::invalid_argument("unknown check " + check);
}

namespace detail {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex mu;
    for (int k = 0; k < jobs; ++k)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace detail
}  // namespace tk
