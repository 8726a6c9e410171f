#include "tk/enumerate.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "tk/canonical.hpp"

namespace tk {
namespace {

std::mutex cache_mutex;
std::map<int, std::unique_ptr<std::vector<Tournament>>> cache;

// Children of one canonical parent whose canonical parent is that parent.
std::vector<std::string> children(const Tournament& parent, const std::string& parent_form) {
    const int n = parent.order() + 1;
    std::set<std::string> found;
    for (Mask out = 0; out < bit(n - 1); ++out) {
        Tournament t = extend(parent, out);
        auto lab = canonical_labeling(t);
        if (found.count(lab.bits)) continue;
        if (canonical_form(remove_vertex(t, lab.order.back())) != parent_form) continue;
        found.insert(lab.bits);
    }
    return {found.begin(), found.end()};
}

std::vector<Tournament> generate(int n, int jobs) {
    if (n == 1) return {make_tournament(1, "")};
    const auto& parents = tournaments_of_order(n - 1, jobs, true);
    std::vector<std::vector<std::string>> parts(parents.size());
    std::vector<std::string> forms(parents.size());
    for (size_t i = 0; i < parents.size(); ++i) forms[i] = parents[i].bits();
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < parents.size(); i += workers) parts[i] = children(parents[i], forms[i]);
        });
    for (auto& th : pool) th.join();
    std::vector<std::string> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    std::vector<Tournament> out;
    out.reserve(all.size());
    for (auto& s : all) out.push_back(make_tournament(n, s));
    return out;
}

}  // namespace

const std::vector<Tournament>& tournaments_of_order(int n, int jobs, bool allow_extended) {
    const int cap = allow_extended ? kMaxEnumOrderExtended : kMaxEnumOrder;
    if (n < 1 || n > cap) throw std::invalid_argument("enumeration order out of range");
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto list = std::make_unique<std::vector<Tournament>>(generate(n, jobs));
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::move(list);
    return *slot;
}

std::uint64_t count_tournaments(int n, int jobs, bool allow_extended) {
    return tournaments_of_order(n, jobs, allow_extended).size();
}

int default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

}  // namespace tk
