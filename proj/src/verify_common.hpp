#pragma once

#include <string>
#include <vector>

#include "tk/canonical.hpp"
#include "tk/catalog.hpp"
#include "tk/enumerate.hpp"
#include "tk/patterns.hpp"
#include "tk/search.hpp"
#include "tk/tournament.hpp"
#include "tk/verify.hpp"

namespace tk::detail {

// Per-tournament results gathered in slot order so the merge is independent
// of scheduling.
struct Partial {
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
    std::vector<std::string> found;
};

inline void merge(VerificationReport& r, const std::vector<Partial>& parts) {
    for (const auto& p : parts) {
        r.instances += p.instances;
        r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
        r.found_not_listed.insert(r.found_not_listed.end(), p.found.begin(), p.found.end());
    }
}

inline std::string witness_str(const Embedding& w) { return format_sequence(w); }

// Set of y != x (as a mask over t) with no P-path from y ending elsewhere than x.
inline Mask stuck_vertices(const Tournament& t, const PathType& p, int x) {
    return t.vertices() & ~bit(x) & ~origins_avoiding_end(t, p, x);
}

// Problems with a biexception record; empty when it satisfies the definition.
inline std::vector<std::string> biexception_problems(const Tournament& t, const PathType& p, int x, int tag) {
    std::vector<std::string> out;
    if (origins(t, p) >> x & 1) out.push_back("x is an origin");
    if ((tag == 0 ? t.outdegree(x) : t.indegree(x)) < 2) out.push_back("degree of x below 2");
    const PathType star = drop_origin(p);
    if (!star.out || !is_exception_pair(remove_vertex(t, x), star)) out.push_back("(T-x;*P) is not an exception");
    if (!stuck_vertices(t, p, x)) out.push_back("no vertex y forces x as the end");
    return out;
}

}  // namespace tk::detail
