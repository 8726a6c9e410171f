#include <set>

#include "tk/catalog.hpp"
#include "verify_common.hpp"

namespace tk {
namespace {

void check_exception(VerificationReport& r, const std::string& id, const Tournament& t, const PathType& p, Mask S) {
    ++r.instances;
    const Mask non = t.vertices() & ~origins(t, p);
    if (non != S)
        r.violations.push_back({format_tournament(t), p.str(),
                                id + ": non-origins " + format_labels(non) + " but S = " + format_labels(S)});
    if (!is_exception_pair(t, p))
        r.violations.push_back({format_tournament(t), p.str(), id + ": no non-origin pair with s+(x,y) >= b1+1"});
}

}  // namespace

VerificationReport verify_exception_catalog(const VerifyOptions&) {
    VerificationReport r;
    r.check = "catalog";
    const int max_order = 8;
    r.params = {{"max_order", max_order}};

    std::set<std::string> seen;
    for (const auto& e : finite_path_exceptions()) {
        const Tournament t = exception_tournament(e.tournament);
        const std::string id = "Exc " + std::to_string(e.id);
        check_exception(r, id, t, e.path, e.S);
        for (const auto& w : e.witnesses) {
            if (!validate_embedding(t, e.path, w))
                r.violations.push_back({format_tournament(t), e.path.str(), id + ": witness " + detail::witness_str(w) + " is not a P-path"});
            else if (e.S >> w[0] & 1)
                r.violations.push_back({format_tournament(t), e.path.str(), id + ": witness " + detail::witness_str(w) + " starts in S"});
        }
        if (!seen.insert(canonical_form(t) + "|" + e.path.str()).second)
            r.violations.push_back({format_tournament(t), e.path.str(), id + ": duplicate record"});
    }
    std::uint64_t fam = 0;
    for (const auto& fi : family_instances(max_order)) {
        check_exception(r, fi.key, fi.t, fi.path, fi.S);
        ++fam;
    }

    std::uint64_t bis = 0;
    for (const auto& b : biexception_records(max_order)) {
        ++r.instances;
        ++bis;
        const std::string t = format_tournament(b.t), p = b.path.str();
        const std::string id = "biexception " + b.id;
        for (const auto& why : detail::biexception_problems(b.t, b.path, b.x, b.tag)) r.violations.push_back({t, p, id + ": " + why});
        const Mask stuck = detail::stuck_vertices(b.t, b.path, b.x);
        if (stuck && stuck != b.S)
            r.notes.push_back(id + ": stated S = " + format_labels(b.S) + ", computed S = " + format_labels(stuck));
    }

    std::uint64_t cyc = 0;
    for (const auto& c : cycle_exceptions()) {
        for (const auto& t : completions(c.tournament)) {
            ++r.instances;
            ++cyc;
            if (auto w = find_cycle_embedding(t, c.cycle))
                r.violations.push_back({format_tournament(t), c.cycle.str(),
                                        "A" + std::to_string(c.id) + ": contains the cycle via " + detail::witness_str(*w)});
        }
    }
    r.summary = {{"finite_exceptions", finite_path_exceptions().size()},
                 {"family_instances", fam},
                 {"biexceptions", bis},
                 {"cycle_exceptions", cycle_exceptions().size()},
                 {"cycle_completions", cyc}};
    r.finalize();
    return r;
}

}  // namespace tk
