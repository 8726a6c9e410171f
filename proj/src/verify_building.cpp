#include <map>
#include <set>

#include "verify_common.hpp"

namespace tk {
namespace {

struct Base {
    std::string id;
    Tournament t;
    PathType path;
};

struct Lemma {
    std::string name;
    bool families;
    int tag;
};

constexpr int kMaxBaseOrder = 7;

const std::vector<Lemma> kLemmas = {
    {"2.10", false, 0}, {"2.11", false, 1}, {"2.12", true, 0}, {"2.13", true, 1}};

PathType lifted(const PathType& q, int tag) {
    auto b = q.blocks;
    if (tag == 0) {
        ++b[0];
        return make_path_type(true, b);
    }
    b.insert(b.begin(), 1);
    return make_path_type(false, b);
}

std::vector<Base> bases(bool families) {
    std::vector<Base> out;
    if (!families) {
        for (const auto& e : finite_path_exceptions()) {
            Tournament t = exception_tournament(e.tournament);
            if (t.order() <= kMaxBaseOrder) out.push_back({"Exc " + std::to_string(e.id), t, e.path});
        }
    } else {
        for (const auto& fi : family_instances(kMaxBaseOrder)) out.push_back({fi.key, fi.t, fi.path});
    }
    return out;
}

struct Found {
    std::string key;
    std::string text;
};

struct BasePartial {
    std::uint64_t extensions = 0;
    std::uint64_t skipped = 0;
    std::vector<Found> found;
};

void run_lemma(const Lemma& L, const VerifyOptions& opt, VerificationReport& r) {
    const auto bs = bases(L.families);
    std::vector<BasePartial> parts(bs.size());
    detail::parallel_for(bs.size(), opt.jobs, [&](std::size_t i) {
        const Base& b = bs[i];
        const int n0 = b.t.order();
        const PathType p = lifted(b.path, L.tag);
        std::set<std::string> seen;
        for (Mask nb = 0; nb <= full_mask(n0); ++nb) {
            const Tournament t = extend(b.t, nb);
            const int x = n0;
            if ((L.tag == 0 ? t.outdegree(x) : t.indegree(x)) < 2) continue;
            const std::string key = rooted_canonical_form(t, x) + "|" + p.str();
            if (!seen.insert(key).second) continue;
            ++parts[i].extensions;
            if (origins(t, p) >> x & 1) {
                ++parts[i].skipped;
                continue;
            }
            const Mask stuck = detail::stuck_vertices(t, p, x);
            if (!stuck) continue;
            const bool out_nb = L.tag == 0;
            const Mask shown = out_nb ? nb : (b.t.vertices() & ~nb);
            parts[i].found.push_back({key, L.name + " " + b.id + " " + (out_nb ? "N+" : "N-") + "=" + format_labels(shown) +
                                               " P=" + p.str() + " S=" + format_labels(stuck)});
        }
    });

    std::map<std::string, std::string> computed;
    std::uint64_t extensions = 0, skipped = 0;
    for (const auto& part : parts) {
        extensions += part.extensions;
        skipped += part.skipped;
        for (const auto& f : part.found) computed.emplace(f.key, f.text);
    }

    std::map<std::string, std::string> listed;
    std::uint64_t records = 0;
    for (const auto& rec : biexception_records(kMaxBaseOrder + 1)) {
        const bool family_base = rec.base.rfind("Exc ", 0) != 0;
        if (family_base != L.families || rec.tag != L.tag) continue;
        ++records;
        ++r.instances;
        for (const auto& why : detail::biexception_problems(rec.t, rec.path, rec.x, rec.tag))
            r.violations.push_back({format_tournament(rec.t), rec.path.str(), L.name + " " + rec.id + ": " + why});
        listed.emplace(rooted_canonical_form(rec.t, rec.x) + "|" + rec.path.str(), rec.id);
    }
    for (const auto& [k, text] : computed)
        if (!listed.count(k)) r.found_not_listed.push_back(text);
    for (const auto& [k, id] : listed)
        if (!computed.count(k)) r.listed_not_found.push_back(L.name + " " + id);

    r.instances += extensions;
    r.summary[L.name] = {{"bases", bs.size()},
                         {"extensions", extensions},
                         {"x_is_origin", skipped},
                         {"computed_biexceptions", computed.size()},
                         {"listed_records", records},
                         {"listed_classes", listed.size()}};
}

}  // namespace

VerificationReport verify_building_lemmas(const std::string& which, const VerifyOptions& opt) {
    VerificationReport r;
    r.check = which == "all" ? "building" : "building:" + which;
    r.params = {{"max_base_order", kMaxBaseOrder}, {"lemmas", nlohmann::json::array()}};
    bool any = false;
    for (const auto& L : kLemmas) {
        if (which != "all" && which != L.name) continue;
        any = true;
        r.params["lemmas"].push_back(L.name);
        run_lemma(L, opt, r);
    }
    if (!any) throw std::invalid_argument("unknown building lemma " + which);
    r.finalize();
    return r;
}

}  // namespace tk
