#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tk/catalog.hpp"
#include "verify_common.hpp"

namespace tk {
namespace {

using detail::Partial;

int clamp_order(int n) { return std::clamp(n, 1, kMaxEnumOrder); }

bool antidirected(const PathType& p) {
    return std::all_of(p.blocks.begin(), p.blocks.end(), [](int b) { return b == 1; });
}

const std::string& regular_form(int n) {
    static const std::map<int, std::string> forms = {
        {3, canonical_form(exception_tournament("3A"))},
        {5, canonical_form(exception_tournament("5A"))},
        {7, canonical_form(exception_tournament("7A"))},
    };
    static const std::string none;
    auto it = forms.find(n);
    return it == forms.end() ? none : it->second;
}

bool grunbaum(const Tournament& t, const std::string& canon, const PathType& p) {
    return antidirected(p) && p.order() == t.order() && canon == regular_form(t.order());
}

// Failing pairs of one lemma, compared against the pairs the statement allows.
struct LemmaSweep {
    std::string name;
    std::set<std::string> allowed;
    std::uint64_t instances = 0;
    std::vector<std::pair<std::string, Violation>> failing;  // key, description
};

std::string pair_key(const std::string& canon, const std::string& pattern) { return canon + "|" + pattern; }

void close_sweep(VerificationReport& r, LemmaSweep& s) {
    std::set<std::string> got;
    nlohmann::json fails = nlohmann::json::array();
    for (auto& [k, v] : s.failing) {
        got.insert(k);
        fails.push_back(v.tournament + " " + v.pattern);
        if (!s.allowed.count(k)) {
            v.detail = s.name + ": " + v.detail;
            r.violations.push_back(v);
        }
    }
    for (const auto& k : s.allowed)
        if (!got.count(k)) {
            auto bar = k.find('|');
            r.violations.push_back({"", k.substr(bar + 1), s.name + ": stated exception " + k + " does not fail"});
        }
    std::sort(fails.begin(), fails.end());
    r.instances += s.instances;
    r.summary[s.name] = {{"instances", s.instances}, {"failing", fails}};
}

template <class Check>
void sweep(LemmaSweep& s, const std::vector<int>& orders, int jobs, Check check) {
    for (int n : orders) {
        const auto& ts = tournaments_of_order(n, jobs);
        std::vector<std::vector<std::pair<std::string, Violation>>> fails(ts.size());
        std::vector<std::uint64_t> counts(ts.size(), 0);
        detail::parallel_for(ts.size(), jobs, [&](std::size_t i) { counts[i] = check(ts[i], fails[i]); });
        for (std::size_t i = 0; i < ts.size(); ++i) {
            s.instances += counts[i];
            s.failing.insert(s.failing.end(), fails[i].begin(), fails[i].end());
        }
    }
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo; n <= hi; ++n) v.push_back(n);
    return v;
}

}  // namespace

VerificationReport verify_theorem_2_1(const VerifyOptions& opt) {
    VerificationReport r;
    r.check = "thm2.1";
    const int max_order = clamp_order(opt.max_order);
    r.params = {{"min_order", 3}, {"max_order", max_order}};
    std::uint64_t matched = 0;
    std::set<std::string> used;
    for (int n = 3; n <= max_order; ++n) {
        const auto& ts = tournaments_of_order(n, opt.jobs);
        const auto types = enumerate_outpath_types(n);
        std::vector<Partial> parts(ts.size());
        std::vector<std::vector<std::string>> hits(ts.size());
        detail::parallel_for(ts.size(), opt.jobs, [&](std::size_t i) {
            const Tournament& t = ts[i];
            for (const auto& p : types) {
                ++parts[i].instances;
                const Mask non = t.vertices() & ~origins(t, p);
                bool qualifying = false;
                for_each_bit(non, [&](int x) {
                    for_each_bit(non & ~full_mask(x + 1), [&](int y) {
                        if (popcount(out_section(t, bit(x) | bit(y))) >= p.blocks[0] + 1) qualifying = true;
                    });
                });
                if (!qualifying) continue;
                if (auto m = match_exception(t, p))
                    hits[i].push_back(*m);
                else
                    parts[i].violations.push_back({format_tournament(t), p.str(),
                                                   "non-origins " + format_labels(non) + " include a pair with s+ >= b1+1"});
            }
        });
        detail::merge(r, parts);
        for (const auto& h : hits) {
            matched += h.size();
            used.insert(h.begin(), h.end());
        }
    }
    r.summary = {{"exception_instances", matched}, {"distinct_records", used.size()}};
    r.finalize();
    return r;
}

VerificationReport verify_small_lemmas(const VerifyOptions& opt) {
    VerificationReport r;
    r.check = "small-lemmas";
    const int max_order = std::min(clamp_order(opt.max_order), 7);
    r.params = {{"max_order", max_order}, {"even_orders", {4, 6, 8}}};
    const std::string c4a = canonical_form(exception_tournament("4A"));
    const std::string c4b = canonical_form(exception_tournament("4B"));
    const std::string c4b_dual = canonical_form(dual(exception_tournament("4B")));
    const std::string c3a = canonical_form(exception_tournament("3A"));

    auto fail = [](std::vector<std::pair<std::string, Violation>>& out, const Tournament& t, const std::string& canon,
                   const std::string& pattern, const std::string& detail) {
        out.push_back({pair_key(canon, pattern), {format_tournament(t), pattern, detail}});
    };

    {
        LemmaSweep s{"remark2.2", {}, 0, {}};
        sweep(s, {4, 6, 8}, opt.jobs, [&](const Tournament& t, auto& out) {
            int k = 0;
            for (int x = 0; x < t.order(); ++x)
                if (canonical_form(remove_vertex(t, x)) == regular_form(t.order() - 1)) ++k;
            if (k > 2) fail(out, t, canonical_form(t), "", std::to_string(k) + " vertices x with T-x regular");
            return std::uint64_t{1};
        });
        close_sweep(r, s);
    }
    {
        LemmaSweep s{"lemma2.3", {pair_key(c4b, "+(1,2)")}, 0, {}};
        sweep(s, range(3, max_order), opt.jobs, [&](const Tournament& t, auto& out) {
            const std::string canon = canonical_form(t);
            std::uint64_t k = 0;
            for (const auto& p : enumerate_outpath_types(t.order())) {
                if (p.blocks.size() == 1 || grunbaum(t, canon, p)) continue;
                ++k;
                Mask with_in = 0;
                for (int v = 0; v < t.order(); ++v)
                    if (t.indegree(v) >= 1) with_in |= bit(v);
                if (!(origins(t, p) & with_in)) fail(out, t, canon, p.str(), "no origin of indegree >= 1");
            }
            return k;
        });
        close_sweep(r, s);
    }
    {
        LemmaSweep s{"lemma2.4", {pair_key(c4b, "+(1,1,1)"), pair_key(c4b, "+(2,1)"), pair_key(c3a, "+(2)")}, 0, {}};
        sweep(s, range(3, max_order), opt.jobs, [&](const Tournament& t, auto& out) {
            const std::string canon = canonical_form(t);
            std::uint64_t k = 0;
            for (const auto& p : enumerate_outpath_types(t.order())) {
                if (grunbaum(t, canon, p)) continue;
                ++k;
                Mask big = 0;
                for (int v = 0; v < t.order(); ++v)
                    if (t.outdegree(v) >= 2) big |= bit(v);
                const Mask o = origins(t, p);
                if (!(o & big)) {
                    std::string d = "no origin of outdegree >= 2";
                    if (popcount(o) < 3) d += "; only " + std::to_string(popcount(o)) + " origins";
                    fail(out, t, canon, p.str(), d);
                }
            }
            return k;
        });
        close_sweep(r, s);
    }
    {
        LemmaSweep s{"lemma2.5", {pair_key(c4b_dual, "+(1,1,1)")}, 0, {}};
        sweep(s, range(3, max_order), opt.jobs, [&](const Tournament& t, auto& out) {
            const std::string canon = canonical_form(t);
            std::uint64_t k = 0;
            for (const auto& p : enumerate_outpath_types(t.order())) {
                if (p.blocks.size() < 3 || grunbaum(t, canon, p)) continue;
                ++k;
                auto arcs = p.arcs();
                detail::ArcQuery q;
                q.arcs.assign(arcs.begin() + 1, arcs.end());
                bool found = false;
                for (int a2 = 0; a2 < t.order() && !found; ++a2) {
                    if (t.outdegree(a2) < 1) continue;
                    for_each_bit(t.in(a2), [&](int a1) {
                        if (found) return;
                        q.start = bit(a2);
                        q.within = t.vertices() & ~bit(a1);
                        found = detail::search(t, q).has_value();
                    });
                }
                if (!found) fail(out, t, canon, p.str(), "no P-path with d+(a2) >= 1");
            }
            return k;
        });
        close_sweep(r, s);
    }
    {
        LemmaSweep s{"lemma2.6", {pair_key(c4a, "+(1,1,1)"), pair_key(c4b_dual, "+(1,1,1)")}, 0, {}};
        sweep(s, {4, 6, 8}, opt.jobs, [&](const Tournament& t, auto& out) {
            detail::ArcQuery q;
            const PathType anti = make_path_type(true, std::vector<int>(t.order() - 1, 1));
            q.arcs = anti.arcs();
            q.start = q.end = 0;
            for (int v = 0; v < t.order(); ++v) {
                if (t.indegree(v) >= 2) q.start |= bit(v);
                if (t.outdegree(v) >= 1) q.end |= bit(v);
            }
            if (!detail::search(t, q)) fail(out, t, canonical_form(t), anti.str(), "no antidirected outpath with d-(x1) >= 2, d+(xn) >= 1");
            return std::uint64_t{1};
        });
        close_sweep(r, s);
    }
    {
        LemmaSweep s{"remark2.7", {}, 0, {}};
        sweep(s, range(3, max_order), opt.jobs, [&](const Tournament& t, auto& out) {
            bool minimal = false;
            for (int v = 0; v < t.order(); ++v) minimal |= t.indegree(v) == 0;
            if (!minimal) return std::uint64_t{0};
            std::uint64_t k = 0;
            for (const auto& p : enumerate_outpath_types(t.order())) {
                if (p.blocks.size() < 3 || p.blocks[0] != 1) continue;
                ++k;
                const int o = popcount(origins(t, p));
                if (o < t.order() - 2) fail(out, t, canonical_form(t), p.str(), std::to_string(o) + " origins");
            }
            return k;
        });
        close_sweep(r, s);
    }
    {
        // Records whose origin sets in T and in the dual are disjoint.
        std::set<std::string> expected;
        for (int id : {0, 1, 4, 7, 18, 19, 22, 33}) expected.insert("Exc " + std::to_string(id));
        std::vector<std::pair<std::string, std::pair<Tournament, PathType>>> records;
        for (const auto& e : finite_path_exceptions())
            records.push_back({"Exc " + std::to_string(e.id), {exception_tournament(e.tournament), e.path}});
        for (const auto& fi : family_instances(8)) {
            records.push_back({fi.key, {fi.t, fi.path}});
            if (fi.family == "E1" &&
                (fi.t.order() == 4 || (fi.t.order() == 6 && is_strong(induced(fi.t, fi.x_set)))))
                expected.insert(fi.key);
        }
        std::set<std::string> got;
        for (const auto& [id, tp] : records) {
            ++r.instances;
            const auto& [t, p] = tp;
            if (!(origins(t, p) & origins(dual(t), p))) got.insert(id);
        }
        for (const auto& id : got)
            if (!expected.count(id)) r.violations.push_back({"", "", "lemma2.8: " + id + " has disjoint origin sets"});
        for (const auto& id : expected)
            if (!got.count(id)) r.violations.push_back({"", "", "lemma2.8: " + id + " shares an origin with its dual"});
        r.summary["lemma2.8"] = {{"instances", records.size()}, {"disjoint", std::vector<std::string>(got.begin(), got.end())}};
    }
    r.finalize();
    return r;
}

VerificationReport verify_reversal_counts(const VerifyOptions& opt) {
    VerificationReport r;
    r.check = "reversal";
    const int max_order = clamp_order(opt.max_order);
    constexpr int kSampleOrder = 10, kTypesPerSample = 10;
    r.params = {{"min_order", 2}, {"max_order", max_order}, {"samples", opt.samples}, {"sample_order", kSampleOrder},
                {"types_per_sample", kTypesPerSample}, {"seed", opt.seed}};
    auto check = [](const Tournament& t, const PathType& p, Partial& part) {
        ++part.instances;
        const auto a = count_path_embeddings(t, p), b = count_path_embeddings(t, dual_type(p));
        if (a != b)
            part.violations.push_back({format_tournament(t), p.str(),
                                       "count " + std::to_string(a) + " vs dual " + std::to_string(b)});
    };
    for (int n = 2; n <= max_order; ++n) {
        const auto& ts = tournaments_of_order(n, opt.jobs);
        const auto types = enumerate_path_types(n);
        std::vector<Partial> parts(ts.size());
        detail::parallel_for(ts.size(), opt.jobs, [&](std::size_t i) {
            for (const auto& p : types) check(ts[i], p, parts[i]);
        });
        detail::merge(r, parts);
    }
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<Tournament, std::vector<PathType>>> samples;
    for (int s = 0; s < opt.samples; ++s) {
        std::vector<int> bits(kSampleOrder * (kSampleOrder - 1) / 2);
        for (auto& b : bits) b = static_cast<int>(rng() & 1);
        std::vector<PathType> types;
        for (int k = 0; k < kTypesPerSample; ++k) {
            std::vector<bool> arcs(kSampleOrder - 1);
            for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i] = rng() & 1;
            types.push_back(path_type_from_arcs(arcs));
        }
        samples.emplace_back(make_tournament(kSampleOrder, bits), std::move(types));
    }
    std::vector<Partial> parts(samples.size());
    detail::parallel_for(samples.size(), opt.jobs, [&](std::size_t i) {
        for (const auto& p : samples[i].second) check(samples[i].first, p, parts[i]);
    });
    detail::merge(r, parts);
    r.finalize();
    return r;
}

}  // namespace tk
