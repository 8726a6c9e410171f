#include "tk/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "catalog_data.hpp"
#include "tk/canonical.hpp"

namespace tk {
namespace {

Mask parse_labels(const std::string& s) {
    Mask m = 0;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) m |= bit(std::stoi(tok) - 1);
    return m;
}

std::vector<Embedding> parse_witnesses(const std::string& s) {
    std::vector<Embedding> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ';')) {
        if (tok.empty()) continue;
        Embedding w;
        for (char c : tok) w.push_back(c - '1');
        out.push_back(w);
    }
    return out;
}

const data::RawTournament& raw(const std::string& name) {
    for (const auto& r : data::raw_tournaments())
        if (name == r.name) return r;
    throw std::invalid_argument("unknown catalog tournament " + name);
}

std::string key(const Tournament& t, const std::string& pattern) { return canonical_form(t) + "|" + pattern; }

// Extension of a base exception by x, used by both the finite and the
// family-derived biexception records.
BiexceptionRecord make_bi(std::string id, std::string base, const Tournament& bt, int tag, bool out_nb, Mask nb,
                          const PathType& p, Mask S) {
    BiexceptionRecord r;
    r.id = std::move(id);
    r.base = std::move(base);
    r.tag = tag;
    r.path = p;
    r.out_neighbourhood = out_nb;
    r.neighbourhood = nb;
    r.S = S;
    r.x = bt.order();
    r.t = extend(bt, out_nb ? nb : (bt.vertices() & ~nb));
    return r;
}

PathType lift(const PathType& base, int tag) {
    if (tag == 0) {
        auto b = base.blocks;
        ++b[0];
        return make_path_type(true, b);
    }
    auto b = base.blocks;
    b.insert(b.begin(), 1);
    return make_path_type(false, b);
}

void family_biexceptions(int max_order, std::vector<BiexceptionRecord>& out) {
    for (const auto& fi : family_instances(max_order - 1)) {
        const int n = fi.t.order() + 1;
        const Tournament& bt = fi.t;
        const Mask X = fi.x_set, Y = fi.y_set;
        const std::string& f = fi.family;
        auto add = [&](const std::string& rule, int tag, bool out_nb, Mask nb, Mask S) {
            std::string id = rule + "@" + fi.key;
            if (out_nb && tag == 0 && popcount(nb) < 2) return;
            if (out_nb && tag == 0 && (f == "E8" || f == "E8'" || f == "E9" || f == "E9'" || f == "E10" || f == "E10'"))
                id += "[N+=" + format_labels(nb) + "]";
            out.push_back(make_bi(id, fi.key, bt, tag, out_nb, nb, lift(fi.path, tag), S));
        };
        if (f == "E1") add("(E1(n-1),0)", 0, true, bit(0) | bit(1), bit(0));
        if (f == "E3") add("(E3(n-1),0)", 0, true, bit(0) | bit(2), bit(0));
        if (f == "E5") add("(E5(n-1),0)", 0, true, bit(0) | bit(1), bit(0));
        if (f == "E11") add("(E11(n-1),0)", 0, true, bit(0) | bit(1), bit(0));
        if (f == "E13") add("(E13(n-1),0)", 0, true, bit(0) | bit(1), bit(0));
        if (f.rfind("E8", 0) == 0 || f.rfind("E9", 0) == 0 || f.rfind("E10", 0) == 0) {
            const std::string rule = "(" + f + "(n-1),0)";
            for (Mask sub = X; sub; sub = (sub - 1) & X) add(rule, 0, true, sub, X);
        }
        if (f == "E1") add("(E1(n-1),1)", 1, false, 0b111, X);
        if (f == "E2" && n - 1 == 5) add("(E2(5),1)", 1, false, bit(2) | bit(3), bit(4));
        if (f == "E5") {
            Tournament ty = induced(bt, Y);
            bool y3a = ty.order() == 3 && is_strong(ty);
            if (n - 1 == 5 && y3a) add("(E5(5),1)(1)", 1, false, bit(0) | bit(1), bit(0) | bit(1));
            if (popcount(X) == 1 && !y3a) add("(E5(n-1),1)(2)", 1, false, bit(0) | bit(1), bit(1));
        }
        if (f == "E6" && n - 1 == 5) {
            auto ys = bits_to_vector(Y);
            int u = bt.arc(ys[0], ys[1]) ? ys[0] : ys[1];
            add("(E6(5),1)", 1, false, bit(0) | bit(2), bit(2) | bit(u));
        }
        if (f == "E8" && n - 1 == 5) add("(E8(5),1)(1)", 1, false, X, X);
        if (f == "E8" && n - 1 == 6) {
            Tournament tx = induced(bt, X);
            if (!is_strong(tx)) {
                int u = -1;
                for_each_bit(X, [&](int v) {
                    if (popcount(bt.in(v) & X) == 0) u = v;
                });
                add("(E8(6),1)(2)", 1, false, X, bit(u));
            }
        }
    }
    if (max_order >= 7) {
        // The listed (E7(6),1) takes T(Y) = 3A, which the E7 conditions exclude.
        FamilyParams p;
        p.y = make_tournament(3, "101");
        auto fi = instantiate_family_unchecked("E7", p);
        out.push_back(make_bi("(E7(6),1)@" + fi.key, fi.key, fi.t, 1, false, bit(1) | bit(2), lift(fi.path, 1), bit(0)));
    }
}

}  // namespace

std::vector<std::string> tournament_names() {
    std::vector<std::string> v;
    for (const auto& r : data::raw_tournaments()) v.push_back(r.name);
    return v;
}

Tournament exception_tournament(const std::string& name) {
    const auto& r = raw(name);
    Tournament t = make_tournament(r.order, r.bits);
    t.set_label(name);
    return t;
}

std::vector<std::pair<int, int>> free_pairs(const std::string& name) {
    std::vector<std::pair<int, int>> out;
    std::stringstream in(raw(name).free);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto dash = tok.find('-');
        out.emplace_back(std::stoi(tok.substr(0, dash)) - 1, std::stoi(tok.substr(dash + 1)) - 1);
    }
    return out;
}

std::vector<Tournament> completions(const std::string& name) {
    const Tournament base = exception_tournament(name);
    const auto fp = free_pairs(name);
    std::map<std::string, Tournament> classes;
    for (std::uint32_t m = 0; m < (1u << fp.size()); ++m) {
        TournamentBuilder b(base);
        for (size_t i = 0; i < fp.size(); ++i) {
            auto [u, v] = fp[i];
            (m >> i & 1) ? b.set_arc(u, v) : b.set_arc(v, u);
        }
        Tournament t = b.build();
        classes.emplace(canonical_form(t), t);
    }
    std::vector<Tournament> out;
    for (auto& [k, t] : classes) {
        t.set_label(name);
        out.push_back(t);
    }
    return out;
}

const std::vector<ExceptionRecord>& finite_path_exceptions() {
    static const std::vector<ExceptionRecord> v = [] {
        std::vector<ExceptionRecord> out;
        for (const auto& r : data::raw_exceptions()) {
            ExceptionRecord e;
            e.id = r.id;
            e.tournament = r.tournament;
            e.path = parse_path_type(r.path);
            e.S = parse_labels(r.S);
            e.witnesses = parse_witnesses(r.witnesses);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return v;
}

bool is_exception_pair(const Tournament& t, const PathType& p) {
    if (!p.out || p.order() != t.order()) return false;
    const Mask non = t.vertices() & ~origins(t, p);
    const int need = p.blocks[0] + 1;
    bool found = false;
    for_each_bit(non, [&](int x) {
        for_each_bit(non & ~full_mask(x + 1), [&](int y) {
            if (popcount(out_section(t, bit(x) | bit(y))) >= need) found = true;
        });
    });
    return found;
}

const std::vector<CycleExceptionRecord>& cycle_exceptions() {
    static const std::vector<CycleExceptionRecord> v = [] {
        std::vector<CycleExceptionRecord> out;
        for (const auto& r : data::raw_cycle_exceptions()) out.push_back({r.id, r.tournament, parse_cycle_type(r.cycle)});
        return out;
    }();
    return v;
}

const std::vector<BiexceptionRecord>& biexception_records(int max_order) {
    static std::mutex mu;
    static std::map<int, std::vector<BiexceptionRecord>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(max_order);
    if (it != cache.end()) return it->second;
    std::vector<BiexceptionRecord> out;
    const auto& exc = finite_path_exceptions();
    for (const auto& r : data::raw_biexceptions()) {
        const auto& base = exc.at(r.base);
        Tournament bt = exception_tournament(base.tournament);
        if (bt.order() + 1 > max_order) continue;
        PathType p = parse_path_type(r.path);
        int tag = p.out ? 0 : 1;
        out.push_back(make_bi(r.tag, "Exc " + std::to_string(r.base), bt, tag, r.out_neighbourhood,
                              parse_labels(r.neighbourhood), p, parse_labels(r.S)));
    }
    family_biexceptions(max_order, out);
    return cache.emplace(max_order, std::move(out)).first->second;
}

std::optional<std::string> match_exception(const Tournament& t, const PathType& p) {
    static std::mutex mu;
    static std::map<int, std::map<std::string, std::string>> tables;
    const int scope = std::clamp(t.order(), 8, 10);
    std::lock_guard lock(mu);
    auto& table = tables[scope];
    if (table.empty()) {
        for (const auto& e : finite_path_exceptions())
            table.emplace(key(exception_tournament(e.tournament), e.path.str()), "Exc " + std::to_string(e.id));
        for (const auto& fi : family_instances(scope)) table.emplace(key(fi.t, fi.path.str()), fi.key);
    }
    auto it = table.find(key(t, p.str()));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> match_exception(const Tournament& t, const CycleType& c) {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> m;
        for (const auto& r : cycle_exceptions())
            for (const auto& t : completions(r.tournament)) m.emplace(key(t, r.cycle.str()), "A" + std::to_string(r.id));
        return m;
    }();
    auto it = table.find(key(t, c.str()));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> match_biexception(const Tournament& t, const PathType& p, int x) {
    static std::mutex mu;
    static std::map<std::string, std::string> table;
    std::lock_guard lock(mu);
    if (table.empty())
        for (const auto& r : biexception_records(8))
            table.emplace(rooted_canonical_form(r.t, r.x) + "|" + r.path.str(), r.id);
    auto it = table.find(rooted_canonical_form(t, x) + "|" + p.str());
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::string catalog_json() {
    using nlohmann::json;
    auto label_list = [](Mask m) {
        json a = json::array();
        for_each_bit(m, [&](int v) { a.push_back(v + 1); });
        return a;
    };
    json out = json::array();
    for (const auto& name : tournament_names()) {
        json e = {{"kind", "tournament"}, {"id", name}, {"tournament", format_tournament(exception_tournament(name))}};
        json fp = json::array();
        for (auto [u, v] : free_pairs(name)) fp.push_back(json::array({u + 1, v + 1}));
        e["free_pairs"] = fp;
        out.push_back(e);
    }
    for (const auto& e : finite_path_exceptions()) {
        json ws = json::array();
        for (const auto& w : e.witnesses) {
            json seq = json::array();
            for (int v : w) seq.push_back(v + 1);
            ws.push_back(seq);
        }
        out.push_back({{"kind", "path_exception"},
                       {"id", "Exc " + std::to_string(e.id)},
                       {"name", e.tournament},
                       {"tournament", format_tournament(exception_tournament(e.tournament))},
                       {"path", e.path.str()},
                       {"S", label_list(e.S)},
                       {"witnesses", ws}});
    }
    for (const auto& id : family_ids()) out.push_back({{"kind", "family"}, {"id", id}});
    for (const auto& r : biexception_records(9)) {
        json b = {{"kind", "biexception"},
                  {"id", r.id},
                  {"base", r.base},
                  {"tournament", format_tournament(r.t)},
                  {"x", r.x + 1},
                  {"path", r.path.str()},
                  {r.out_neighbourhood ? "N+" : "N-", label_list(r.neighbourhood)},
                  {"S", label_list(r.S)}};
        out.push_back(b);
    }
    for (const auto& r : cycle_exceptions()) {
        json cs = json::array();
        for (const auto& t : completions(r.tournament)) cs.push_back(format_tournament(t));
        out.push_back({{"kind", "cycle_exception"},
                       {"id", "A" + std::to_string(r.id)},
                       {"name", r.tournament},
                       {"cycle", r.cycle.str()},
                       {"completions", cs}});
    }
    return out.dump(2) + "\n";
}

}  // namespace tk
