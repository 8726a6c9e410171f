#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "tk/canonical.hpp"
#include "tk/catalog.hpp"
#include "tk/enumerate.hpp"

namespace tk {
namespace {

// Layout of a family tournament: `fixed` labelled vertices first, then the
// rest of X, then Y. When X carries a labelled vertex it sits at `slot`.
struct Layout {
    int fixed = 0;
    int slot = -1;
    int x_size = 0;
    int y_size = 0;
    std::vector<int> x_index;  // X vertex i -> index in the instance
    std::vector<int> y_index;

    int order() const { return fixed + x_size - (slot >= 0 ? 1 : 0) + y_size; }
};

Layout make_layout(int fixed, int slot, const FamilyParams& p) {
    Layout l;
    l.fixed = fixed;
    l.slot = slot;
    l.x_size = p.x ? p.x->order() : 0;
    l.y_size = p.y ? p.y->order() : 0;
    int next = fixed;
    for (int i = 0; i < l.x_size; ++i) {
        if (slot >= 0 && i == p.designated) l.x_index.push_back(slot);
        else l.x_index.push_back(next++);
    }
    for (int i = 0; i < l.y_size; ++i) l.y_index.push_back(next++);
    return l;
}

Mask index_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= bit(i);
    return m;
}

void copy_inside(TournamentBuilder& b, const Tournament& part, const std::vector<int>& idx) {
    for (int i = 0; i < part.order(); ++i)
        for (int j = i + 1; j < part.order(); ++j)
            part.arc(i, j) ? b.set_arc(idx[i], idx[j]) : b.set_arc(idx[j], idx[i]);
}

void all_to(TournamentBuilder& b, Mask from, Mask to) {
    for_each_bit(from, [&](int u) { for_each_bit(to & ~bit(u), [&](int v) { b.set_arc(u, v); }); });
}

bool is_ingenerator(const Tournament& t, int v) { return in_section(t, bit(v)) == t.vertices(); }

std::string tag(const Tournament& t) { return canonical_form(t).empty() ? "K1" : canonical_form(t); }

PathType headed(int first, std::vector<int> rest) {
    rest.insert(rest.begin(), first);
    return make_path_type(true, rest);
}

thread_local bool checking = true;

void require(bool ok, const char* what) {
    if (checking && !ok) throw std::invalid_argument(what);
}

Tournament regular_core(int n) {
    // 3A, 5A (i -> i+1, i+2) and the Paley tournament 7A (i -> i+1, i+2, i+4).
    TournamentBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int d = (j - i + n) % n;
            bool fwd = n == 3 ? d == 1 : n == 5 ? (d == 1 || d == 2) : (d == 1 || d == 2 || d == 4);
            if (fwd) b.set_arc(i, j);
        }
    return b.build();
}

FamilyInstance finish(const std::string& id, TournamentBuilder& b, const Layout& l, PathType p, Mask S,
                      const FamilyParams& params) {
    FamilyInstance fi;
    fi.family = id;
    fi.t = b.build();
    fi.path = std::move(p);
    fi.S = S;
    fi.x_set = index_mask(l.x_index);
    fi.y_set = index_mask(l.y_index);
    fi.key = id + "(" + std::to_string(fi.t.order()) + ")";
    if (params.x) fi.key += "[X=" + tag(*params.x) + (l.slot >= 0 ? ",d=" + std::to_string(params.designated + 1) : "") + "]";
    if (params.y) fi.key += "[Y=" + tag(*params.y) + "]";
    return fi;
}

FamilyInstance build(const std::string& id, const FamilyParams& p) {
    const auto& X = p.x;
    const auto& Y = p.y;
    const int kx = X ? X->order() : 0;
    const int ky = Y ? Y->order() : 0;

    if (id == "E1" || id == "E2") {
        require(kx >= 1 && !Y, "needs |X| >= 1 and no Y");
        const int fixed = id == "E1" ? 3 : 4;
        Layout l = make_layout(fixed, -1, p);
        TournamentBuilder b(l.order());
        copy_inside(b, *X, l.x_index);
        if (id == "E1") {
            b.set_arc(0, 1).set_arc(1, 2).set_arc(2, 0);
        } else {
            b.set_arc(0, 1).set_arc(1, 2).set_arc(1, 3).set_arc(2, 0).set_arc(3, 0).set_arc(3, 2);
        }
        all_to(b, index_mask(l.x_index), full_mask(fixed));
        int n = l.order();
        return id == "E1" ? finish(id, b, l, headed(1, {n - 2}), 0b111, p)
                          : finish(id, b, l, headed(2, {n - 3}), 0b1100, p);
    }
    if (id == "E3" || id == "E4") {
        require(kx >= 2 && !Y, "needs |X| >= 2 and no Y");
        require(p.designated >= 0 && p.designated < kx, "designated vertex out of range");
        require(is_ingenerator(*X, p.designated), "3 must be an ingenerator of T(X)");
        require(X->outdegree(p.designated) >= 1, "N+(3) must differ from {2}");
        const bool e4 = id == "E4";
        Layout l = make_layout(e4 ? 4 : 3, 2, p);
        TournamentBuilder b(l.order());
        copy_inside(b, *X, l.x_index);
        const Mask xs = index_mask(l.x_index);
        const Mask low = e4 ? (bit(0) | bit(3)) : bit(0);
        for_each_bit(low, [&](int v) { b.set_arc(1, v); });
        all_to(b, xs & ~bit(2), low);
        all_to(b, low, bit(2));
        all_to(b, xs, bit(1));
        if (e4) b.set_arc(0, 3);
        int n = l.order();
        return e4 ? finish(id, b, l, headed(2, {n - 3}), bit(0) | bit(3), p)
                  : finish(id, b, l, headed(1, {n - 2}), bit(0) | bit(2), p);
    }
    if (id == "E5" || id == "E6") {
        require(kx >= 1 && ky >= 2, "needs |X| >= 1 and |Y| >= 2");
        require(p.designated >= 0 && p.designated < kx, "designated vertex out of range");
        require(is_ingenerator(*X, p.designated), "2 must be an ingenerator of T(X)");
        const bool e6 = id == "E6";
        Layout l = make_layout(e6 ? 3 : 2, 1, p);
        require(l.order() >= 5, "needs n >= 5");
        TournamentBuilder b(l.order());
        copy_inside(b, *X, l.x_index);
        copy_inside(b, *Y, l.y_index);
        const Mask xs = index_mask(l.x_index), ys = index_mask(l.y_index);
        const Mask low = e6 ? (bit(0) | bit(2)) : bit(0);
        all_to(b, xs, ys);
        all_to(b, (xs & ~bit(1)) | ys, low);
        all_to(b, low, bit(1));
        if (e6) b.set_arc(2, 0);
        int n = l.order();
        return e6 ? finish(id, b, l, headed(2, {n - 3}), bit(0) | bit(2), p)
                  : finish(id, b, l, headed(1, {n - 2}), bit(0) | bit(1), p);
    }
    if (id == "E7") {
        require(!X && ky >= 3, "needs |Y| >= 3");
        require(!(ky == 3 && is_strong(*Y)), "T(Y) must not be a 3-cycle");
        FamilyParams q;
        q.x = Y;
        Layout l = make_layout(3, -1, q);
        std::swap(l.x_index, l.y_index);
        std::swap(l.x_size, l.y_size);
        TournamentBuilder b(l.order());
        copy_inside(b, *Y, l.y_index);
        const Mask ys = index_mask(l.y_index);
        all_to(b, bit(0), ys);
        all_to(b, ys, bit(1) | bit(2));
        all_to(b, bit(1) | bit(2), bit(0));
        b.set_arc(2, 1);
        int n = l.order();
        return finish(id, b, l, make_path_type(true, {1, 1, n - 3}), bit(1) | bit(2), p);
    }
    if (id == "E8" || id == "E8'" || id == "E9" || id == "E9'" || id == "E10" || id == "E10'") {
        require(kx >= 2 && !Y, "needs |X| >= 2 and no Y");
        const int core = id[1] == '8' ? 3 : id[1] == '9' ? 5 : 7;
        const bool primed = id.back() == '\'';
        Layout l = make_layout(core, -1, p);
        TournamentBuilder b(l.order());
        Tournament c = regular_core(core);
        std::vector<int> cidx(core);
        for (int i = 0; i < core; ++i) cidx[i] = i;
        copy_inside(b, c, cidx);
        copy_inside(b, *X, l.x_index);
        const Mask xs = index_mask(l.x_index);
        all_to(b, full_mask(core), xs);
        const int n = l.order();
        std::vector<int> tail;
        if (primed) tail = {2};
        tail.insert(tail.end(), primed ? core - 2 : core, 1);
        tail.insert(tail.begin(), n - core - 1);
        return finish(id, b, l, make_path_type(true, tail), xs, p);
    }
    if (id == "E11" || id == "E12" || id == "E13" || id == "E14") {
        require(kx >= 2 && !Y, "needs |X| >= 2 and no Y");
        const int fixed = id == "E11" ? 3 : id == "E12" ? 4 : id == "E13" ? 5 : 6;
        Layout l = make_layout(fixed, -1, p);
        TournamentBuilder b(l.order());
        copy_inside(b, *X, l.x_index);
        const Mask xs = index_mask(l.x_index);
        // c: labelled vertices inside the big ellipse besides X.
        Mask c = bit(0);
        if (id == "E12") c |= bit(3);
        if (id == "E14") c |= bit(5);
        Mask tri = (id == "E13" || id == "E14") ? (bit(2) | bit(3) | bit(4)) : bit(2);
        all_to(b, xs, c);
        if (id == "E12") b.set_arc(3, 0);
        if (id == "E14") b.set_arc(5, 0);
        if (tri == bit(2)) {
            b.set_arc(1, 2);
        } else {
            all_to(b, bit(1), tri);
            b.set_arc(2, 3).set_arc(3, 4).set_arc(4, 2);
        }
        all_to(b, tri, c | xs);
        all_to(b, c | xs, bit(1));
        const int n = l.order();
        const bool two = id == "E12" || id == "E14";
        PathType path = two ? make_path_type(true, {2, 1, n - 4}) : make_path_type(true, {1, 1, n - 3});
        return finish(id, b, l, path, bit(0) | (two ? c & ~bit(0) : bit(1)), p);
    }
    throw std::invalid_argument("unknown family " + id);
}

struct FamilyShape {
    std::string id;
    int fixed;        // vertices outside X and Y
    bool has_y;
    bool designated;  // X carries a labelled vertex
    int min_x, min_y;
};

const std::vector<FamilyShape>& shapes() {
    static const std::vector<FamilyShape> s = {
        {"E1", 3, false, false, 1, 0},   {"E2", 4, false, false, 1, 0},   {"E3", 2, false, true, 2, 0},
        {"E4", 3, false, true, 2, 0},    {"E5", 1, true, true, 1, 2},     {"E6", 2, true, true, 1, 2},
        {"E7", 3, true, false, 0, 3},    {"E8", 3, false, false, 2, 0},   {"E8'", 3, false, false, 2, 0},
        {"E9", 5, false, false, 2, 0},   {"E9'", 5, false, false, 2, 0},  {"E10", 7, false, false, 2, 0},
        {"E10'", 7, false, false, 2, 0}, {"E11", 3, false, false, 2, 0},  {"E12", 4, false, false, 2, 0},
        {"E13", 5, false, false, 2, 0},  {"E14", 6, false, false, 2, 0},
    };
    return s;
}

std::vector<FamilyInstance> generate(int max_order) {
    std::vector<FamilyInstance> out;
    std::set<std::pair<std::string, std::string>> seen;
    auto add = [&](const std::string& id, const FamilyParams& p) {
        try {
            auto fi = build(id, p);
            auto k = std::make_pair(canonical_form(fi.t) + fi.path.str(), id);
            if (seen.insert(k).second) out.push_back(std::move(fi));
        } catch (const std::invalid_argument&) {
        }
    };
    for (const auto& s : shapes()) {
        for (int n = s.fixed + s.min_x + s.min_y; n <= max_order; ++n) {
            const int rest = n - s.fixed;
            for (int kx = s.has_y && s.min_x == 0 ? 0 : s.min_x; kx <= rest; ++kx) {
                const int ky = rest - kx;
                if (s.has_y ? ky < s.min_y : ky != 0) continue;
                if (kx == 0 && s.min_x > 0) continue;
                if (s.id == "E7" && kx != 0) continue;
                const std::vector<Tournament> none;
                const auto& xs = kx ? tournaments_of_order(kx) : none;
                const auto& ys = ky ? tournaments_of_order(ky) : none;
                auto each_y = [&](FamilyParams p) {
                    if (!ky) return add(s.id, p);
                    for (const auto& y : ys) {
                        p.y = y;
                        add(s.id, p);
                    }
                };
                if (!kx) {
                    each_y(FamilyParams{});
                    continue;
                }
                for (const auto& x : xs) {
                    for (int d = 0; d < (s.designated ? kx : 1); ++d) {
                        FamilyParams p;
                        p.x = x;
                        p.designated = d;
                        each_y(p);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> family_ids() {
    std::vector<std::string> ids;
    for (const auto& s : shapes()) ids.push_back(s.id);
    return ids;
}

FamilyInstance instantiate_family(const std::string& id, const FamilyParams& params) { return build(id, params); }

FamilyInstance instantiate_family_unchecked(const std::string& id, const FamilyParams& params) {
    checking = false;
    try {
        auto fi = build(id, params);
        checking = true;
        return fi;
    } catch (...) {
        checking = true;
        throw;
    }
}

const std::vector<FamilyInstance>& family_instances(int max_order) {
    static std::mutex mu;
    static std::map<int, std::vector<FamilyInstance>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(max_order);
    if (it == cache.end()) it = cache.emplace(max_order, generate(max_order)).first;
    return it->second;
}

}  // namespace tk
