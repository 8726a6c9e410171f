#include <stdexcept>

#include "tk/search.hpp"

namespace tk {
namespace {

constexpr int kExactOrder = 8;

std::vector<bool> rotate(const std::vector<bool>& d, int i) {
    const int n = static_cast<int>(d.size());
    std::vector<bool> e(n);
    for (int k = 0; k < n; ++k) e[k] = d[(i + k) % n];
    return e;
}

// v sits at position 0, its in-neighbours T1 take the last |T1| positions
// and its out-neighbours T2 the ones right after v.
std::optional<Embedding> split_at(const Tournament& t, int v, const std::vector<bool>& e) {
    const int n = t.order();
    const Mask t1 = t.in(v), t2 = t.out(v);
    const int k1 = popcount(t1), k2 = popcount(t2);
    if (k1 == 0 || k2 == 0) return std::nullopt;

    detail::ArcQuery q1;
    q1.arcs.assign(e.begin() + k2 + 1, e.begin() + n - 1);
    q1.within = t1;
    detail::ArcQuery q2;
    q2.arcs.assign(e.begin() + 1, e.begin() + k2);
    q2.within = t2;
    const bool junction = e[k2];

    for (int y : bits_to_vector(t1)) {
        q1.start = bit(y);
        auto p1 = detail::search(t, q1);
        if (!p1) continue;
        q2.end = junction ? t.in(y) : t.out(y);
        auto p2 = detail::search(t, q2);
        if (!p2) continue;
        Embedding w{v};
        w.insert(w.end(), p2->begin(), p2->end());
        w.insert(w.end(), p1->begin(), p1->end());
        return w;
    }
    return std::nullopt;
}

std::optional<Embedding> through_rest(const Tournament& t, int v, const std::vector<bool>& e) {
    const int n = t.order();
    detail::ArcQuery q;
    q.arcs.assign(e.begin() + 1, e.begin() + n - 1);
    q.within = t.vertices() & ~bit(v);
    q.start = e[0] ? t.out(v) : t.in(v);
    q.end = e[n - 1] ? t.in(v) : t.out(v);
    auto p = detail::search(t, q);
    if (!p) return std::nullopt;
    Embedding w{v};
    w.insert(w.end(), p->begin(), p->end());
    return w;
}

// Rotate the witness so it realises the canonical arc string from index 0.
Embedding align(const Tournament& t, const CycleType& c, const Embedding& w) {
    const int n = static_cast<int>(w.size());
    const auto want = c.arcs();
    for (int dir = 0; dir < 2; ++dir) {
        Embedding s = w;
        if (dir) std::reverse(s.begin(), s.end());
        for (int r = 0; r < n; ++r) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) ok = t.arc(s[(r + i) % n], s[(r + i + 1) % n]) == want[i];
            if (ok) {
                Embedding out(n);
                for (int i = 0; i < n; ++i) out[i] = s[(r + i) % n];
                return out;
            }
        }
    }
    return w;
}

}  // namespace

std::optional<Embedding> proof_guided_cycle_embedding(const Tournament& t, const CycleType& c) {
    const int n = t.order();
    if (c.order() != n) throw std::invalid_argument("proof-guided embedding expects a Hamiltonian cycle type");
    if (n <= kExactOrder || c.directed()) return find_cycle_embedding(t, c);

    int min_in = n, min_out = n;
    for (int v = 0; v < n; ++v) {
        min_in = std::min(min_in, t.indegree(v));
        min_out = std::min(min_out, t.outdegree(v));
    }
    // Work where the minimum indegree is the smaller side; a witness of the
    // complemented arc string in the dual is a witness in t.
    const bool flip = min_in > min_out;
    const Tournament w = flip ? dual(t) : t;
    std::vector<bool> d = c.arcs();
    if (flip)
        for (size_t i = 0; i < d.size(); ++i) d[i] = !d[i];

    int v = 0;
    for (int u = 0; u < n; ++u)
        if (w.indegree(u) < w.indegree(v)) v = u;

    for (int i = 0; i < n; ++i) {
        auto e = rotate(d, i);
        if (!e[n - 1] || !e[0]) continue;
        if (auto r = split_at(w, v, e)) return align(t, c, *r);
    }
    for (int i = 0; i < n; ++i) {
        if (auto r = through_rest(w, v, rotate(d, i))) return align(t, c, *r);
    }
    return find_cycle_embedding(t, c);
}

}  // namespace tk
