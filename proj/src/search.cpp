#include "tk/search.hpp"

#include <stdexcept>

namespace tk {
namespace detail {
namespace {

// Remaining-vertex count at which a Hamiltonian search switches to an exact
// subset DP for the tail.
constexpr int kTail = 12;

class Engine {
public:
    Engine(const Tournament& t, const ArcQuery& q)
        : t_(t), q_(q), m_(static_cast<int>(q.arcs.size()) + 1), within_(q.within & t.vertices()) {
        ham_ = popcount(within_) == m_;
        path_.resize(m_);
    }

    std::optional<Embedding> run() {
        if (m_ > popcount(within_)) return std::nullopt;
        if (popcount(q_.required & within_) != popcount(q_.required)) return std::nullopt;
        if (dfs(0, 0)) return path_;
        return std::nullopt;
    }

private:
    Mask candidates(int depth, Mask used) const {
        Mask cand;
        if (depth == 0) {
            cand = q_.start & within_;
        } else {
            int last = path_[depth - 1];
            cand = (q_.arcs[depth - 1] ? t_.out(last) : t_.in(last)) & within_ & ~used;
        }
        if (depth == m_ - 1) {
            cand &= q_.end;
            if (q_.closing) {
                if (depth == 0) return 0;
                cand &= *q_.closing ? t_.in(path_[0]) : t_.out(path_[0]);
            }
        }
        return cand;
    }

    bool dfs(int depth, Mask used) {
        if (depth == m_) return true;
        if (ham_ && m_ > kTail + 1 && m_ - depth == kTail) return tail(depth, used);
        Mask cand = candidates(depth, used);
        const int slots_after = m_ - depth - 1;
        while (cand) {
            int v = lowest(cand);
            cand &= cand - 1;
            Mask nu = used | bit(v);
            if (popcount(q_.required & ~nu) > slots_after) continue;
            path_[depth] = v;
            if (dfs(depth + 1, nu)) return true;
        }
        return false;
    }

    // Exact completion over the last kTail positions; the DP only removes
    // dead branches, so the witness stays the lexicographically least one.
    bool tail(int depth, Mask used) {
        const Mask rest = within_ & ~used;
        std::vector<int> verts = bits_to_vector(rest);
        const int r = static_cast<int>(verts.size());
        std::vector<std::uint32_t> out_l(r, 0), in_l(r, 0);
        std::uint32_t end_l = 0;
        Mask end_ok = q_.end;
        if (q_.closing) end_ok &= *q_.closing ? t_.in(path_[0]) : t_.out(path_[0]);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j)
                if (i != j) (t_.arc(verts[i], verts[j]) ? out_l[i] : in_l[i]) |= 1u << j;
            if (end_ok >> verts[i] & 1) end_l |= 1u << i;
        }
        const std::uint32_t full = (1u << r) - 1;
        f_.assign(std::size_t{1} << r, 0);
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            int s = std::popcount(mask);
            if (s == 1) {
                f_[mask] = mask & end_l;
                continue;
            }
            bool dir = q_.arcs[m_ - s];
            std::uint32_t acc = 0;
            for (std::uint32_t rem = mask; rem; rem &= rem - 1) {
                int u = std::countr_zero(rem);
                if (f_[mask ^ (1u << u)] & (dir ? out_l[u] : in_l[u])) acc |= 1u << u;
            }
            f_[mask] = acc;
        }
        std::uint32_t allowed = 0;
        Mask entry = q_.arcs[depth - 1] ? t_.out(path_[depth - 1]) : t_.in(path_[depth - 1]);
        for (int i = 0; i < r; ++i)
            if (entry >> verts[i] & 1) allowed |= 1u << i;
        std::uint32_t mask = full;
        for (int p = depth; p < m_; ++p) {
            std::uint32_t pick = f_[mask] & allowed;
            if (!pick) return false;
            int u = std::countr_zero(pick);
            path_[p] = verts[u];
            mask ^= 1u << u;
            if (p + 1 < m_) allowed = q_.arcs[p] ? out_l[u] : in_l[u];
        }
        return true;
    }

    const Tournament& t_;
    const ArcQuery& q_;
    int m_;
    Mask within_;
    bool ham_ = false;
    Embedding path_;
    std::vector<std::uint16_t> f_;
};

}  // namespace

std::optional<Embedding> search(const Tournament& t, const ArcQuery& q) { return Engine(t, q).run(); }

}  // namespace detail

namespace {

bool distinct_in_range(const Tournament& t, const Embedding& seq) {
    Mask seen = 0;
    for (int v : seq) {
        if (v < 0 || v >= t.order() || (seen >> v & 1)) return false;
        seen |= bit(v);
    }
    return true;
}

}  // namespace

bool validate_embedding(const Tournament& t, const PathType& p, const Embedding& seq) {
    if (static_cast<int>(seq.size()) != p.order() || !distinct_in_range(t, seq)) return false;
    auto a = p.arcs();
    for (size_t i = 0; i < a.size(); ++i)
        if (t.arc(seq[i], seq[i + 1]) != a[i]) return false;
    return true;
}

bool validate_embedding(const Tournament& t, const CycleType& c, const Embedding& seq) {
    const int m = c.order();
    if (static_cast<int>(seq.size()) != m || !distinct_in_range(t, seq)) return false;
    std::vector<bool> a(m);
    for (int i = 0; i < m; ++i) a[i] = t.arc(seq[i], seq[(i + 1) % m]);
    return cycle_from_arcs(a) == c;
}

std::optional<Embedding> find_path_embedding(const Tournament& t, const PathType& p, const SearchConstraints& c) {
    if (p.order() > t.order()) return std::nullopt;
    detail::ArcQuery q;
    q.arcs = p.arcs();
    if (c.required_origin) q.start = *c.required_origin;
    q.end = ~c.forbidden_end;
    q.required = c.required_vertices;
    return detail::search(t, q);
}

Mask origins(const Tournament& t, const PathType& p, bool allow_subpaths) {
    if (!allow_subpaths && p.order() != t.order()) throw std::invalid_argument("origins expects a Hamiltonian path type");
    detail::ArcQuery q;
    q.arcs = p.arcs();
    Mask res = 0;
    for (int v = 0; v < t.order(); ++v) {
        q.start = bit(v);
        if (detail::search(t, q)) res |= bit(v);
    }
    return res;
}

Mask origins_avoiding_end(const Tournament& t, const PathType& p, int avoid_end) {
    detail::ArcQuery q;
    q.arcs = p.arcs();
    q.end = ~bit(avoid_end);
    Mask res = 0;
    for (int v = 0; v < t.order(); ++v) {
        q.start = bit(v);
        if (detail::search(t, q)) res |= bit(v);
    }
    return res;
}

std::uint64_t count_path_embeddings(const Tournament& t, const PathType& p) {
    const int n = t.order();
    if (p.order() != n) throw std::invalid_argument("count expects a Hamiltonian path type");
    if (n > 20) throw std::invalid_argument("count supports order at most 20");
    auto a = p.arcs();
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint64_t> cnt(states * n, 0);
    for (int v = 0; v < n; ++v) cnt[(std::size_t{1} << v) * n + v] = 1;
    for (std::size_t mask = 1; mask < states; ++mask) {
        int len = std::popcount(mask);
        if (len == n) continue;
        bool dir = a[len - 1];
        for (int v = 0; v < n; ++v) {
            std::uint64_t c = cnt[mask * n + v];
            if (!c) continue;
            Mask next = (dir ? t.out(v) : t.in(v)) & ~static_cast<Mask>(mask);
            for_each_bit(next, [&](int w) { cnt[(mask | bit(w)) * n + w] += c; });
        }
    }
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) total += cnt[(states - 1) * n + v];
    return total;
}

std::optional<Embedding> find_cycle_embedding(const Tournament& t, const CycleType& c) {
    if (c.order() > t.order()) return std::nullopt;
    auto a = c.arcs();
    detail::ArcQuery q;
    q.closing = a.back();
    a.pop_back();
    q.arcs = std::move(a);
    return detail::search(t, q);
}

}  // namespace tk
