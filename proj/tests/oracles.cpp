#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Adj adjacency(const tk::Tournament& t) {
    const int n = t.order();
    const std::string b = t.bits();
    Adj a(n, std::vector<bool>(n, false));
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            if (b[k] == '1') a[i][j] = true;
            else a[j][i] = true;
        }
    return a;
}

namespace {

std::string arc_string(const Adj& a, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::string s;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a[perm[i]][perm[j]] ? '1' : '0';
    return s;
}

}  // namespace

std::string canonical(const tk::Tournament& t) {
    const Adj a = adjacency(t);
    std::vector<int> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = arc_string(a, perm);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::set<std::string> classes(int n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::string> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
        std::string bits;
        for (int k = 0; k < pairs; ++k) bits += (m >> k & 1) ? '1' : '0';
        out.insert(canonical(tk::make_tournament(n, bits)));
    }
    return out;
}

bool follows(const Adj& a, const std::vector<bool>& arcs, const std::vector<int>& seq, bool closed) {
    const std::size_t m = seq.size();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const int u = seq[i], v = seq[closed ? (i + 1) % m : i + 1];
        if (a[u][v] != arcs[i]) return false;
    }
    return true;
}

namespace {

template <class F>
void each_path(const tk::Tournament& t, const tk::PathType& p, F&& f) {
    const Adj a = adjacency(t);
    const auto arcs = p.arcs();
    std::vector<int> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (follows(a, arcs, perm, false) && !f(perm)) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::uint64_t origins(const tk::Tournament& t, const tk::PathType& p) {
    std::uint64_t m = 0;
    each_path(t, p, [&](const std::vector<int>& s) {
        m |= std::uint64_t{1} << s[0];
        return true;
    });
    return m;
}

std::uint64_t count_paths(const tk::Tournament& t, const tk::PathType& p) {
    std::uint64_t c = 0;
    each_path(t, p, [&](const std::vector<int>&) {
        ++c;
        return true;
    });
    return c;
}

std::vector<int> least_path(const tk::Tournament& t, const tk::PathType& p) {
    std::vector<int> w;
    each_path(t, p, [&](const std::vector<int>& s) {
        w = s;
        return false;
    });
    return w;
}

bool has_cycle(const tk::Tournament& t, const tk::CycleType& c) {
    const Adj a = adjacency(t);
    const auto arcs = c.arcs();
    const int n = t.order(), m = c.order();
    // every m-subset in every order
    std::vector<int> sel(n, 0);
    std::fill(sel.begin(), sel.begin() + m, 1);
    std::sort(sel.begin(), sel.end());
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (sel[i]) s.push_back(i);
        do {
            if (follows(a, arcs, s, true)) return true;
        } while (std::next_permutation(s.begin(), s.end()));
    } while (std::next_permutation(sel.begin(), sel.end()));
    return false;
}

}  // namespace oracle
