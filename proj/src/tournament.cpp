#include "tk/tournament.hpp"

#include <charconv>
#include <sstream>

namespace tk {

std::vector<int> bits_to_vector(Mask m) {
    std::vector<int> v;
    for_each_bit(m, [&](int x) { v.push_back(x); });
    return v;
}

VertexSet::VertexSet(int order, Mask mask) : order_(order), mask_(mask) {
    if (mask & ~full_mask(order)) throw std::invalid_argument("vertex set exceeds order");
}

std::string Tournament::bits() const {
    std::string s;
    s.reserve(n_ * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) s.push_back(arc(i, j) ? '1' : '0');
    return s;
}

TournamentBuilder::TournamentBuilder(int order) {
    if (order < 1 || order > kMaxOrder) throw std::invalid_argument("tournament order out of range");
    t_.n_ = order;
    for (int i = 0; i < order; ++i) t_.out_[i] = full_mask(i);
}

TournamentBuilder::TournamentBuilder(const Tournament& t) : t_(t) {}

TournamentBuilder& TournamentBuilder::set_arc(int from, int to) {
    t_.out_[from] |= bit(to);
    t_.out_[to] &= ~bit(from);
    return *this;
}

Tournament make_tournament(int order, std::string_view bits) {
    if (order < 1 || order > kMaxOrder) throw std::invalid_argument("tournament order out of range");
    if (bits.size() != static_cast<size_t>(order) * (order - 1) / 2)
        throw std::invalid_argument("arc bit count does not match order");
    TournamentBuilder b(order);
    size_t k = 0;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j, ++k) {
            char c = bits[k];
            if (c == '1') b.set_arc(i, j);
            else if (c == '0') b.set_arc(j, i);
            else throw std::invalid_argument("arc bits must be 0 or 1");
        }
    return b.build();
}

Tournament make_tournament(int order, const std::vector<int>& bits) {
    std::string s;
    for (int b : bits) s.push_back(b ? '1' : '0');
    return make_tournament(order, s);
}

Tournament dual(const Tournament& t) {
    TournamentBuilder b(t.order());
    for (int i = 0; i < t.order(); ++i)
        for (int j = i + 1; j < t.order(); ++j) t.arc(i, j) ? b.set_arc(j, i) : b.set_arc(i, j);
    return b.build();
}

Tournament induced(const Tournament& t, Mask x) {
    if (!x) throw std::invalid_argument("induced subtournament of an empty set");
    auto vs = bits_to_vector(x);
    return relabel(t, vs);
}

Tournament induced(const Tournament& t, const VertexSet& x) { return induced(t, x.mask()); }

Tournament remove_vertex(const Tournament& t, int v) { return induced(t, t.vertices() & ~bit(v)); }

Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
    const int k = static_cast<int>(perm.size());
    TournamentBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) t.arc(perm[i], perm[j]) ? b.set_arc(i, j) : b.set_arc(j, i);
    return b.build();
}

Tournament extend(const Tournament& t, Mask out_of_new) {
    const int n = t.order();
    TournamentBuilder b(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.arc(i, j) ? b.set_arc(i, j) : b.set_arc(j, i);
    for (int i = 0; i < n; ++i) (out_of_new >> i & 1) ? b.set_arc(n, i) : b.set_arc(i, n);
    return b.build();
}

Mask out_section(const Tournament& t, Mask x) {
    Mask reach = x, frontier = x;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= t.out(v); });
        frontier = next & ~reach;
        reach |= next;
    }
    return reach;
}

Mask in_section(const Tournament& t, Mask x) {
    Mask reach = x, frontier = x;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= t.in(v); });
        frontier = next & ~reach;
        reach |= next;
    }
    return reach;
}

VertexSet out_section(const Tournament& t, const VertexSet& x) {
    return VertexSet(t.order(), out_section(t, x.mask()));
}

VertexSet in_section(const Tournament& t, const VertexSet& x) {
    return VertexSet(t.order(), in_section(t, x.mask()));
}

bool is_strong(const Tournament& t) { return out_section(t, bit(0)) == t.vertices() && in_section(t, bit(0)) == t.vertices(); }

Tournament transitive_tournament(int n) { return make_tournament(n, std::string(n * (n - 1) / 2, '1')); }

Tournament parse_tournament(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag, bits;
    int n = 0;
    if (!(in >> tag >> n) || tag != "t") throw ParseError("expected 't <n> <bits>'");
    in >> bits;
    std::string rest;
    if (in >> rest) throw ParseError("trailing input after tournament bits");
    try {
        return make_tournament(n, bits);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string format_tournament(const Tournament& t) { return "t " + std::to_string(t.order()) + " " + t.bits(); }

std::string format_labels(Mask m) {
    std::string s = "{";
    bool first = true;
    for_each_bit(m, [&](int v) {
        if (!first) s += ",";
        s += std::to_string(v + 1);
        first = false;
    });
    return s + "}";
}

std::string format_sequence(const std::vector<int>& seq) {
    std::string s;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(seq[i] + 1);
    }
    return s;
}

}  // namespace tk
