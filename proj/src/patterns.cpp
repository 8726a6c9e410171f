#include "tk/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <numeric>

#include "tk/tournament.hpp"

namespace tk {
namespace {

std::vector<int> blocks_of(const std::vector<bool>& arcs) {
    std::vector<int> b;
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (i == 0 || arcs[i] != arcs[i - 1]) b.push_back(0);
        ++b.back();
    }
    return b;
}

std::vector<bool> arcs_of(bool first, const std::vector<int>& blocks) {
    std::vector<bool> a;
    bool cur = first;
    for (int b : blocks) {
        a.insert(a.end(), b, cur);
        cur = !cur;
    }
    return a;
}

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<int> parse_list(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("expected a parenthesised block list");
    std::vector<int> out;
    std::string cur;
    for (size_t i = 1; i + 1 <= s.size() - 1; ++i) {
        char c = s[i];
        if (c == ',') {
            if (cur.empty()) throw ParseError("empty block");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur.push_back(c);
            if (cur.size() > 3) throw ParseError("block too long");
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
    if (cur.empty()) throw ParseError(out.empty() ? "empty block list" : "empty block");
    out.push_back(std::stoi(cur));
    for (int b : out)
        if (b < 1) throw ParseError("blocks must be positive");
    return out;
}

void check_blocks(const std::vector<int>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("empty block list");
    for (int b : blocks)
        if (b < 1) throw std::invalid_argument("blocks must be positive");
}

}  // namespace

int PathType::order() const { return 1 + std::accumulate(blocks.begin(), blocks.end(), 0); }

std::vector<bool> PathType::arcs() const { return arcs_of(out, blocks); }

std::string PathType::str() const { return (out ? "+" : "-") + join(blocks); }

int CycleType::order() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

std::vector<bool> CycleType::arcs() const { return arcs_of(true, blocks); }

std::string CycleType::str() const { return join(blocks); }

PathType make_path_type(bool out, std::vector<int> blocks) {
    check_blocks(blocks);
    return PathType{out, std::move(blocks)};
}

PathType path_type_from_arcs(const std::vector<bool>& arcs) {
    if (arcs.empty()) throw std::invalid_argument("a path needs at least one arc");
    return PathType{arcs.front(), blocks_of(arcs)};
}

PathType parse_path_type(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    if (text.empty() || (text.front() != '+' && text.front() != '-'))
        throw ParseError("path type must start with '+' or '-'");
    bool out = text.front() == '+';
    text.remove_prefix(1);
    return PathType{out, parse_list(text)};
}

PathType dual_type(const PathType& p) { return PathType{!p.out, p.blocks}; }

PathType reverse_type(const PathType& p) {
    auto a = p.arcs();
    std::vector<bool> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = !a[a.size() - 1 - i];
    return path_type_from_arcs(r);
}

PathType drop_origin(const PathType& p) {
    auto a = p.arcs();
    if (a.size() < 2) throw std::invalid_argument("path too short to drop its origin");
    a.erase(a.begin());
    return path_type_from_arcs(a);
}

std::vector<PathType> enumerate_path_types(int order) {
    std::vector<PathType> out;
    for (bool sign : {true, false})
        for (auto& p : enumerate_outpath_types(order)) out.push_back(sign ? p : dual_type(p));
    return out;
}

std::vector<PathType> enumerate_outpath_types(int order) {
    if (order < 2) throw std::invalid_argument("path order must be at least 2");
    const int m = order - 1;
    std::vector<PathType> out;
    // Compositions of m: bit i of the mask marks a block boundary after arc i.
    for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<int> blocks{1};
        for (int i = 0; i < m - 1; ++i) {
            if (mask >> i & 1) blocks.push_back(1);
            else ++blocks.back();
        }
        out.push_back(PathType{true, blocks});
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleType cycle_from_arcs(const std::vector<bool>& arcs) {
    const size_t m = arcs.size();
    if (m < 3) throw std::invalid_argument("cycle order must be at least 3");
    bool all_same = std::all_of(arcs.begin(), arcs.end(), [&](bool b) { return b == arcs[0]; });
    if (all_same) return CycleType{{static_cast<int>(m)}};
    std::vector<int> best;
    auto consider = [&](const std::vector<bool>& s) {
        for (size_t r = 0; r < m; ++r) {
            if (!s[r] || s[(r + m - 1) % m]) continue;
            std::vector<bool> rot(m);
            for (size_t i = 0; i < m; ++i) rot[i] = s[(r + i) % m];
            auto b = blocks_of(rot);
            if (b > best) best = b;
        }
    };
    consider(arcs);
    std::vector<bool> refl(m);
    for (size_t i = 0; i < m; ++i) refl[i] = !arcs[m - 1 - i];
    consider(refl);
    return CycleType{best};
}

CycleType cycle_canonical(const std::vector<int>& blocks, bool first_forward) {
    check_blocks(blocks);
    if (blocks.size() > 1 && blocks.size() % 2) throw std::invalid_argument("cycle needs an even number of blocks");
    return cycle_from_arcs(arcs_of(first_forward, blocks));
}

CycleType parse_cycle_type(std::string_view text) {
    auto blocks = parse_list(text);
    if (blocks.size() > 1 && blocks.size() % 2) throw ParseError("cycle type needs one block or an even number");
    if (std::accumulate(blocks.begin(), blocks.end(), 0) < 3) throw ParseError("cycle order must be at least 3");
    return cycle_canonical(blocks);
}

CycleType dual_cycle_type(const CycleType& c) {
    auto a = c.arcs();
    for (size_t i = 0; i < a.size(); ++i) a[i] = !a[i];
    return cycle_from_arcs(a);
}

CycleType directed_cycle(int order) { return CycleType{{order}}; }

std::vector<CycleType> enumerate_cycle_types(int order, bool include_directed) {
    if (order < 3) throw std::invalid_argument("cycle order must be at least 3");
    std::vector<CycleType> out;
    for (std::uint32_t s = 0; s < (1u << order); ++s) {
        std::vector<bool> a(order);
        for (int i = 0; i < order; ++i) a[i] = s >> i & 1;
        auto c = cycle_from_arcs(a);
        if (c.directed() && !include_directed) continue;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tk
