#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tk {

constexpr int kMaxOrder = 64;

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

std::vector<int> bits_to_vector(Mask m);

class VertexSet {
public:
    VertexSet() = default;
    VertexSet(int order, Mask mask);

    int order() const { return order_; }
    Mask mask() const { return mask_; }
    int size() const { return popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int v) const { return (mask_ >> v) & 1; }
    std::vector<int> vertices() const { return bits_to_vector(mask_); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int order_ = 0;
    Mask mask_ = 0;
};

class Tournament {
public:
    Tournament() = default;

    int order() const { return n_; }
    bool arc(int i, int j) const { return (out_[i] >> j) & 1; }
    Mask out(int v) const { return out_[v]; }
    Mask in(int v) const { return full_mask(n_) & ~out_[v] & ~bit(v); }
    int outdegree(int v) const { return popcount(out_[v]); }
    int indegree(int v) const { return n_ - 1 - outdegree(v); }
    Mask vertices() const { return full_mask(n_); }

    // Arc bits in pair order (0,1),(0,2),...,(n-2,n-1).
    std::string bits() const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool operator==(const Tournament& o) const { return n_ == o.n_ && out_ == o.out_; }

    friend class TournamentBuilder;

private:
    int n_ = 0;
    std::array<Mask, kMaxOrder> out_{};
    std::string label_;
};

// Mutable construction helper; starts with every arc pointing from the
// higher index to the lower one.
class TournamentBuilder {
public:
    explicit TournamentBuilder(int order);
    explicit TournamentBuilder(const Tournament& t);

    TournamentBuilder& set_arc(int from, int to);
    int order() const { return t_.n_; }
    Tournament build() const { return t_; }

private:
    Tournament t_;
};

Tournament make_tournament(int order, std::string_view bits);
Tournament make_tournament(int order, const std::vector<int>& bits);

Tournament dual(const Tournament& t);
Tournament induced(const Tournament& t, const VertexSet& x);
Tournament induced(const Tournament& t, Mask x);
Tournament remove_vertex(const Tournament& t, int v);
// Vertex i of the result is vertex perm[i] of t.
Tournament relabel(const Tournament& t, const std::vector<int>& perm);
// Appends vertex n with the given out-neighbourhood.
Tournament extend(const Tournament& t, Mask out_of_new);

Mask out_section(const Tournament& t, Mask x);
Mask in_section(const Tournament& t, Mask x);
VertexSet out_section(const Tournament& t, const VertexSet& x);
VertexSet in_section(const Tournament& t, const VertexSet& x);
bool is_strong(const Tournament& t);

Tournament transitive_tournament(int n);

// Text format: "t <n> <bits>".
Tournament parse_tournament(std::string_view text);
std::string format_tournament(const Tournament& t);

// Set printing with 1-based labels, e.g. "{1,2}".
std::string format_labels(Mask m);
std::string format_sequence(const std::vector<int>& seq);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tk
