#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tk/patterns.hpp"
#include "tk/tournament.hpp"

namespace tk {

using Embedding = std::vector<int>;

struct SearchConstraints {
    std::optional<Mask> required_origin;
    Mask forbidden_end = 0;
    Mask required_vertices = 0;
};

bool validate_embedding(const Tournament& t, const PathType& p, const Embedding& seq);
bool validate_embedding(const Tournament& t, const CycleType& c, const Embedding& seq);

// Lexicographically least witness under ascending vertex order.
std::optional<Embedding> find_path_embedding(const Tournament& t, const PathType& p,
                                             const SearchConstraints& c = {});

// Hamiltonian origins unless allow_subpaths is set.
Mask origins(const Tournament& t, const PathType& p, bool allow_subpaths = false);

// Origins of P whose path can end somewhere other than `avoid_end`.
Mask origins_avoiding_end(const Tournament& t, const PathType& p, int avoid_end);

std::uint64_t count_path_embeddings(const Tournament& t, const PathType& p);

// Witness realises c.arcs() starting at the first vertex, closing arc last.
std::optional<Embedding> find_cycle_embedding(const Tournament& t, const CycleType& c);

std::optional<Embedding> proof_guided_cycle_embedding(const Tournament& t, const CycleType& c);

namespace detail {

// Low-level engine shared by path and cycle search: finds the least vertex
// sequence following `arcs`, starting in `start`, ending in `end`, and when
// `closing` is set, closing back to the start with that direction.
struct ArcQuery {
    std::vector<bool> arcs;
    Mask start = ~Mask{0};
    Mask end = ~Mask{0};
    Mask within = ~Mask{0};
    Mask required = 0;
    std::optional<bool> closing;
};

std::optional<Embedding> search(const Tournament& t, const ArcQuery& q);

}  // namespace detail

}  // namespace tk
